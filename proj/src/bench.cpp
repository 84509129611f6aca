#include "spread/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "spread/engine.hpp"
#include "spread/error.hpp"
#include "spread/text.hpp"

namespace spread {

namespace {

ExperimentConfig sir_config(long n, long epochs, std::uint64_t seed) {
    // 10% infected, nobody recovered, remainder susceptible.
    long infected = std::lround(0.10 * static_cast<double>(n));
    ExperimentConfig config;
    config.epochs = epochs;
    config.seed = seed;
    config.initial["layer0"] = {
        {{"s", n - infected}, {"i", infected}, {"r", 0}}, {}};
    return config;
}

}  // namespace

std::vector<TimingRow> run_benchmark(const BenchOptions& options) {
    if (options.sizes.empty()) throw Error("benchmark needs at least one size");
    for (std::size_t i = 0; i < options.sizes.size(); ++i) {
        if (options.sizes[i] < 1) throw Error("benchmark sizes must be positive");
        if (i > 0 && options.sizes[i] <= options.sizes[i - 1]) {
            throw Error("benchmark sizes must be strictly ascending");
        }
    }
    if (options.repetitions < 1) throw Error("benchmark needs repetitions >= 1");
    if (options.p < 0.0 || options.p > 1.0) throw Error("benchmark needs p in [0, 1]");
    if (options.epochs < 0) throw Error("benchmark needs epochs >= 0");

    CompiledModel model = ModelBuilder()
                              .add_process("layer0", {"s", "i", "r"})
                              .compile(std::nullopt, AdjacencyPolicy::kLinear);
    model.set_transition("s", "i", 0.2);
    model.set_transition("i", "r", 0.1);

    std::vector<TimingRow> rows;
    for (long n : options.sizes) {
        MultilayerNetwork net = erdos_renyi(
            n, options.p, Rng::derive(options.seed, static_cast<std::uint64_t>(n), 0));
        Simulation sim(net, model);

        std::vector<double> timings_ms;
        for (int rep = 0; rep < options.repetitions; ++rep) {
            ExperimentConfig config =
                sir_config(n, options.epochs,
                           Rng::derive(options.seed, static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>(rep) + 1));
            auto start = std::chrono::steady_clock::now();
            ExperimentLog log = sim.perform_propagation(config);
            auto stop = std::chrono::steady_clock::now();
            (void)log;
            timings_ms.push_back(
                std::chrono::duration<double, std::milli>(stop - start).count());
        }

        TimingRow row;
        row.n = n;
        row.p = options.p;
        row.repetitions = options.repetitions;
        row.min_ms = *std::min_element(timings_ms.begin(), timings_ms.end());
        row.max_ms = *std::max_element(timings_ms.begin(), timings_ms.end());
        double sum = 0.0;
        for (double t : timings_ms) sum += t;
        row.mean_ms = sum / static_cast<double>(timings_ms.size());
        if (timings_ms.size() > 1) {
            double ss = 0.0;
            for (double t : timings_ms) ss += (t - row.mean_ms) * (t - row.mean_ms);
            row.std_ms = std::sqrt(ss / static_cast<double>(timings_ms.size() - 1));
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string ms(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

}  // namespace

std::string timing_csv(const std::vector<TimingRow>& rows) {
    std::string out = "n,p,repetitions,mean_ms,std_ms,min_ms,max_ms\n";
    for (const TimingRow& row : rows) {
        out += std::to_string(row.n) + "," + format_double(row.p) + "," +
               std::to_string(row.repetitions) + "," + ms(row.mean_ms) + "," +
               ms(row.std_ms) + "," + ms(row.min_ms) + "," + ms(row.max_ms) + "\n";
    }
    return out;
}

void print_timing_table(const std::vector<TimingRow>& rows, std::ostream& out) {
    char line[160];
    std::snprintf(line, sizeof(line), "%8s %8s %6s %12s %12s %12s %12s\n", "n", "p",
                  "reps", "mean_ms", "std_ms", "min_ms", "max_ms");
    out << line;
    for (const TimingRow& row : rows) {
        std::snprintf(line, sizeof(line), "%8ld %8g %6d %12.3f %12.3f %12.3f %12.3f\n",
                      row.n, row.p, row.repetitions, row.mean_ms, row.std_ms, row.min_ms,
                      row.max_ms);
        out << line;
    }
}

}  // namespace spread
