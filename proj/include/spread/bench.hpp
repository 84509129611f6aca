#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spread {

/// Timing summary for one graph size.
struct TimingRow {
    long n = 0;
    double p = 0.0;
    int repetitions = 0;
    double mean_ms = 0.0;
    double std_ms = 0.0;  // sample standard deviation; 0 for a single repetition
    double min_ms = 0.0;
    double max_ms = 0.0;
};

/// Knobs of the timing experiment. The scenario is fixed: a single-process
/// SIR spread (states s,i,r; w(s->i)=0.2, w(i->r)=0.1, nothing else) over a
/// seeded G(n, p) graph, 10% infected at epoch 0, run through the ordinary
/// engine with no shortcuts.
struct BenchOptions {
    std::vector<long> sizes;  // ascending graph sizes
    double p = 0.01;
    int repetitions = 10;
    long epochs = 50;
    std::uint64_t seed = 1;
};

/// Runs the experiment once per (size, repetition), wall-clocking each full
/// propagation (initial states + all epochs). Every repetition gets its own
/// derived seed. Sequential on purpose: parallel runs would pollute timings.
std::vector<TimingRow> run_benchmark(const BenchOptions& options);

/// CSV with header `n,p,repetitions,mean_ms,std_ms,min_ms,max_ms`.
std::string timing_csv(const std::vector<TimingRow>& rows);

/// Aligned human-readable table.
void print_timing_table(const std::vector<TimingRow>& rows, std::ostream& out);

}  // namespace spread
