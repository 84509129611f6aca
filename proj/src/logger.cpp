#include "spread/logger.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "spread/error.hpp"
#include "spread/net.hpp"

namespace spread {

std::size_t ExperimentLog::total_transitions() const {
    std::size_t total = 0;
    for (const EpochSnapshot& s : snapshots) total += s.transitions;
    return total;
}

std::size_t ExperimentLog::process_index(const std::string& name) const {
    for (std::size_t i = 0; i < processes.size(); ++i) {
        if (processes[i].name == name) return i;
    }
    throw Error("unknown process '" + name + "' in experiment log");
}

std::string to_csv(const ExperimentLog& log, const std::string& process) {
    std::size_t pi = log.process_index(process);
    std::string out = "epoch";
    for (const std::string& state : log.processes[pi].states) {
        out += ',';
        out += state;
    }
    out += '\n';
    for (const EpochSnapshot& snapshot : log.snapshots) {
        out += std::to_string(snapshot.epoch);
        for (long count : snapshot.counts[pi]) {
            out += ',';
            out += std::to_string(count);
        }
        out += '\n';
    }
    return out;
}

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fixed1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

}  // namespace

std::string to_svg(const ExperimentLog& log, const std::string& process) {
    std::size_t pi = log.process_index(process);
    const auto& states = log.processes[pi].states;
    if (log.snapshots.empty()) throw Error("cannot chart an empty log");

    const double width = 800, height = 600;
    const double left = 60, right = 660, top = 50, bottom = 550;

    long max_epoch = log.snapshots.back().epoch;
    long max_count = 1;
    for (const EpochSnapshot& s : log.snapshots) {
        for (long c : s.counts[pi]) max_count = std::max(max_count, c);
    }

    auto x_of = [&](long epoch) {
        return left + (right - left) * static_cast<double>(epoch) /
                          static_cast<double>(std::max<long>(max_epoch, 1));
    };
    auto y_of = [&](long count) {
        return bottom - (bottom - top) * static_cast<double>(count) /
                            static_cast<double>(max_count);
    };

    std::string svg =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fixed1(width) + "\" height=\"" +
           fixed1(height) + "\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"" + fixed1((left + right) / 2) +
           "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" +
           xml_escape(process) + " dynamics</text>\n";
    svg += "<rect x=\"" + fixed1(left) + "\" y=\"" + fixed1(top) + "\" width=\"" +
           fixed1(right - left) + "\" height=\"" + fixed1(bottom - top) +
           "\" fill=\"none\" stroke=\"#333333\"/>\n";

    // axis ticks: five on y, three on x
    for (int t = 0; t <= 4; ++t) {
        long value = max_count * t / 4;
        double y = y_of(value);
        svg += "<line x1=\"" + fixed1(left - 5) + "\" y1=\"" + fixed1(y) + "\" x2=\"" +
               fixed1(left) + "\" y2=\"" + fixed1(y) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + fixed1(left - 9) + "\" y=\"" + fixed1(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               std::to_string(value) + "</text>\n";
    }
    for (int t = 0; t <= 2; ++t) {
        long value = max_epoch * t / 2;
        double x = x_of(value);
        svg += "<line x1=\"" + fixed1(x) + "\" y1=\"" + fixed1(bottom) + "\" x2=\"" +
               fixed1(x) + "\" y2=\"" + fixed1(bottom + 5) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + fixed1(x) + "\" y=\"" + fixed1(bottom + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               std::to_string(value) + "</text>\n";
    }
    svg += "<text x=\"" + fixed1((left + right) / 2) + "\" y=\"" + fixed1(bottom + 40) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
           "epoch</text>\n";

    for (std::size_t si = 0; si < states.size(); ++si) {
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::string points;
        for (const EpochSnapshot& s : log.snapshots) {
            if (!points.empty()) points += ' ';
            points += fixed1(x_of(s.epoch)) + "," + fixed1(y_of(s.counts[pi][si]));
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";

        // legend entry
        double ly = top + 16 + 22 * static_cast<double>(si);
        svg += "<line x1=\"672\" y1=\"" + fixed1(ly - 4) + "\" x2=\"700\" y2=\"" +
               fixed1(ly - 4) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"706\" y=\"" + fixed1(ly) +
               "\" font-family=\"sans-serif\" font-size=\"13\">" + xml_escape(states[si]) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string network_report_text(const MultilayerNetwork& net) {
    std::string out = "multilayer network\n";
    out += "actors: " + std::to_string(net.actor_count()) + "\n";
    out += "layers (" + std::to_string(net.layer_count()) + "):\n";
    for (const Layer& layer : net.layers()) {
        out += "  " + layer.name() + ": " + std::to_string(layer.member_count()) +
               " members, " + std::to_string(layer.edge_count()) + " edges\n";
    }
    return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

std::vector<std::string> write_report(const ExperimentLog& log,
                                      const std::string& out_dir) {
    if (log.snapshots.empty() || log.processes.empty()) {
        throw Error("cannot report an empty experiment log");
    }
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + out_dir + "': " + ec.message());

    std::vector<std::string> written;
    for (const auto& process : log.processes) {
        std::string name = process.name + "_propagation.csv";
        write_file(dir / name, to_csv(log, process.name));
        written.push_back(name);
    }
    write_file(dir / "network_report.txt", log.network_report);
    written.push_back("network_report.txt");
    write_file(dir / "model_report.txt", log.model_report);
    written.push_back("model_report.txt");
    for (const auto& process : log.processes) {
        std::string name = process.name + "_dynamics.svg";
        write_file(dir / name, to_svg(log, process.name));
        written.push_back(name);
    }
    return written;
}

}  // namespace spread
