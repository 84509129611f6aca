#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace spread {

class MultilayerNetwork;

/// State distribution after one epoch: per process, one actor count per local
/// state (in declared state order). Counts over a process always sum to the
/// number of members of its layer.
struct EpochSnapshot {
    long epoch = 0;
    std::vector<std::vector<long>> counts;  // [process][state]
    std::size_t transitions = 0;            // moves made during this epoch
};

/// Everything a finished experiment leaves behind: snapshots for epochs
/// 0..epochs (index 0 is the initial distribution) plus the text reports of
/// the model and network it ran on. Self-describing; report generation needs
/// nothing else.
struct ExperimentLog {
    struct ProcessInfo {
        std::string name;
        std::vector<std::string> states;
    };

    std::vector<ProcessInfo> processes;
    std::vector<EpochSnapshot> snapshots;
    std::string model_report;
    std::string network_report;

    long epochs() const { return static_cast<long>(snapshots.size()) - 1; }
    std::size_t total_transitions() const;

    /// Index of a process by name; throws Error when absent.
    std::size_t process_index(const std::string& name) const;
};

/// CSV for one process: header `epoch,<state_1>,...,<state_k>` in declared
/// state order, one row per snapshot, integer counts, '\n' endings.
std::string to_csv(const ExperimentLog& log, const std::string& process);

/// SVG line chart (800x600) for one process: one polyline per state over
/// epochs, with a legend naming the state tokens.
std::string to_svg(const ExperimentLog& log, const std::string& process);

/// Writes the report bundle into `out_dir` (created if missing):
///   <process>_propagation.csv   per process
///   network_report.txt
///   model_report.txt
///   <process>_dynamics.svg      per process
/// Returns the file names written. Throws Error on an empty log and IoError
/// on filesystem failure.
std::vector<std::string> write_report(const ExperimentLog& log,
                                      const std::string& out_dir);

/// Per-layer summary text (name, member count, edge count) used for
/// network_report.txt.
std::string network_report_text(const MultilayerNetwork& net);

}  // namespace spread
