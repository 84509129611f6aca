#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spread/engine.hpp"
#include "spread/model.hpp"
#include "spread/net.hpp"

namespace spread {

/// Where the experiment's network comes from.
struct NetworkSource {
    enum class Type { kMpx, kErdosRenyi, kDuplicate, kBundled };

    Type type = Type::kMpx;
    std::string path;                      // mpx
    long n = 0;                            // erdos_renyi
    double p = 0.0;                        // erdos_renyi
    std::string edges_path;                // duplicate
    std::string name;                      // bundled dataset name
    std::vector<std::string> layer_names;  // duplicate + bundled
};

/// One experiment, fully determined by a single JSON file. See README for the
/// schema. Reproducibility beats convenience: there are no flag overrides.
struct RunConfig {
    NetworkSource network;
    std::vector<ProcessSpec> processes;
    AdjacencyPolicy policy = AdjacencyPolicy::kCyclic;
    std::optional<double> background;
    std::vector<std::pair<std::string, double>> transitions;  // "src->dst" -> w
    ExperimentConfig experiment;
    std::string output_dir;
};

/// Parses the JSON config at `path`. Throws IoError when the file cannot be
/// read and ConfigError on syntax or schema violations.
RunConfig load_run_config(const std::string& path);

/// Same parser over an in-memory document.
RunConfig parse_run_config(const std::string& json_text,
                           const std::string& source = "<config>");

struct BuiltExperiment {
    MultilayerNetwork net;
    CompiledModel model;
};

/// Materialises the network and model and collects every violation it can
/// find: unloadable sources, illegal transitions, process/layer mismatches,
/// bad initial states. Returns the diagnostics (empty means runnable); the
/// built experiment lands in `built` when construction succeeded.
std::vector<std::string> validate_run_config(const RunConfig& config,
                                             std::optional<BuiltExperiment>* built = nullptr);

/// One-paragraph summary for `validate`: process count, grid size, allowed
/// transitions, layer sizes.
std::string config_summary(const RunConfig& config, const BuiltExperiment& built);

/// Text of the embedded Les Misérables co-occurrence network (77 actors,
/// 254 edges) in mpx form; the `bundled: lesmis` network source uses it.
const char* lesmis_mpx();

}  // namespace spread
