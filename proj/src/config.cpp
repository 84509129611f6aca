#include "spread/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spread/error.hpp"

namespace spread {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const std::string& key,
                          const std::string& context) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError(context + ": missing required field '" + key + "'");
    }
    return *it;
}

std::string require_string(const json& obj, const std::string& key,
                           const std::string& context) {
    const json& value = require_field(obj, key, context);
    if (!value.is_string()) {
        throw ConfigError(context + ": field '" + key + "' must be a string");
    }
    return value.get<std::string>();
}

std::vector<std::string> require_string_array(const json& obj, const std::string& key,
                                              const std::string& context) {
    const json& value = require_field(obj, key, context);
    if (!value.is_array()) {
        throw ConfigError(context + ": field '" + key + "' must be an array of strings");
    }
    std::vector<std::string> out;
    for (const json& item : value) {
        if (!item.is_string()) {
            throw ConfigError(context + ": field '" + key + "' must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

NetworkSource parse_network(const json& j) {
    if (!j.is_object()) throw ConfigError("network: must be an object");
    NetworkSource src;
    std::string type = require_string(j, "type", "network");
    if (type == "mpx") {
        src.type = NetworkSource::Type::kMpx;
        src.path = require_string(j, "path", "network");
    } else if (type == "erdos_renyi") {
        src.type = NetworkSource::Type::kErdosRenyi;
        const json& n = require_field(j, "n", "network");
        const json& p = require_field(j, "p", "network");
        if (!n.is_number_integer() || n.get<long>() < 1) {
            throw ConfigError("network: 'n' must be an integer >= 1");
        }
        if (!p.is_number() || p.get<double>() < 0.0 || p.get<double>() > 1.0) {
            throw ConfigError("network: 'p' must be a number in [0, 1]");
        }
        src.n = n.get<long>();
        src.p = p.get<double>();
    } else if (type == "duplicate") {
        src.type = NetworkSource::Type::kDuplicate;
        src.edges_path = require_string(j, "edges_path", "network");
        src.layer_names = require_string_array(j, "layer_names", "network");
    } else if (type == "bundled") {
        src.type = NetworkSource::Type::kBundled;
        src.name = require_string(j, "name", "network");
        src.layer_names = require_string_array(j, "layer_names", "network");
    } else {
        throw ConfigError("network: unknown type '" + type +
                          "' (expected mpx, erdos_renyi, duplicate or bundled)");
    }
    return src;
}

RunConfig parse_document(const json& doc, const std::string& source) {
    if (!doc.is_object()) throw ConfigError(source + ": top level must be an object");
    RunConfig config;

    config.network = parse_network(require_field(doc, "network", source));

    const json& model = require_field(doc, "model", source);
    if (!model.is_object()) throw ConfigError("model: must be an object");
    const json& processes = require_field(model, "processes", "model");
    if (!processes.is_array() || processes.empty()) {
        throw ConfigError("model: 'processes' must be a non-empty array");
    }
    for (const json& p : processes) {
        if (!p.is_object()) throw ConfigError("model: each process must be an object");
        ProcessSpec spec;
        spec.name = require_string(p, "name", "model.processes");
        spec.states = require_string_array(p, "states", "model.processes");
        config.processes.push_back(std::move(spec));
    }
    if (auto it = model.find("adjacency_policy"); it != model.end()) {
        if (!it->is_string()) {
            throw ConfigError("model: 'adjacency_policy' must be a string");
        }
        auto policy = adjacency_policy_from(it->get<std::string>());
        if (!policy) {
            throw ConfigError("model: 'adjacency_policy' must be 'linear' or 'cyclic'");
        }
        config.policy = *policy;
    }
    if (auto it = model.find("background_weight"); it != model.end() && !it->is_null()) {
        if (!it->is_number()) {
            throw ConfigError("model: 'background_weight' must be a number or null");
        }
        config.background = it->get<double>();
    }
    if (auto it = model.find("transitions"); it != model.end()) {
        if (!it->is_object()) {
            throw ConfigError("model: 'transitions' must map 'src->dst' to weights");
        }
        for (const auto& [key, value] : it->items()) {
            if (!value.is_number()) {
                throw ConfigError("model: transition '" + key + "' must map to a number");
            }
            config.transitions.emplace_back(key, value.get<double>());
        }
    }

    const json& initial = require_field(doc, "initial", source);
    if (!initial.is_object()) {
        throw ConfigError("initial: must map process names to state specs");
    }
    for (const auto& [process, spec_json] : initial.items()) {
        if (!spec_json.is_object()) {
            throw ConfigError("initial." + process + ": must be an object");
        }
        InitialProcessSpec spec;
        const json& counts = require_field(spec_json, "counts", "initial." + process);
        if (!counts.is_object()) {
            throw ConfigError("initial." + process + ": 'counts' must map states to ints");
        }
        for (const auto& [state, count] : counts.items()) {
            if (!count.is_number_integer()) {
                throw ConfigError("initial." + process + ": count for '" + state +
                                  "' must be an integer");
            }
            spec.counts[state] = count.get<long>();
        }
        if (auto it = spec_json.find("explicit"); it != spec_json.end()) {
            if (!it->is_object()) {
                throw ConfigError("initial." + process +
                                  ": 'explicit' must map states to actor arrays");
            }
            for (const auto& [state, actors] : it->items()) {
                if (!actors.is_array()) {
                    throw ConfigError("initial." + process + ".explicit." + state +
                                      ": must be an array of actor ids");
                }
                std::vector<std::string> ids;
                for (const json& actor : actors) {
                    if (!actor.is_string()) {
                        throw ConfigError("initial." + process + ".explicit." + state +
                                          ": must contain only strings");
                    }
                    ids.push_back(actor.get<std::string>());
                }
                spec.explicit_actors[state] = std::move(ids);
            }
        }
        config.experiment.initial[process] = std::move(spec);
    }

    const json& epochs = require_field(doc, "epochs", source);
    if (!epochs.is_number_integer() || epochs.get<long>() < 0) {
        throw ConfigError("epochs: must be an integer >= 0");
    }
    config.experiment.epochs = epochs.get<long>();

    const json& seed = require_field(doc, "seed", source);
    if (!seed.is_number_integer()) throw ConfigError("seed: must be an integer");
    config.experiment.seed = seed.get<std::uint64_t>();

    config.output_dir = require_string(doc, "output_dir", source);
    if (config.output_dir.empty()) throw ConfigError("output_dir: must not be empty");

    return config;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return parse_document(doc, source);
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str(), path);
}

namespace {

std::optional<MultilayerNetwork> build_network(const NetworkSource& source,
                                               std::uint64_t seed,
                                               std::vector<std::string>& diagnostics) {
    try {
        switch (source.type) {
            case NetworkSource::Type::kMpx:
                return load_mpx(source.path);
            case NetworkSource::Type::kErdosRenyi:
                return erdos_renyi(source.n, source.p, seed);
            case NetworkSource::Type::kDuplicate:
                return duplicate_to_layers(load_edge_list(source.edges_path),
                                           source.layer_names);
            case NetworkSource::Type::kBundled: {
                if (source.name != "lesmis") {
                    diagnostics.push_back("network: unknown bundled dataset '" +
                                          source.name + "' (available: lesmis)");
                    return std::nullopt;
                }
                MultilayerNetwork flat = load_mpx_text(lesmis_mpx(), "lesmis");
                std::vector<std::pair<std::string, std::string>> edges;
                for (const auto& [a, b] : flat.layer("base").edges()) {
                    edges.emplace_back(flat.actor_id(a), flat.actor_id(b));
                }
                return duplicate_to_layers(edges, source.layer_names);
            }
        }
    } catch (const Error& e) {
        diagnostics.push_back(std::string("network: ") + e.what());
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::string> validate_run_config(const RunConfig& config,
                                             std::optional<BuiltExperiment>* built) {
    std::vector<std::string> diagnostics;

    std::optional<MultilayerNetwork> net =
        build_network(config.network, config.experiment.seed, diagnostics);

    std::optional<CompiledModel> model;
    try {
        ModelBuilder builder;
        for (const ProcessSpec& p : config.processes) builder.add_process(p.name, p.states);
        model = builder.compile(config.background, config.policy);
        for (const auto& [text, weight] : config.transitions) {
            try {
                auto [src, dst] = split_transition_text(text);
                model->set_transition(src, dst, weight);
            } catch (const Error& e) {
                diagnostics.push_back(std::string("transition: ") + e.what());
            }
        }
    } catch (const Error& e) {
        diagnostics.push_back(std::string("model: ") + e.what());
    }

    if (net && model) {
        std::vector<std::string> alignment = Simulation::check_alignment(*net, *model);
        diagnostics.insert(diagnostics.end(), alignment.begin(), alignment.end());
        if (alignment.empty()) {
            Simulation sim(*net, *model);
            std::vector<std::string> initial = sim.check_initial(config.experiment.initial);
            diagnostics.insert(diagnostics.end(), initial.begin(), initial.end());
            if (built) built->emplace(BuiltExperiment{std::move(*net), std::move(*model)});
        }
    }
    return diagnostics;
}

std::string config_summary(const RunConfig& config, const BuiltExperiment& built) {
    (void)config;
    std::string out;
    out += "processes: " + std::to_string(built.model.process_count()) + "\n";
    out += "global states: " + std::to_string(built.model.global_state_count()) + "\n";
    out += "allowed transitions: " +
           std::to_string(built.model.allowed_transition_count()) + "\n";
    for (const Layer& layer : built.net.layers()) {
        out += "layer " + layer.name() + ": " + std::to_string(layer.member_count()) +
               " members, " + std::to_string(layer.edge_count()) + " edges\n";
    }
    return out;
}

}  // namespace spread
