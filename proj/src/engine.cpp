#include "spread/engine.hpp"

#include <algorithm>
#include <set>

#include "spread/error.hpp"

namespace spread {

Simulation::Simulation(const MultilayerNetwork& net, const CompiledModel& model)
    : net_(&net), model_(&model) {
    std::vector<std::string> problems = check_alignment(net, model);
    if (!problems.empty()) {
        std::string message = "network/model mismatch:";
        for (const std::string& p : problems) message += "\n  " + p;
        throw ExperimentError(message);
    }
    for (const ProcessSpec& p : model.processes()) {
        layer_of_process_.push_back(&net.layer(p.name));
    }
}

std::vector<std::string> Simulation::check_alignment(const MultilayerNetwork& net,
                                                     const CompiledModel& model) {
    std::vector<std::string> problems;
    for (const ProcessSpec& p : model.processes()) {
        if (!net.has_layer(p.name)) {
            problems.push_back("process '" + p.name + "' has no layer of the same name");
        }
    }
    for (const Layer& l : net.layers()) {
        if (!model.process_index(l.name())) {
            problems.push_back("layer '" + l.name() + "' has no process of the same name");
        }
    }
    return problems;
}

std::vector<std::string> Simulation::check_initial(
    const std::map<std::string, InitialProcessSpec>& initial) const {
    std::vector<std::string> problems;

    for (const auto& [name, unused] : initial) {
        if (!model_->process_index(name)) {
            problems.push_back("initial spec names unknown process '" + name + "'");
        }
    }

    for (std::size_t pi = 0; pi < model_->process_count(); ++pi) {
        const ProcessSpec& process = model_->processes()[pi];
        const Layer& layer = *layer_of_process_[pi];
        auto it = initial.find(process.name);
        if (it == initial.end()) {
            problems.push_back("no initial spec for process '" + process.name + "'");
            continue;
        }
        const InitialProcessSpec& spec = it->second;

        auto state_of = [&](const std::string& token) {
            const auto& states = process.states;
            auto pos = std::find(states.begin(), states.end(), token);
            return pos == states.end() ? -1 : static_cast<int>(pos - states.begin());
        };

        long total = 0;
        bool tokens_ok = true;
        for (const auto& [token, count] : spec.counts) {
            if (state_of(token) < 0) {
                problems.push_back("process '" + process.name +
                                   "': unknown state '" + token + "' in counts");
                tokens_ok = false;
            }
            if (count < 0) {
                problems.push_back("process '" + process.name + "': negative count for '" +
                                   token + "'");
                tokens_ok = false;
            }
            total += count;
        }
        if (tokens_ok && total != static_cast<long>(layer.member_count())) {
            problems.push_back(
                "process '" + process.name + "': counts sum to " + std::to_string(total) +
                " but layer has " + std::to_string(layer.member_count()) + " members");
        }

        std::set<std::string> seen;
        std::map<std::string, long> pinned_per_state;
        for (const auto& [token, actors] : spec.explicit_actors) {
            if (state_of(token) < 0) {
                problems.push_back("process '" + process.name +
                                   "': unknown state '" + token + "' in explicit list");
                continue;
            }
            for (const std::string& actor : actors) {
                auto index = net_->actor_index(actor);
                if (!index || !layer.is_member(*index)) {
                    problems.push_back("process '" + process.name + "': explicit actor '" +
                                       actor + "' is not a member of layer '" +
                                       layer.name() + "'");
                    continue;
                }
                if (!seen.insert(actor).second) {
                    problems.push_back("process '" + process.name + "': actor '" + actor +
                                       "' pinned more than once");
                    continue;
                }
                ++pinned_per_state[token];
            }
        }
        for (const auto& [token, pinned] : pinned_per_state) {
            auto count_it = spec.counts.find(token);
            long budget = count_it == spec.counts.end() ? 0 : count_it->second;
            if (pinned > budget) {
                problems.push_back("process '" + process.name + "': " +
                                   std::to_string(pinned) + " actors pinned to state '" +
                                   token + "' but its count is " + std::to_string(budget));
            }
        }
    }
    return problems;
}

NodeStateMap Simulation::initial_states(
    const std::map<std::string, InitialProcessSpec>& initial, std::uint64_t seed) const {
    std::vector<std::string> problems = check_initial(initial);
    if (!problems.empty()) {
        std::string message = "invalid initial states:";
        for (const std::string& p : problems) message += "\n  " + p;
        throw ExperimentError(message);
    }

    NodeStateMap states(model_->process_count(), net_->actor_count());
    Rng rng(seed, kStreamInitial);

    for (std::size_t pi = 0; pi < model_->process_count(); ++pi) {
        const ProcessSpec& process = model_->processes()[pi];
        const Layer& layer = *layer_of_process_[pi];
        const InitialProcessSpec& spec = initial.at(process.name);

        std::map<std::string, long> remaining = spec.counts;
        std::set<std::uint32_t> pinned;
        for (const auto& [token, actors] : spec.explicit_actors) {
            auto pos = std::find(process.states.begin(), process.states.end(), token);
            int state = static_cast<int>(pos - process.states.begin());
            for (const std::string& actor : actors) {
                std::uint32_t index = *net_->actor_index(actor);
                states.set_local(pi, index, state);
                pinned.insert(index);
                --remaining[token];
            }
        }

        std::vector<std::uint32_t> rest;
        for (std::uint32_t member : layer.members()) {
            if (!pinned.count(member)) rest.push_back(member);
        }
        rng.shuffle(rest);

        std::size_t cursor = 0;
        for (std::size_t si = 0; si < process.states.size(); ++si) {
            auto it = remaining.find(process.states[si]);
            long take = it == remaining.end() ? 0 : it->second;
            for (long i = 0; i < take; ++i) {
                states.set_local(pi, rest[cursor++], static_cast<int>(si));
            }
        }
    }
    return states;
}

std::optional<std::size_t> Simulation::global_of(const NodeStateMap& states,
                                                 std::uint32_t actor) const {
    GlobalCoords coords(model_->process_count());
    for (std::size_t pi = 0; pi < model_->process_count(); ++pi) {
        int local = states.local(pi, actor);
        if (local == NodeStateMap::kAbsent) return std::nullopt;
        coords[pi] = static_cast<std::uint8_t>(local);
    }
    return model_->global_index(coords);
}

std::size_t Simulation::epoch_step(NodeStateMap& states, Rng& rng,
                                   std::vector<TransitionEvent>* events) const {
    std::size_t moves = 0;
    for (std::size_t pi = 0; pi < model_->process_count(); ++pi) {
        const Layer& layer = *layer_of_process_[pi];
        for (std::uint32_t v : layer.members()) {
            int v_local = states.local(pi, v);
            // Recomputed per node: earlier nodes and layers may have already
            // changed coordinates this epoch.
            std::optional<std::size_t> v_global = global_of(states, v);
            for (std::uint32_t u : layer.neighbors_of(v)) {
                int u_local = states.local(pi, u);
                if (u_local == v_local) continue;
                // An absent coordinate elsewhere makes the relation undefined;
                // the trial still consumes its draw but can never fire.
                double p = v_global ? model_->weight_at(*v_global, pi,
                                                        static_cast<std::size_t>(u_local))
                                    : 0.0;
                if (rng.bernoulli(p)) {
                    states.set_local(pi, v, u_local);
                    ++moves;
                    if (events) {
                        events->push_back({v, static_cast<std::uint32_t>(pi), *v_global,
                                           static_cast<std::uint8_t>(v_local),
                                           static_cast<std::uint8_t>(u_local)});
                    }
                    break;  // one move per node per process per epoch
                }
            }
        }
    }
    return moves;
}

std::vector<std::vector<long>> Simulation::count_states(const NodeStateMap& states) const {
    std::vector<std::vector<long>> counts;
    for (std::size_t pi = 0; pi < model_->process_count(); ++pi) {
        std::vector<long> row(model_->state_count(pi), 0);
        for (std::uint32_t member : layer_of_process_[pi]->members()) {
            int local = states.local(pi, member);
            if (local != NodeStateMap::kAbsent) ++row[static_cast<std::size_t>(local)];
        }
        counts.push_back(std::move(row));
    }
    return counts;
}

std::optional<std::string> Simulation::state_token(const NodeStateMap& states,
                                                   std::string_view actor,
                                                   std::string_view process) const {
    auto actor_ix = net_->actor_index(actor);
    if (!actor_ix) throw Error("unknown actor '" + std::string(actor) + "'");
    auto process_ix = model_->process_index(process);
    if (!process_ix) throw Error("unknown process '" + std::string(process) + "'");
    int local = states.local(*process_ix, *actor_ix);
    if (local == NodeStateMap::kAbsent) return std::nullopt;
    return model_->processes()[*process_ix].states[static_cast<std::size_t>(local)];
}

ExperimentLog Simulation::perform_propagation(const ExperimentConfig& config) const {
    if (config.epochs < 0) throw ExperimentError("epochs must be >= 0");

    ExperimentLog log;
    for (const ProcessSpec& p : model_->processes()) {
        log.processes.push_back({p.name, p.states});
    }
    log.model_report = model_->describe();
    log.network_report = network_report_text(*net_);

    NodeStateMap states = initial_states(config.initial, config.seed);
    log.snapshots.push_back({0, count_states(states), 0});

    Rng rng(config.seed, kStreamTrials);
    for (long epoch = 1; epoch <= config.epochs; ++epoch) {
        std::size_t moves = epoch_step(states, rng);
        log.snapshots.push_back({epoch, count_states(states), moves});
    }
    return log;
}

}  // namespace spread
