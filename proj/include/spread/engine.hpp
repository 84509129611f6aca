#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spread/logger.hpp"
#include "spread/model.hpp"
#include "spread/net.hpp"
#include "spread/rng.hpp"

namespace spread {

/// Local state of every (process, actor) pair. kAbsent marks actors that are
/// not members of the process's layer; they never take part in that process.
class NodeStateMap {
public:
    static constexpr int kAbsent = -1;

    NodeStateMap() = default;
    NodeStateMap(std::size_t process_count, std::size_t actor_count)
        : states_(process_count, std::vector<std::int16_t>(actor_count, kAbsent)) {}

    int local(std::size_t process, std::uint32_t actor) const {
        return states_[process][actor];
    }
    void set_local(std::size_t process, std::uint32_t actor, int state) {
        states_[process][actor] = static_cast<std::int16_t>(state);
    }

    bool operator==(const NodeStateMap&) const = default;

private:
    std::vector<std::vector<std::int16_t>> states_;
};

/// Initial distribution for one process: target count per state token (counts
/// must sum to the layer's member count) plus optional pinned assignments,
/// state token -> actor ids. Pinned actors count towards their state's total.
struct InitialProcessSpec {
    std::map<std::string, long> counts;
    std::map<std::string, std::vector<std::string>> explicit_actors;
};

/// Declarative description of one experiment run.
struct ExperimentConfig {
    long epochs = 0;
    std::uint64_t seed = 0;
    std::map<std::string, InitialProcessSpec> initial;  // keyed by process name
};

/// One successful state change, for tests and tracing.
struct TransitionEvent {
    std::uint32_t actor;
    std::uint32_t process;
    std::size_t source_global;  // global-state index of the actor before the move
    std::uint8_t from_local;
    std::uint8_t to_local;
};

/// Binds an immutable network to an immutable compiled model (process i runs
/// on the layer with the same name) and executes epoch-based propagation.
///
/// Scan order is fixed: processes in registration order, layer members and
/// their neighbours in lexicographic order. Each epoch a node is tested
/// against its neighbours one by one; the first successful Bernoulli trial
/// adopts the neighbour's local state and ends the node's scan for that
/// process. Updates land in place, so later nodes observe them within the
/// same epoch. One seeded stream feeds all trials, making whole trajectories
/// a pure function of (network, model, config).
///
/// A Simulation is itself immutable; concurrent runs only need their own
/// NodeStateMap and Rng.
class Simulation {
public:
    /// Throws ExperimentError unless process and layer names align one-to-one.
    Simulation(const MultilayerNetwork& net, const CompiledModel& model);

    const MultilayerNetwork& network() const { return *net_; }
    const CompiledModel& model() const { return *model_; }

    /// Name-alignment diagnostics; empty means the pair is runnable.
    static std::vector<std::string> check_alignment(const MultilayerNetwork& net,
                                                    const CompiledModel& model);

    /// Initial-spec diagnostics (missing specs, bad tokens, count sums,
    /// pinned actors outside the layer); empty means valid.
    std::vector<std::string> check_initial(
        const std::map<std::string, InitialProcessSpec>& initial) const;

    /// Assigns initial states: pinned actors verbatim, the rest by a seeded
    /// permutation of the remaining members filled in declared state order.
    /// Deterministic per seed. Throws ExperimentError when check_initial
    /// reports anything.
    NodeStateMap initial_states(const std::map<std::string, InitialProcessSpec>& initial,
                                std::uint64_t seed) const;

    /// Runs one epoch over all layers; returns the number of transitions.
    /// Events, when requested, record every move in execution order.
    std::size_t epoch_step(NodeStateMap& states, Rng& rng,
                           std::vector<TransitionEvent>* events = nullptr) const;

    /// Full experiment: initial states, `epochs` epoch steps, one snapshot
    /// per epoch (plus epoch 0). Bit-identical output for identical inputs.
    ExperimentLog perform_propagation(const ExperimentConfig& config) const;

    /// Per-process, per-state actor counts (declared state order).
    std::vector<std::vector<long>> count_states(const NodeStateMap& states) const;

    /// State token of (actor, process), or nullopt when the actor is absent
    /// from the process's layer. Throws Error for unknown names.
    std::optional<std::string> state_token(const NodeStateMap& states,
                                           std::string_view actor,
                                           std::string_view process) const;

private:
    const MultilayerNetwork* net_;
    const CompiledModel* model_;
    std::vector<const Layer*> layer_of_process_;  // registration order

    /// Global-state index of an actor, or nullopt if any coordinate is absent.
    std::optional<std::size_t> global_of(const NodeStateMap& states,
                                         std::uint32_t actor) const;
};

}  // namespace spread
