#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace spread {

/// Whether the first and last states of a process count as neighbours.
/// Cyclic supports loss-of-immunity style wrap-around transitions (r -> s);
/// linear restricts moves to consecutive states only.
enum class AdjacencyPolicy { kLinear, kCyclic };

std::string_view to_string(AdjacencyPolicy policy);
std::optional<AdjacencyPolicy> adjacency_policy_from(std::string_view text);

/// One process: a name (tied to the same-named network layer at simulation
/// time) and an ordered list of at least two local states.
struct ProcessSpec {
    std::string name;
    std::vector<std::string> states;

    bool operator==(const ProcessSpec&) const = default;
};

/// A global state is one local state per process, in registration order. Its
/// text form joins the tokens with '.', e.g. "s.n.u".
using GlobalCoords = std::vector<std::uint8_t>;

class CompiledModel;

/// Collects process definitions, then compiles them into the product-grid
/// model. Registration order is preserved and defines coordinate order.
class ModelBuilder {
public:
    /// Appends a process. Throws ModelError on duplicate names, fewer than
    /// two states, duplicate state tokens, or tokens containing '.' or '>'.
    ModelBuilder& add_process(const std::string& name,
                              const std::vector<std::string>& states);

    /// Expands the processes into a CompiledModel. Every transition allowed
    /// under `policy` starts at `background` weight (or 0 when absent), in
    /// both directions.
    CompiledModel compile(std::optional<double> background = std::nullopt,
                          AdjacencyPolicy policy = AdjacencyPolicy::kCyclic) const;

    const std::vector<ProcessSpec>& processes() const { return processes_; }

private:
    std::vector<ProcessSpec> processes_;
};

/// The propagation model: all global states (the Cartesian product of the
/// process state lists, laid out as an orthogonal grid) plus one weight table
/// per process. A weight table entry exists only for moves along that
/// process's axis between policy-adjacent states; everything else is
/// permanently zero. Weights are per-transition Bernoulli probabilities and
/// are not normalised across outgoing transitions.
///
/// The model is mutable only through set_transition during experiment setup;
/// the engine takes it by const reference and never changes it.
class CompiledModel {
public:
    const std::vector<ProcessSpec>& processes() const { return processes_; }
    std::size_t process_count() const { return processes_.size(); }
    AdjacencyPolicy policy() const { return policy_; }
    std::optional<double> background() const { return background_; }

    std::optional<std::size_t> process_index(std::string_view name) const;
    std::size_t state_count(std::size_t process) const {
        return processes_[process].states.size();
    }

    /// Size of the product grid.
    std::size_t global_state_count() const { return global_count_; }

    /// Number of directed transitions the policy allows across all axes.
    std::size_t allowed_transition_count() const;

    /// Sets the weight of one allowed transition, addressed by global-state
    /// text ("s.n.u" -> "i.n.u"). Throws ModelError for unknown tokens,
    /// identical states, diagonal moves (more than one coordinate changes),
    /// non-adjacent state pairs, or weights outside [0, 1].
    void set_transition(std::string_view source, std::string_view target, double w);

    /// Total lookup: the stored weight for allowed transitions and 0 for any
    /// other well-formed pair (identical, diagonal or non-adjacent). Throws
    /// ModelError only on malformed global-state text.
    double weight(std::string_view source, std::string_view target) const;

    /// Deterministic text report: processes, policy, grid size and every
    /// nonzero transition in lexicographic order.
    std::string describe() const;

    // -- index-level access (engine hot path and tests) --

    /// Parses "tok.tok.tok" into per-process state indices.
    GlobalCoords parse_global(std::string_view text) const;
    std::string global_text(const GlobalCoords& coords) const;

    std::size_t global_index(const GlobalCoords& coords) const;
    GlobalCoords global_coords(std::size_t index) const;

    /// Weight of moving process `process` to local state `target_local` from
    /// the full source state `source_global`. Zero when not allowed.
    double weight_at(std::size_t source_global, std::size_t process,
                     std::size_t target_local) const {
        return tables_[process][source_global * state_counts_[process] + target_local];
    }

    /// True when local states a and b of `process` are neighbours under the
    /// compiled policy.
    bool adjacent(std::size_t process, std::size_t a, std::size_t b) const;

    /// All transitions with nonzero weight as (source text, target text,
    /// weight), sorted lexicographically by "source->target".
    std::vector<std::tuple<std::string, std::string, double>> nonzero_transitions() const;

private:
    friend class ModelBuilder;

    std::vector<ProcessSpec> processes_;
    AdjacencyPolicy policy_ = AdjacencyPolicy::kCyclic;
    std::optional<double> background_;
    std::size_t global_count_ = 0;
    std::vector<std::size_t> state_counts_;
    std::vector<std::size_t> strides_;        // row-major, process 0 most significant
    std::vector<std::vector<double>> tables_;  // per process: global_count x state_count
};

/// Splits "src->dst" transition text into its two global-state halves.
/// Throws ModelError if the arrow is missing.
std::pair<std::string, std::string> split_transition_text(std::string_view text);

}  // namespace spread
