#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spread {

/// Actor ids and layer names are plain text tokens: non-empty, no commas, no
/// whitespace (the mpx format is comma-separated).
bool is_valid_id_token(std::string_view token);

/// One named layer of a multilayer network: an undirected simple graph over a
/// subset of the network's actors. Actors are referred to by their index in
/// the owning network's sorted actor list, so index order is id order.
class Layer {
public:
    const std::string& name() const { return name_; }

    std::size_t member_count() const { return members_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Sorted actor indices of the layer's members.
    const std::vector<std::uint32_t>& members() const { return members_; }

    bool is_member(std::uint32_t actor_index) const;

    /// Sorted neighbor indices of a member; empty for non-members.
    const std::vector<std::uint32_t>& neighbors_of(std::uint32_t actor_index) const;

    /// Canonical edge list: each pair (a, b) with a < b, sorted ascending.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
        return edges_;
    }

    bool operator==(const Layer& other) const = default;

private:
    friend class NetworkBuilder;

    std::string name_;
    std::vector<std::uint32_t> members_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::vector<std::uint32_t>> adjacency_;  // indexed by actor
};

/// Immutable multilayer network. Iteration over actors, layers and neighbors
/// is lexicographic everywhere, so downstream simulations and reports are
/// reproducible. Safe to share read-only between concurrent runs.
class MultilayerNetwork {
public:
    const std::vector<std::string>& actors() const { return actors_; }
    std::size_t actor_count() const { return actors_.size(); }

    const std::string& actor_id(std::uint32_t index) const { return actors_[index]; }
    std::optional<std::uint32_t> actor_index(std::string_view id) const;

    /// Layer names in sorted order.
    std::vector<std::string> layer_names() const;
    std::size_t layer_count() const { return layers_.size(); }

    bool has_layer(std::string_view name) const;

    /// Throws Error for unknown layers.
    const Layer& layer(std::string_view name) const;

    /// Layers in name order.
    const std::vector<Layer>& layers() const { return layers_; }

    /// Sorted ids of the actors adjacent to `actor` in `layer`. Throws Error
    /// if the layer is unknown or the actor is not one of its members.
    std::vector<std::string> neighbors(std::string_view actor,
                                       std::string_view layer) const;

    bool operator==(const MultilayerNetwork& other) const = default;

private:
    friend class NetworkBuilder;

    std::vector<std::string> actors_;  // sorted
    std::vector<Layer> layers_;        // sorted by name
};

/// Accumulates actors, layers, members and edges, then validates and freezes
/// them into a MultilayerNetwork. Member/actor registration is implied by
/// add_member and add_edge; layers must be declared before use.
class NetworkBuilder {
public:
    NetworkBuilder& add_actor(const std::string& id);
    NetworkBuilder& add_layer(const std::string& name);

    /// Registers `actor` (creating it if needed) as a member of `layer`.
    NetworkBuilder& add_member(const std::string& layer, const std::string& actor);

    /// Adds an undirected edge; endpoints become members of the layer.
    /// Rejects self-loops and unknown layers; duplicates are merged.
    NetworkBuilder& add_edge(const std::string& layer, const std::string& a,
                             const std::string& b);

    /// Multiplex semantics: at build time every actor joins every layer.
    NetworkBuilder& members_everywhere();

    MultilayerNetwork build() const;

private:
    struct LayerDraft {
        std::vector<std::string> members;
        std::vector<std::pair<std::string, std::string>> edges;
    };

    std::vector<std::string> actors_;
    std::vector<std::pair<std::string, LayerDraft>> layers_;  // insertion order
    bool members_everywhere_ = false;

    LayerDraft* find_layer(const std::string& name);
};

// ---- mpx interchange format ------------------------------------------------
//
// Supported subset (text, UTF-8, '\n' line endings, '--' comment lines):
//
//   #TYPE multiplex
//   #LAYERS
//   <name>,UNDIRECTED
//   #ACTORS            (optional; union of edge endpoints otherwise)
//   <actor>
//   #EDGES
//   <actor1>,<actor2>,<layer>
//
// Only undirected multiplex networks are representable: every actor belongs
// to every layer. Directed layers are rejected.

/// Parses an mpx file. Throws ParseError with a line number on malformed
/// section headers, unknown layers in edge rows, or self-loops.
MultilayerNetwork load_mpx(const std::string& path);

/// Same parser over an in-memory buffer; `source` names it in errors.
MultilayerNetwork load_mpx_text(std::string_view text,
                                const std::string& source = "<mpx>");

/// Canonical form: sections in fixed order, rows sorted, '\n' endings. The
/// #ACTORS section is emitted only when some actor appears in no edge.
std::string to_mpx(const MultilayerNetwork& net);

/// Writes to_mpx(net) to `path`. Throws IoError on failure.
void save_mpx(const MultilayerNetwork& net, const std::string& path);

// ---- constructors used by experiments ---------------------------------------

/// Builds a network whose layers each hold an identical copy of `edges`
/// (a flat graph replicated once per named process). Actor set is the union
/// of the endpoints; every actor is a member of every layer.
MultilayerNetwork duplicate_to_layers(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::string>& layer_names);

/// Seeded G(n, p) random graph on actors n0..n<n-1> (zero padded) in a single
/// layer `layer0`. Each of the n(n-1)/2 pairs is included independently with
/// probability p; identical (n, p, seed) yields the identical edge set.
MultilayerNetwork erdos_renyi(long n, double p, std::uint64_t seed);

/// Reads a flat edge list: rows `<actor1>,<actor2>`, '--' comments allowed.
std::vector<std::pair<std::string, std::string>> load_edge_list(
    const std::string& path);

}  // namespace spread
