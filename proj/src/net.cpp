#include "spread/net.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "spread/error.hpp"
#include "spread/rng.hpp"

namespace spread {

bool is_valid_id_token(std::string_view token) {
    if (token.empty()) return false;
    for (unsigned char c : token) {
        if (c == ',' || std::isspace(c)) return false;
    }
    return true;
}

namespace {

void require_id_token(const std::string& token, const char* what) {
    if (!is_valid_id_token(token)) {
        throw Error(std::string(what) + " '" + token +
                    "' is not a valid token (non-empty, no commas, no whitespace)");
    }
}

}  // namespace

// ---- Layer ------------------------------------------------------------------

bool Layer::is_member(std::uint32_t actor_index) const {
    return std::binary_search(members_.begin(), members_.end(), actor_index);
}

const std::vector<std::uint32_t>& Layer::neighbors_of(std::uint32_t actor_index) const {
    static const std::vector<std::uint32_t> kEmpty;
    if (actor_index >= adjacency_.size()) return kEmpty;
    return adjacency_[actor_index];
}

// ---- MultilayerNetwork -------------------------------------------------------

std::optional<std::uint32_t> MultilayerNetwork::actor_index(std::string_view id) const {
    auto it = std::lower_bound(actors_.begin(), actors_.end(), id);
    if (it == actors_.end() || *it != id) return std::nullopt;
    return static_cast<std::uint32_t>(it - actors_.begin());
}

std::vector<std::string> MultilayerNetwork::layer_names() const {
    std::vector<std::string> names;
    names.reserve(layers_.size());
    for (const Layer& l : layers_) names.push_back(l.name());
    return names;
}

bool MultilayerNetwork::has_layer(std::string_view name) const {
    for (const Layer& l : layers_) {
        if (l.name() == name) return true;
    }
    return false;
}

const Layer& MultilayerNetwork::layer(std::string_view name) const {
    for (const Layer& l : layers_) {
        if (l.name() == name) return l;
    }
    throw Error("unknown layer '" + std::string(name) + "'");
}

std::vector<std::string> MultilayerNetwork::neighbors(std::string_view actor,
                                                      std::string_view layer_name) const {
    const Layer& l = layer(layer_name);
    auto index = actor_index(actor);
    if (!index || !l.is_member(*index)) {
        throw Error("actor '" + std::string(actor) + "' is not a member of layer '" +
                    std::string(layer_name) + "'");
    }
    std::vector<std::string> out;
    out.reserve(l.neighbors_of(*index).size());
    for (std::uint32_t n : l.neighbors_of(*index)) out.push_back(actors_[n]);
    return out;
}

// ---- NetworkBuilder ----------------------------------------------------------

NetworkBuilder::LayerDraft* NetworkBuilder::find_layer(const std::string& name) {
    for (auto& [layer_name, draft] : layers_) {
        if (layer_name == name) return &draft;
    }
    return nullptr;
}

NetworkBuilder& NetworkBuilder::add_actor(const std::string& id) {
    require_id_token(id, "actor id");
    actors_.push_back(id);
    return *this;
}

NetworkBuilder& NetworkBuilder::add_layer(const std::string& name) {
    require_id_token(name, "layer name");
    if (find_layer(name)) throw Error("duplicate layer '" + name + "'");
    layers_.emplace_back(name, LayerDraft{});
    return *this;
}

NetworkBuilder& NetworkBuilder::add_member(const std::string& layer, const std::string& actor) {
    LayerDraft* draft = find_layer(layer);
    if (!draft) throw Error("unknown layer '" + layer + "'");
    require_id_token(actor, "actor id");
    actors_.push_back(actor);
    draft->members.push_back(actor);
    return *this;
}

NetworkBuilder& NetworkBuilder::add_edge(const std::string& layer, const std::string& a,
                                         const std::string& b) {
    LayerDraft* draft = find_layer(layer);
    if (!draft) throw Error("unknown layer '" + layer + "'");
    require_id_token(a, "actor id");
    require_id_token(b, "actor id");
    if (a == b) throw Error("self-loop on actor '" + a + "' in layer '" + layer + "'");
    actors_.push_back(a);
    actors_.push_back(b);
    draft->members.push_back(a);
    draft->members.push_back(b);
    draft->edges.emplace_back(std::min(a, b), std::max(a, b));
    return *this;
}

NetworkBuilder& NetworkBuilder::members_everywhere() {
    members_everywhere_ = true;
    return *this;
}

MultilayerNetwork NetworkBuilder::build() const {
    MultilayerNetwork net;

    net.actors_ = actors_;
    std::sort(net.actors_.begin(), net.actors_.end());
    net.actors_.erase(std::unique(net.actors_.begin(), net.actors_.end()),
                      net.actors_.end());

    std::vector<std::string> names;
    for (const auto& [name, draft] : layers_) names.push_back(name);
    std::sort(names.begin(), names.end());

    auto index_of = [&](const std::string& id) {
        return static_cast<std::uint32_t>(
            std::lower_bound(net.actors_.begin(), net.actors_.end(), id) -
            net.actors_.begin());
    };

    for (const std::string& name : names) {
        const LayerDraft* draft_ptr = nullptr;
        for (const auto& [layer_name, d] : layers_) {
            if (layer_name == name) draft_ptr = &d;
        }
        const LayerDraft& draft = *draft_ptr;
        Layer layer;
        layer.name_ = name;

        std::set<std::uint32_t> members;
        if (members_everywhere_) {
            for (std::uint32_t i = 0; i < net.actors_.size(); ++i) members.insert(i);
        }
        for (const std::string& m : draft.members) members.insert(index_of(m));
        layer.members_.assign(members.begin(), members.end());

        std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (const auto& [a, b] : draft.edges) edges.emplace(index_of(a), index_of(b));
        layer.edges_.assign(edges.begin(), edges.end());

        layer.adjacency_.assign(net.actors_.size(), {});
        for (const auto& [a, b] : layer.edges_) {
            layer.adjacency_[a].push_back(b);
            layer.adjacency_[b].push_back(a);
        }
        for (auto& adj : layer.adjacency_) std::sort(adj.begin(), adj.end());

        net.layers_.push_back(std::move(layer));
    }
    return net;
}

// ---- mpx parser --------------------------------------------------------------

namespace {

enum class Section { None, Type, Layers, Actors, Edges };

std::string to_upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

MultilayerNetwork parse_mpx(std::istream& in, const std::string& source) {
    NetworkBuilder builder;
    Section section = Section::None;
    bool saw_type = false;

    std::string raw;
    long line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || raw.rfind("--", 0) == 0) continue;

        if (raw[0] == '#') {
            std::string header = raw;
            std::string value;
            std::size_t space = raw.find(' ');
            if (space != std::string::npos) {
                header = raw.substr(0, space);
                value = raw.substr(space + 1);
            }
            header = to_upper(header);
            if (header == "#TYPE") {
                if (to_upper(value) != "MULTIPLEX") {
                    throw ParseError(source, line_no,
                                     "unsupported network type '" + value +
                                         "' (only multiplex is supported)");
                }
                saw_type = true;
                section = Section::Type;
            } else if (header == "#LAYERS" && value.empty()) {
                section = Section::Layers;
            } else if (header == "#ACTORS" && value.empty()) {
                section = Section::Actors;
            } else if (header == "#EDGES" && value.empty()) {
                section = Section::Edges;
            } else {
                throw ParseError(source, line_no, "malformed section header '" + raw + "'");
            }
            continue;
        }

        try {
            switch (section) {
                case Section::None:
                case Section::Type:
                    throw Error("data row outside of any section");
                case Section::Layers: {
                    std::vector<std::string> fields = split_fields(raw);
                    if (fields.size() > 2) throw Error("too many fields in layer row");
                    if (fields.size() == 2 && to_upper(fields[1]) != "UNDIRECTED") {
                        throw Error("unsupported layer directionality '" + fields[1] +
                                    "' (only UNDIRECTED is supported)");
                    }
                    builder.add_layer(fields[0]);
                    break;
                }
                case Section::Actors: {
                    std::vector<std::string> fields = split_fields(raw);
                    if (fields.size() != 1) throw Error("too many fields in actor row");
                    builder.add_actor(fields[0]);
                    break;
                }
                case Section::Edges: {
                    std::vector<std::string> fields = split_fields(raw);
                    if (fields.size() != 3) {
                        throw Error("edge row needs exactly actor1,actor2,layer");
                    }
                    builder.add_edge(fields[2], fields[0], fields[1]);
                    break;
                }
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(source, line_no, e.what());
        }
    }
    (void)saw_type;  // #TYPE is optional on read; the writer always emits it
    return builder.members_everywhere().build();
}

}  // namespace

MultilayerNetwork load_mpx(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return parse_mpx(in, path);
}

MultilayerNetwork load_mpx_text(std::string_view text, const std::string& source) {
    std::istringstream in{std::string(text)};
    return parse_mpx(in, source);
}

std::string to_mpx(const MultilayerNetwork& net) {
    std::string out = "#TYPE multiplex\n#LAYERS\n";
    for (const Layer& layer : net.layers()) {
        out += layer.name();
        out += ",UNDIRECTED\n";
    }

    // #ACTORS only when the actor set is not recoverable from the edges.
    std::set<std::uint32_t> endpoints;
    for (const Layer& layer : net.layers()) {
        for (const auto& [a, b] : layer.edges()) {
            endpoints.insert(a);
            endpoints.insert(b);
        }
    }
    if (endpoints.size() != net.actor_count()) {
        out += "#ACTORS\n";
        for (const std::string& actor : net.actors()) {
            out += actor;
            out += '\n';
        }
    }

    out += "#EDGES\n";
    std::vector<std::array<const std::string*, 3>> rows;
    for (const Layer& layer : net.layers()) {
        for (const auto& [a, b] : layer.edges()) {
            rows.push_back({&net.actor_id(a), &net.actor_id(b), &layer.name()});
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) {
                  if (*x[0] != *y[0]) return *x[0] < *y[0];
                  if (*x[1] != *y[1]) return *x[1] < *y[1];
                  return *x[2] < *y[2];
              });
    for (const auto& row : rows) {
        out += *row[0];
        out += ',';
        out += *row[1];
        out += ',';
        out += *row[2];
        out += '\n';
    }
    return out;
}

void save_mpx(const MultilayerNetwork& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << to_mpx(net);
    if (!out) throw IoError("write to '" + path + "' failed");
}

// ---- constructors ------------------------------------------------------------

MultilayerNetwork duplicate_to_layers(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::string>& layer_names) {
    if (layer_names.empty()) throw Error("layer_names must not be empty");
    NetworkBuilder builder;
    for (const std::string& name : layer_names) builder.add_layer(name);
    for (const std::string& name : layer_names) {
        for (const auto& [a, b] : edges) builder.add_edge(name, a, b);
    }
    return builder.members_everywhere().build();
}

MultilayerNetwork erdos_renyi(long n, double p, std::uint64_t seed) {
    if (n < 1) throw Error("erdos_renyi needs n >= 1");
    if (p < 0.0 || p > 1.0) throw Error("erdos_renyi needs p in [0, 1]");

    int width = 1;
    for (long v = n - 1; v >= 10; v /= 10) ++width;
    auto actor_name = [&](long i) {
        std::string digits = std::to_string(i);
        return "n" + std::string(width - digits.size(), '0') + digits;
    };

    NetworkBuilder builder;
    builder.add_layer("layer0");
    for (long i = 0; i < n; ++i) builder.add_actor(actor_name(i));

    // One draw per unordered pair, in fixed (i, j) order, so the edge set is a
    // pure function of (n, p, seed).
    Rng rng(seed, kStreamGraph);
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            if (rng.unit() < p) builder.add_edge("layer0", actor_name(i), actor_name(j));
        }
    }
    return builder.members_everywhere().build();
}

std::vector<std::pair<std::string, std::string>> load_edge_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");

    std::vector<std::pair<std::string, std::string>> edges;
    std::string raw;
    long line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || raw.rfind("--", 0) == 0) continue;
        std::vector<std::string> fields = split_fields(raw);
        if (fields.size() != 2 || !is_valid_id_token(fields[0]) ||
            !is_valid_id_token(fields[1])) {
            throw ParseError(path, line_no, "edge row needs exactly actor1,actor2");
        }
        edges.emplace_back(fields[0], fields[1]);
    }
    return edges;
}

}  // namespace spread
