#include "spread/model.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "spread/error.hpp"
#include "spread/text.hpp"

namespace spread {

std::string_view to_string(AdjacencyPolicy policy) {
    return policy == AdjacencyPolicy::kLinear ? "linear" : "cyclic";
}

std::optional<AdjacencyPolicy> adjacency_policy_from(std::string_view text) {
    if (text == "linear") return AdjacencyPolicy::kLinear;
    if (text == "cyclic") return AdjacencyPolicy::kCyclic;
    return std::nullopt;
}

namespace {

void require_state_token(const std::string& token, const std::string& context) {
    if (token.empty()) throw ModelError(context + ": empty state token");
    for (unsigned char c : token) {
        if (c == '.' || c == '>' || c == ',' || std::isspace(c)) {
            throw ModelError(context + ": token '" + token +
                             "' may not contain '.', '>', commas or whitespace");
        }
    }
}

}  // namespace

ModelBuilder& ModelBuilder::add_process(const std::string& name,
                                        const std::vector<std::string>& states) {
    require_state_token(name, "process name");
    for (const ProcessSpec& p : processes_) {
        if (p.name == name) throw ModelError("duplicate process '" + name + "'");
    }
    if (states.size() < 2) {
        throw ModelError("process '" + name + "' needs at least two states");
    }
    if (states.size() > 255) {  // coordinates are stored as uint8
        throw ModelError("process '" + name + "' has more than 255 states");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        require_state_token(states[i], "process '" + name + "'");
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            if (states[i] == states[j]) {
                throw ModelError("process '" + name + "' has duplicate state '" +
                                 states[i] + "'");
            }
        }
    }
    processes_.push_back({name, states});
    return *this;
}

CompiledModel ModelBuilder::compile(std::optional<double> background,
                                    AdjacencyPolicy policy) const {
    if (processes_.empty()) throw ModelError("cannot compile a model without processes");
    if (background && (*background < 0.0 || *background > 1.0)) {
        throw ModelError("background weight must lie in [0, 1]");
    }

    CompiledModel model;
    model.processes_ = processes_;
    model.policy_ = policy;
    model.background_ = background;

    model.state_counts_.reserve(processes_.size());
    for (const ProcessSpec& p : processes_) model.state_counts_.push_back(p.states.size());

    model.strides_.assign(processes_.size(), 1);
    model.global_count_ = 1;
    for (std::size_t i = processes_.size(); i-- > 0;) {
        model.strides_[i] = model.global_count_;
        model.global_count_ *= model.state_counts_[i];
    }

    for (std::size_t i = 0; i < processes_.size(); ++i) {
        model.tables_.emplace_back(model.global_count_ * model.state_counts_[i], 0.0);
    }

    if (background) {
        for (std::size_t g = 0; g < model.global_count_; ++g) {
            GlobalCoords coords = model.global_coords(g);
            for (std::size_t i = 0; i < processes_.size(); ++i) {
                for (std::size_t t = 0; t < model.state_counts_[i]; ++t) {
                    if (t != coords[i] && model.adjacent(i, coords[i], t)) {
                        model.tables_[i][g * model.state_counts_[i] + t] = *background;
                    }
                }
            }
        }
    }
    return model;
}

std::optional<std::size_t> CompiledModel::process_index(std::string_view name) const {
    for (std::size_t i = 0; i < processes_.size(); ++i) {
        if (processes_[i].name == name) return i;
    }
    return std::nullopt;
}

bool CompiledModel::adjacent(std::size_t process, std::size_t a, std::size_t b) const {
    std::size_t k = state_counts_[process];
    std::size_t d = a > b ? a - b : b - a;
    if (d == 1) return true;
    return policy_ == AdjacencyPolicy::kCyclic && k >= 3 && d == k - 1;
}

std::size_t CompiledModel::allowed_transition_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < processes_.size(); ++i) {
        std::size_t k = state_counts_[i];
        std::size_t pairs;
        if (policy_ == AdjacencyPolicy::kLinear) {
            pairs = k - 1;
        } else {
            pairs = k >= 3 ? k : 1;
        }
        total += pairs * 2 * (global_count_ / k);
    }
    return total;
}

GlobalCoords CompiledModel::parse_global(std::string_view text) const {
    GlobalCoords coords;
    coords.reserve(processes_.size());
    std::size_t start = 0;
    for (std::size_t i = 0; i < processes_.size(); ++i) {
        std::size_t dot = text.find('.', start);
        bool last = i + 1 == processes_.size();
        if (last != (dot == std::string_view::npos)) {
            throw ModelError("global state '" + std::string(text) + "' must have " +
                             std::to_string(processes_.size()) +
                             " '.'-separated coordinates");
        }
        std::string_view token =
            last ? text.substr(start) : text.substr(start, dot - start);
        const std::vector<std::string>& states = processes_[i].states;
        auto it = std::find(states.begin(), states.end(), token);
        if (it == states.end()) {
            throw ModelError("unknown state '" + std::string(token) + "' for process '" +
                             processes_[i].name + "' in '" + std::string(text) + "'");
        }
        coords.push_back(static_cast<std::uint8_t>(it - states.begin()));
        start = dot + 1;
    }
    return coords;
}

std::string CompiledModel::global_text(const GlobalCoords& coords) const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += '.';
        out += processes_[i].states[coords[i]];
    }
    return out;
}

std::size_t CompiledModel::global_index(const GlobalCoords& coords) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) index += coords[i] * strides_[i];
    return index;
}

GlobalCoords CompiledModel::global_coords(std::size_t index) const {
    GlobalCoords coords(processes_.size());
    for (std::size_t i = 0; i < processes_.size(); ++i) {
        coords[i] = static_cast<std::uint8_t>(index / strides_[i] % state_counts_[i]);
    }
    return coords;
}

namespace {

// Locates the single differing coordinate of an axis move, with the errors
// set_transition needs. Returns the process index.
std::size_t diff_coordinate(const GlobalCoords& src, const GlobalCoords& dst,
                            std::string_view source, std::string_view target) {
    std::size_t count = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] != dst[i]) {
            ++count;
            which = i;
        }
    }
    if (count == 0) {
        throw ModelError("transition '" + std::string(source) + "->" +
                         std::string(target) + "' does not change any state");
    }
    if (count > 1) {
        throw ModelError("diagonal transition '" + std::string(source) + "->" +
                         std::string(target) + "' changes " + std::to_string(count) +
                         " coordinates; a transition may change exactly one process");
    }
    return which;
}

}  // namespace

void CompiledModel::set_transition(std::string_view source, std::string_view target,
                                   double w) {
    GlobalCoords src = parse_global(source);
    GlobalCoords dst = parse_global(target);
    std::size_t process = diff_coordinate(src, dst, source, target);
    if (!adjacent(process, src[process], dst[process])) {
        throw ModelError("states '" + processes_[process].states[src[process]] +
                         "' and '" + processes_[process].states[dst[process]] +
                         "' are not neighbours in process '" + processes_[process].name +
                         "' under the " + std::string(to_string(policy_)) + " policy");
    }
    if (!(w >= 0.0 && w <= 1.0)) {
        throw ModelError("weight " + format_double(w) + " for '" + std::string(source) +
                         "->" + std::string(target) + "' is outside [0, 1]");
    }
    tables_[process][global_index(src) * state_counts_[process] + dst[process]] = w;
}

double CompiledModel::weight(std::string_view source, std::string_view target) const {
    GlobalCoords src = parse_global(source);
    GlobalCoords dst = parse_global(target);
    std::size_t count = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] != dst[i]) {
            ++count;
            which = i;
        }
    }
    if (count != 1) return 0.0;
    return weight_at(global_index(src), which, dst[which]);
}

std::vector<std::tuple<std::string, std::string, double>>
CompiledModel::nonzero_transitions() const {
    std::vector<std::tuple<std::string, std::string, double>> out;
    for (std::size_t g = 0; g < global_count_; ++g) {
        GlobalCoords coords = global_coords(g);
        std::string src_text = global_text(coords);
        for (std::size_t i = 0; i < processes_.size(); ++i) {
            for (std::size_t t = 0; t < state_counts_[i]; ++t) {
                double w = tables_[i][g * state_counts_[i] + t];
                if (w == 0.0) continue;
                GlobalCoords target = coords;
                target[i] = static_cast<std::uint8_t>(t);
                out.emplace_back(src_text, global_text(target), w);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    return out;
}

std::string CompiledModel::describe() const {
    std::string out = "propagation model\n";
    out += "processes (" + std::to_string(processes_.size()) + "):\n";
    for (const ProcessSpec& p : processes_) {
        out += "  " + p.name + ": ";
        for (std::size_t i = 0; i < p.states.size(); ++i) {
            if (i) out += ",";
            out += p.states[i];
        }
        out += '\n';
    }
    out += "adjacency policy: " + std::string(to_string(policy_)) + "\n";
    out += "global states: " + std::to_string(global_count_) + "\n";
    out += "allowed transitions: " + std::to_string(allowed_transition_count()) + "\n";
    auto transitions = nonzero_transitions();
    out += "nonzero transitions (" + std::to_string(transitions.size()) + "):\n";
    for (const auto& [src, dst, w] : transitions) {
        out += "  " + src + "->" + dst + " " + format_double(w) + "\n";
    }
    return out;
}

std::pair<std::string, std::string> split_transition_text(std::string_view text) {
    std::size_t arrow = text.find("->");
    if (arrow == std::string_view::npos) {
        throw ModelError("transition '" + std::string(text) +
                         "' must have the form '<source>-><target>'");
    }
    return {std::string(text.substr(0, arrow)), std::string(text.substr(arrow + 2))};
}

}  // namespace spread
