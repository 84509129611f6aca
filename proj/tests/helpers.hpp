// Shared fixtures and independent oracles for the unit and acceptance suites.
// The oracles deliberately recompute everything from first principles instead
// of reusing library internals.
#pragma once

#include <cstdlib>
#include <string>
#include <tuple>
#include <vector>

#include "spread/engine.hpp"
#include "spread/model.hpp"
#include "spread/net.hpp"
#include "spread/rng.hpp"

namespace testutil {

/// The bundled three-process epidemic/awareness/vaccination example.
inline spread::ModelBuilder epidemic_builder() {
    spread::ModelBuilder builder;
    builder.add_process("ill", {"s", "i", "r"});
    builder.add_process("aware", {"n", "a"});
    builder.add_process("vacc", {"u", "v"});
    return builder;
}

/// Its eleven hand-set transition weights.
inline const std::vector<std::tuple<std::string, std::string, double>>&
epidemic_weights() {
    static const std::vector<std::tuple<std::string, std::string, double>> weights = {
        {"s.n.u", "i.n.u", 0.4},  {"i.n.u", "r.n.u", 0.1},  {"s.a.u", "i.a.u", 0.2},
        {"i.a.u", "r.a.u", 0.3},  {"s.a.v", "i.a.v", 0.05}, {"i.a.v", "r.a.v", 0.7},
        {"s.n.u", "s.a.u", 0.05}, {"i.n.u", "i.a.u", 0.2},  {"s.n.v", "s.a.v", 1.0},
        {"s.a.u", "s.a.v", 0.03}, {"i.a.u", "i.a.v", 0.1},
    };
    return weights;
}

/// Brute-force count of directed transitions over the product grid: every
/// ordered pair of tuples differing in exactly one coordinate whose pair of
/// values is adjacent (interval or, for cyclic and >=3 states, the wrap).
inline std::size_t enumerate_allowed_transitions(const std::vector<std::size_t>& sizes,
                                                 bool cyclic) {
    std::size_t product = 1;
    for (std::size_t k : sizes) product *= k;

    auto coords_of = [&](std::size_t index) {
        std::vector<std::size_t> coords(sizes.size());
        for (std::size_t i = sizes.size(); i-- > 0;) {
            coords[i] = index % sizes[i];
            index /= sizes[i];
        }
        return coords;
    };

    std::size_t count = 0;
    for (std::size_t s = 0; s < product; ++s) {
        std::vector<std::size_t> a = coords_of(s);
        for (std::size_t t = 0; t < product; ++t) {
            if (s == t) continue;
            std::vector<std::size_t> b = coords_of(t);
            std::size_t differing = 0;
            std::size_t axis = 0;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (a[i] != b[i]) {
                    ++differing;
                    axis = i;
                }
            }
            if (differing != 1) continue;
            std::size_t lo = std::min(a[axis], b[axis]);
            std::size_t hi = std::max(a[axis], b[axis]);
            std::size_t d = hi - lo;
            if (d == 1 || (cyclic && sizes[axis] >= 3 && d == sizes[axis] - 1)) ++count;
        }
    }
    return count;
}

/// Small random experiment for the conservation/legality/determinism suite.
struct RandomInstance {
    spread::MultilayerNetwork net;
    spread::CompiledModel model;
    spread::ExperimentConfig config;
};

inline RandomInstance make_random_instance(std::uint64_t seed) {
    spread::Rng rng(seed, 77);

    std::size_t process_count = 1 + rng.below(3);
    std::vector<spread::ProcessSpec> processes;
    static const char* kStates[] = {"s0", "s1", "s2", "s3"};
    for (std::size_t p = 0; p < process_count; ++p) {
        std::size_t state_count = 2 + rng.below(3);
        spread::ProcessSpec spec;
        spec.name = "p" + std::to_string(p);
        for (std::size_t s = 0; s < state_count; ++s) spec.states.push_back(kStates[s]);
        processes.push_back(spec);
    }

    std::size_t actor_count = 2 + rng.below(19);
    std::vector<std::string> actors;
    for (std::size_t a = 0; a < actor_count; ++a) {
        std::string id = std::to_string(a);
        actors.push_back("a" + std::string(2 - id.size(), '0') + id);
    }

    spread::NetworkBuilder net_builder;
    for (const std::string& actor : actors) net_builder.add_actor(actor);
    for (const auto& process : processes) {
        net_builder.add_layer(process.name);
        std::vector<std::string> members;
        for (const std::string& actor : actors) {
            if (rng.unit() < 0.85) {
                members.push_back(actor);
                net_builder.add_member(process.name, actor);
            }
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (rng.unit() < 0.3) net_builder.add_edge(process.name, members[i], members[j]);
            }
        }
    }
    spread::MultilayerNetwork net = net_builder.build();

    spread::ModelBuilder model_builder;
    for (const auto& process : processes) model_builder.add_process(process.name, process.states);
    auto policy = rng.unit() < 0.5 ? spread::AdjacencyPolicy::kLinear
                                   : spread::AdjacencyPolicy::kCyclic;
    std::optional<double> background;
    if (rng.unit() < 0.5) background = rng.unit() * 0.1;
    spread::CompiledModel model = model_builder.compile(background, policy);

    // Sprinkle explicit weights over random allowed axis moves.
    for (std::size_t p = 0; p < process_count; ++p) {
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::size_t g = rng.below(model.global_state_count());
            spread::GlobalCoords src = model.global_coords(g);
            std::size_t k = processes[p].states.size();
            std::size_t target = rng.below(k);
            if (target == src[p] || !model.adjacent(p, src[p], target)) continue;
            spread::GlobalCoords dst = src;
            dst[p] = static_cast<std::uint8_t>(target);
            model.set_transition(model.global_text(src), model.global_text(dst), rng.unit());
        }
    }

    spread::ExperimentConfig config;
    config.epochs = 3 + static_cast<long>(rng.below(5));
    config.seed = spread::Rng::derive(seed, 1, 2);
    for (std::size_t p = 0; p < process_count; ++p) {
        spread::InitialProcessSpec initial;
        for (const std::string& state : processes[p].states) initial.counts[state] = 0;
        for (std::uint32_t member : net.layer(processes[p].name).members()) {
            (void)member;
            std::size_t state = rng.below(processes[p].states.size());
            ++initial.counts[processes[p].states[state]];
        }
        config.initial[processes[p].name] = initial;
    }
    return {std::move(net), std::move(model), std::move(config)};
}

}  // namespace testutil
