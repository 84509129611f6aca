#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "spread/error.hpp"
#include "spread/net.hpp"
#include "spread/rng.hpp"

using namespace spread;

namespace {

std::string data_path(const std::string& name) {
    return std::string(SPREADSIM_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("mpx: minimal valid file") {
    MultilayerNetwork net = load_mpx_text("#LAYERS\nl1\n#EDGES\na,b,l1\n");
    CHECK(net.actor_count() == 2);
    CHECK(net.layer_count() == 1);
    CHECK(net.layer("l1").edge_count() == 1);
    CHECK(net.layer("l1").member_count() == 2);
}

TEST_CASE("mpx: unknown layer in edge row cites the line") {
    try {
        load_mpx_text("#LAYERS\nl1\n#EDGES\na,b,l9\n", "bad.mpx");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("l9") != std::string::npos);
    }
}

TEST_CASE("mpx: malformed rows and headers") {
    CHECK_THROWS_AS(load_mpx_text("#LAYERS\nl1\n#EDGES\na,a,l1\n"), ParseError);  // self-loop
    CHECK_THROWS_AS(load_mpx_text("#FROBNICATE\n"), ParseError);
    CHECK_THROWS_AS(load_mpx_text("a,b,l1\n"), ParseError);  // row before any section
    CHECK_THROWS_AS(load_mpx_text("#LAYERS\nl1,DIRECTED\n"), ParseError);
    CHECK_THROWS_AS(load_mpx_text("#TYPE multilayer\n"), ParseError);
    CHECK_THROWS_AS(load_mpx_text("#LAYERS\nl1\n#EDGES\na,b\n"), ParseError);
}

TEST_CASE("mpx: comments, blank lines, CRLF and duplicate edges") {
    MultilayerNetwork net = load_mpx_text(
        "-- a comment\n#TYPE multiplex\r\n\n#LAYERS\nl1,UNDIRECTED\n#EDGES\n"
        "a,b,l1\nb,a,l1\na,b,l1\n");
    CHECK(net.layer("l1").edge_count() == 1);
}

TEST_CASE("mpx: bundled lesmis fixture") {
    MultilayerNetwork net = load_mpx(data_path("lesmis.mpx"));
    CHECK(net.actor_count() == 77);
    CHECK(net.layer_count() == 1);
    CHECK(net.layer("base").edge_count() == 254);

    // Independent degree count straight off the file rows.
    std::istringstream in(read_file(data_path("lesmis.mpx")));
    std::string line;
    int valjean_degree = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 + 1);
        if (c2 == std::string::npos) continue;
        if (line.substr(0, c1) == "Valjean" || line.substr(c1 + 1, c2 - c1 - 1) == "Valjean") {
            ++valjean_degree;
        }
    }
    CHECK(net.neighbors("Valjean", "base").size() == static_cast<std::size_t>(valjean_degree));
    CHECK(valjean_degree == 36);
}

TEST_CASE("mpx: canonical save") {
    SUBCASE("two-actor golden file") {
        MultilayerNetwork net = load_mpx_text("#LAYERS\nl1\n#EDGES\nb,a,l1\n");
        CHECK(to_mpx(net) == read_file(std::string(SPREADSIM_GOLDEN_DIR) + "/two_actor.mpx"));
    }
    SUBCASE("empty network is headers only") {
        MultilayerNetwork net = NetworkBuilder().build();
        CHECK(to_mpx(net) == "#TYPE multiplex\n#LAYERS\n#EDGES\n");
    }
    SUBCASE("actors section appears only when needed") {
        MultilayerNetwork net =
            load_mpx_text("#LAYERS\nl1\n#ACTORS\nc\n#EDGES\na,b,l1\n");
        std::string text = to_mpx(net);
        CHECK(text.find("#ACTORS\na\nb\nc\n") != std::string::npos);
    }
}

TEST_CASE("mpx: round-trip is a fixed point for all bundled fixtures") {
    for (const char* fixture : {"lesmis.mpx", "two_layer.mpx"}) {
        CAPTURE(fixture);
        MultilayerNetwork first = load_mpx(data_path(fixture));
        std::string saved = to_mpx(first);
        MultilayerNetwork second = load_mpx_text(saved);
        CHECK(first == second);
        CHECK(to_mpx(second) == saved);
        // Bundled fixtures are stored canonically.
        CHECK(saved == read_file(data_path(fixture)));
    }
}

TEST_CASE("duplicate_to_layers") {
    std::vector<std::pair<std::string, std::string>> edges = {{"a", "b"}};
    SUBCASE("three copies") {
        MultilayerNetwork net = duplicate_to_layers(edges, {"ill", "aware", "vacc"});
        CHECK(net.layer_count() == 3);
        for (const char* name : {"ill", "aware", "vacc"}) {
            CHECK(net.layer(name).edge_count() == 1);
            CHECK(net.layer(name).member_count() == 2);
        }
    }
    SUBCASE("single name reproduces the input") {
        MultilayerNetwork net = duplicate_to_layers(edges, {"only"});
        CHECK(net.layer_count() == 1);
        CHECK(net.layer("only").edge_count() == 1);
    }
    SUBCASE("duplicate names rejected") {
        CHECK_THROWS_AS(duplicate_to_layers(edges, {"x", "x"}), Error);
        CHECK_THROWS_AS(duplicate_to_layers(edges, {}), Error);
    }
    SUBCASE("lesmis membership in all three layers") {
        MultilayerNetwork flat = load_mpx(data_path("lesmis.mpx"));
        std::vector<std::pair<std::string, std::string>> all;
        for (const auto& [a, b] : flat.layer("base").edges()) {
            all.emplace_back(flat.actor_id(a), flat.actor_id(b));
        }
        MultilayerNetwork net = duplicate_to_layers(all, {"ill", "aware", "vacc"});
        CHECK(net.actor_count() == 77);
        for (const char* name : {"ill", "aware", "vacc"}) {
            CHECK(net.layer(name).member_count() == 77);
        }
    }
}

TEST_CASE("erdos_renyi: edge cases and determinism") {
    CHECK(erdos_renyi(10, 0.0, 7).layer("layer0").edge_count() == 0);
    CHECK(erdos_renyi(10, 1.0, 7).layer("layer0").edge_count() == 45);
    CHECK(erdos_renyi(1, 0.5, 7).actor_count() == 1);

    MultilayerNetwork a = erdos_renyi(50, 0.2, 123);
    MultilayerNetwork b = erdos_renyi(50, 0.2, 123);
    MultilayerNetwork c = erdos_renyi(50, 0.2, 124);
    CHECK(a == b);
    CHECK(a.layer("layer0").edges() != c.layer("layer0").edges());

    CHECK_THROWS_AS(erdos_renyi(0, 0.5, 1), Error);
    CHECK_THROWS_AS(erdos_renyi(10, 1.5, 1), Error);
}

TEST_CASE("erdos_renyi: edge count stays in the binomial band") {
    // Mean of n(n-1)/2 * p = 4995 for n=1000, p=0.01; +-150 is a 3 sigma band
    // for the mean of 100 runs, with very wide margin.
    double total = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        total += static_cast<double>(erdos_renyi(1000, 0.01, seed).layer("layer0").edge_count());
    }
    double mean = total / 100.0;
    CHECK(mean > 4995.0 - 150.0);
    CHECK(mean < 4995.0 + 150.0);
}

TEST_CASE("neighbors") {
    MultilayerNetwork net =
        load_mpx_text("#LAYERS\nl1\n#ACTORS\nd\n#EDGES\na,b,l1\nb,c,l1\n");
    CHECK(net.neighbors("b", "l1") == std::vector<std::string>{"a", "c"});
    CHECK(net.neighbors("d", "l1").empty());  // isolated member
    CHECK_THROWS_AS(net.neighbors("a", "nope"), Error);
    CHECK_THROWS_AS(net.neighbors("zz", "l1"), Error);
}

TEST_CASE("neighbors: known actor outside the layer is an error") {
    NetworkBuilder nb;
    nb.add_layer("l1").add_layer("l2");
    nb.add_edge("l1", "a", "b");
    nb.add_member("l2", "c");
    MultilayerNetwork net = nb.build();
    CHECK(net.actor_index("c").has_value());
    CHECK_THROWS_AS(net.neighbors("c", "l1"), Error);
    CHECK(net.neighbors("c", "l2").empty());
}

TEST_CASE("neighbor symmetry and membership hold for random graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        MultilayerNetwork net = erdos_renyi(40, 0.1, seed);
        const Layer& layer = net.layer("layer0");
        for (std::uint32_t v = 0; v < net.actor_count(); ++v) {
            CHECK(layer.is_member(v));
            for (std::uint32_t u : layer.neighbors_of(v)) {
                const auto& back = layer.neighbors_of(u);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
        for (const auto& [a, b] : layer.edges()) {
            CHECK(layer.is_member(a));
            CHECK(layer.is_member(b));
            CHECK(a < b);
        }
    }
}

TEST_CASE("builder rejects bad tokens and duplicate layers") {
    NetworkBuilder builder;
    CHECK_THROWS_AS(builder.add_actor("has space"), Error);
    CHECK_THROWS_AS(builder.add_actor("has,comma"), Error);
    CHECK_THROWS_AS(builder.add_actor(""), Error);
    builder.add_layer("l1");
    CHECK_THROWS_AS(builder.add_layer("l1"), Error);
    CHECK_THROWS_AS(builder.add_edge("l1", "a", "a"), Error);
    CHECK_THROWS_AS(builder.add_edge("nope", "a", "b"), Error);
}
