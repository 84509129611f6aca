#include <doctest.h>

#include <string>

#include "spread/config.hpp"
#include "spread/error.hpp"

using namespace spread;

namespace {

std::string data_path(const std::string& name) {
    return std::string(SPREADSIM_DATA_DIR) + "/" + name;
}

// A minimal valid config to mutate in the failure cases.
std::string tiny_config(const std::string& transitions = "",
                        const std::string& layer_names = "[\"flu\"]") {
    return std::string("{") +
           "\"network\": {\"type\": \"bundled\", \"name\": \"lesmis\", \"layer_names\": " +
           layer_names + "}," +
           "\"model\": {\"processes\": [{\"name\": \"flu\", \"states\": [\"s\", \"i\"]}]," +
           "\"background_weight\": null, \"transitions\": {" + transitions + "}}," +
           "\"initial\": {\"flu\": {\"counts\": {\"s\": 67, \"i\": 10}}}," +
           "\"epochs\": 3, \"seed\": 9, \"output_dir\": \"out\"}";
}

}  // namespace

TEST_CASE("bundled epidemic config parses and validates") {
    RunConfig config = load_run_config(data_path("epidemic.json"));
    CHECK(config.processes.size() == 3);
    CHECK(config.transitions.size() == 11);
    CHECK(config.policy == AdjacencyPolicy::kCyclic);
    CHECK(config.background == 0.005);
    CHECK(config.experiment.epochs == 50);
    CHECK(config.experiment.seed == 42);

    std::optional<BuiltExperiment> built;
    CHECK(validate_run_config(config, &built).empty());
    REQUIRE(built.has_value());
    CHECK(built->model.global_state_count() == 12);
    CHECK(built->net.actor_count() == 77);

    std::string summary = config_summary(config, *built);
    CHECK(summary.find("global states: 12") != std::string::npos);
    CHECK(summary.find("layer ill: 77 members, 254 edges") != std::string::npos);
}

TEST_CASE("schema violations throw ConfigError") {
    CHECK_THROWS_AS(parse_run_config("{not json"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("[]"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("{}"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(
                        R"({"network": {"type": "warp"}, "model": {}, "initial": {},
                            "epochs": 1, "seed": 1, "output_dir": "o"})"),
                    ConfigError);

    std::string negative_epochs = tiny_config();
    negative_epochs.replace(negative_epochs.find("\"epochs\": 3"), 11, "\"epochs\": -1");
    CHECK_THROWS_AS(parse_run_config(negative_epochs), ConfigError);
}

TEST_CASE("validate: clean tiny config") {
    RunConfig config = parse_run_config(tiny_config("\"s->i\": 0.5"));
    std::optional<BuiltExperiment> built;
    CHECK(validate_run_config(config, &built).empty());
    CHECK(built->model.weight("s", "i") == 0.5);
}

TEST_CASE("validate: diagonal transition is diagnosed") {
    std::string text =
        std::string("{") +
        "\"network\": {\"type\": \"bundled\", \"name\": \"lesmis\", " +
        "\"layer_names\": [\"ill\", \"aware\", \"vacc\"]}," +
        "\"model\": {\"processes\": [" +
        "{\"name\": \"ill\", \"states\": [\"s\", \"i\", \"r\"]}," +
        "{\"name\": \"aware\", \"states\": [\"n\", \"a\"]}," +
        "{\"name\": \"vacc\", \"states\": [\"u\", \"v\"]}]," +
        "\"transitions\": {\"s.n.u->i.a.u\": 0.2}}," +
        "\"initial\": {" +
        "\"ill\": {\"counts\": {\"s\": 65, \"i\": 10, \"r\": 2}}," +
        "\"aware\": {\"counts\": {\"n\": 77, \"a\": 0}}," +
        "\"vacc\": {\"counts\": {\"u\": 77, \"v\": 0}}}," +
        "\"epochs\": 1, \"seed\": 1, \"output_dir\": \"out\"}";
    RunConfig config = parse_run_config(text);
    std::vector<std::string> diagnostics = validate_run_config(config);
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].find("diagonal") != std::string::npos);
}

TEST_CASE("validate: process/layer misalignment is diagnosed") {
    // the process is named flu but the layer is named pox
    RunConfig config = parse_run_config(tiny_config("", "[\"pox\"]"));
    std::vector<std::string> diagnostics = validate_run_config(config);
    CHECK(diagnostics.size() == 2);  // both directions
    CHECK(diagnostics[0].find("flu") != std::string::npos);
}

TEST_CASE("validate: initial counts that do not sum are diagnosed") {
    std::string text = tiny_config();
    text.replace(text.find("\"s\": 67"), 7, "\"s\": 70");
    RunConfig config = parse_run_config(text);
    std::vector<std::string> diagnostics = validate_run_config(config);
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].find("sum") != std::string::npos);
}

TEST_CASE("validate: unreadable network source is diagnosed") {
    std::string text = std::string("{") +
                       "\"network\": {\"type\": \"mpx\", \"path\": \"/nope/missing.mpx\"}," +
                       "\"model\": {\"processes\": [{\"name\": \"l\", \"states\": "
                       "[\"s\", \"i\"]}]}," +
                       "\"initial\": {\"l\": {\"counts\": {\"s\": 1, \"i\": 1}}}," +
                       "\"epochs\": 1, \"seed\": 1, \"output_dir\": \"o\"}";
    RunConfig config = parse_run_config(text);
    std::vector<std::string> diagnostics = validate_run_config(config);
    REQUIRE(!diagnostics.empty());
    CHECK(diagnostics[0].find("network") != std::string::npos);
}

TEST_CASE("validate: unknown bundled dataset is diagnosed") {
    std::string text = tiny_config();
    text.replace(text.find("lesmis"), 6, "hamlet");
    RunConfig config = parse_run_config(text);
    std::vector<std::string> diagnostics = validate_run_config(config);
    REQUIRE(!diagnostics.empty());
    CHECK(diagnostics[0].find("hamlet") != std::string::npos);
}

TEST_CASE("erdos_renyi network source builds layer0") {
    std::string text =
        std::string("{") +
        "\"network\": {\"type\": \"erdos_renyi\", \"n\": 30, \"p\": 0.2}," +
        "\"model\": {\"processes\": [{\"name\": \"layer0\", \"states\": [\"s\", \"i\"]}]}," +
        "\"initial\": {\"layer0\": {\"counts\": {\"s\": 25, \"i\": 5}}}," +
        "\"epochs\": 2, \"seed\": 4, \"output_dir\": \"o\"}";
    RunConfig config = parse_run_config(text);
    std::optional<BuiltExperiment> built;
    CHECK(validate_run_config(config, &built).empty());
    CHECK(built->net.has_layer("layer0"));
    CHECK(built->net.actor_count() == 30);
}

TEST_CASE("lesmis_mpx embeds the bundled fixture") {
    MultilayerNetwork net = load_mpx_text(lesmis_mpx(), "embedded");
    CHECK(net.actor_count() == 77);
    CHECK(net.layer("base").edge_count() == 254);
}
