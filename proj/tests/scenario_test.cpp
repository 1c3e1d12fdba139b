#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "scenario.hpp"
#include "wlx/errors.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct ProcessResult {
    int exit_code;
    std::string output;  // stdout only
};

ProcessResult run_cli(const std::string& args) {
    const std::string command = std::string(WLX_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> chunk{};
    std::size_t n = 0;
    while ((n = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) {
        output.append(chunk.data(), n);
    }
    const int status = pclose(pipe);
    return ProcessResult{WEXITSTATUS(status), std::move(output)};
}

const char* kBundledNames[] = {
    "cusp_cubic",          "hyperflex_g3",       "jet_chern_order3",
    "node_cubic",          "quartic_pencil",     "semigroup_cusp",
    "semigroup_quartic_triple", "semigroup_space_curve", "smooth_hyperflex",
    "sw_class_g3",         "triple_point",
};

} // namespace

TEST_CASE("bundled scenarios reproduce their recorded reports byte-for-byte") {
    for (const char* name : kBundledNames) {
        CAPTURE(name);
        const std::string scenario_text =
            read_file(std::string(WLX_SOURCE_DIR) + "/scenarios/" + name + ".json");
        const std::string expected =
            read_file(std::string(WLX_SOURCE_DIR) + "/scenarios/expected/" + name + ".json");
        const ordered_json report = wlx::cli::run_scenario(json::parse(scenario_text));
        CHECK(wlx::cli::canonical_dump(report) == expected);
    }
}

TEST_CASE("the binary reproduces the recorded reports and exits 0") {
    for (const char* name : {"triple_point", "node_cubic", "semigroup_cusp", "sw_class_g3"}) {
        CAPTURE(name);
        const ProcessResult result =
            run_cli(std::string("run ") + WLX_SOURCE_DIR + "/scenarios/" + name + ".json");
        CHECK(result.exit_code == 0);
        CHECK(result.output ==
              read_file(std::string(WLX_SOURCE_DIR) + "/scenarios/expected/" + name + ".json"));
    }
    // Bundled names resolve without a path.
    const ProcessResult by_name = run_cli("run cusp_cubic");
    CHECK(by_name.exit_code == 0);
    CHECK(by_name.output ==
          read_file(std::string(WLX_SOURCE_DIR) + "/scenarios/expected/cusp_cubic.json"));
}

TEST_CASE("list is stable, sorted, and filterable") {
    const ProcessResult all = run_cli("list --format json");
    CHECK(all.exit_code == 0);
    const json entries = json::parse(all.output);
    REQUIRE(entries.size() == std::size(kBundledNames));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].at("name") == kBundledNames[i]);
        CHECK_FALSE(entries[i].at("description").get<std::string>().empty());
    }
    const ProcessResult filtered = run_cli("list semigroup --format json");
    CHECK(json::parse(filtered.output).size() == 3);
    const ProcessResult empty_filter = run_cli("list --format json");
    CHECK(json::parse(empty_filter.output).size() == std::size(kBundledNames));
}

TEST_CASE("exit codes: 2 invalid input, 3 precision exhausted, 4 non-Gorenstein") {
    const std::string dir = std::string(WLX_BINARY_DIR);

    auto write_scenario = [&](const std::string& name, const std::string& text) {
        const std::string path = dir + "/" + name;
        std::ofstream out(path);
        out << text;
        return path;
    };

    const std::string bad_schema =
        write_scenario("bad_schema.json", R"({"kind":"semigroup","generators":"nope"})");
    CHECK(run_cli("run " + bad_schema).exit_code == 2);

    const std::string bad_syntax = write_scenario(
        "bad_syntax.json",
        R"({"kind":"singularity","r":0,"branches":[{"name":"b","variable":"t","multiplier":"t^","sections":["1"]}]})");
    CHECK(run_cli("run " + bad_syntax).exit_code == 2);

    const std::string degenerate = write_scenario(
        "degenerate.json",
        R"({"kind":"singularity","r":1,"branches":[{"name":"p","variable":"t","multiplier":"1","sections":["1+t","1+t"]}]})");
    CHECK(run_cli("run " + degenerate).exit_code == 3);

    const std::string odd = write_scenario(
        "odd.json",
        R"({"kind":"singularity","r":1,"branches":[{"name":"b","variable":"t","multiplier":"t^3","sections":["1","t"]}]})");
    CHECK(run_cli("run " + odd).exit_code == 4);

    CHECK(run_cli("run no_such_scenario.json").exit_code == 2);

    // Independent files are processed independently; the first error wins.
    const ProcessResult multi = run_cli("run triple_point " + odd + " cusp_cubic");
    CHECK(multi.exit_code == 4);
    CHECK(multi.output.find("\"total_weight\": 22") != std::string::npos);
    CHECK(multi.output.find("\"total_weight\": 8") != std::string::npos);
}

TEST_CASE("precision control: flag override and certification raise") {
    // The certification bound lifts tiny requested precisions, with a notice.
    json scenario = json::parse(read_file(std::string(WLX_SOURCE_DIR) +
                                          "/scenarios/triple_point.json"));
    scenario["precision"] = 16;
    const ordered_json raised = wlx::cli::run_scenario(scenario);
    CHECK(raised.at("precision").get<std::size_t>() == 41);
    CHECK(raised.at("precision_raised").get<bool>());
    CHECK(raised.at("total_weight").get<long>() == 22);

    wlx::cli::RunOptions options;
    options.precision = 128;
    const ordered_json bumped = wlx::cli::run_scenario(scenario, options);
    CHECK(bumped.at("precision").get<std::size_t>() == 128);
    CHECK_FALSE(bumped.at("precision_raised").get<bool>());
    CHECK(bumped.at("total_weight").get<long>() == 22);
}

TEST_CASE("schema rejects unknown keys and misaligned sections") {
    CHECK_THROWS_AS(wlx::cli::run_scenario(json::parse(
                        R"({"kind":"pencil","n":2,"d":4,"degree":4})")),
                    wlx::ModelError);
    CHECK_THROWS_AS(wlx::cli::run_scenario(json::parse(R"({"kind":"flexes"})")),
                    wlx::ModelError);
    CHECK_THROWS_AS(wlx::cli::run_scenario(json::parse(R"([1,2,3])")), wlx::ModelError);
    // r+1 sections are required on every branch.
    CHECK_THROWS_AS(
        wlx::cli::run_scenario(json::parse(
            R"({"kind":"singularity","r":2,"branches":[{"name":"b","variable":"t","multiplier":"1","sections":["1","t"]}]})")),
        wlx::ModelError);
    // Constant terms must agree across branches (sections are aligned by index).
    CHECK_THROWS_AS(
        wlx::cli::run_scenario(json::parse(
            R"({"kind":"singularity","r":0,"branches":[
                {"name":"a","variable":"t","multiplier":"t","sections":["1"]},
                {"name":"b","variable":"t","multiplier":"t","sections":["2"]}]})")),
        wlx::ModelError);
    // Section text must use the declared variable.
    CHECK_THROWS_AS(
        wlx::cli::run_scenario(json::parse(
            R"({"kind":"singularity","r":0,"branches":[{"name":"a","variable":"t","multiplier":"1","sections":["1+z"]}]})")),
        wlx::ModelError);
}

TEST_CASE("text format renders every kind") {
    for (const char* name : kBundledNames) {
        const std::string scenario_text =
            read_file(std::string(WLX_SOURCE_DIR) + "/scenarios/" + name + ".json");
        const ordered_json report = wlx::cli::run_scenario(json::parse(scenario_text));
        const std::string text = wlx::cli::render_text(report);
        CHECK_FALSE(text.empty());
        CHECK(text.find("report") != std::string::npos);
    }
}
