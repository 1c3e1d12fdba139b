#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scenario.hpp"
#include "wlx/errors.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct CliError {
    std::string code;
    int exit_code;
    ordered_json detail;
};

CliError classify(const std::exception& e) {
    if (const auto* precision = dynamic_cast<const wlx::PrecisionError*>(&e)) {
        ordered_json detail;
        if (!precision->branch().empty()) {
            detail["branch"] = precision->branch();
        }
        if (precision->suggested_precision() > 0) {
            detail["suggested_precision"] = precision->suggested_precision();
        }
        return {"precision-exhausted", 3, std::move(detail)};
    }
    if (const auto* gorenstein = dynamic_cast<const wlx::NonGorensteinError*>(&e)) {
        ordered_json detail;
        detail["n_p"] = gorenstein->n_p();
        return {"non-gorenstein", 4, std::move(detail)};
    }
    return {"invalid-input", 2, ordered_json::object()};
}

void report_error(const std::exception& e, const std::string& file, int& exit_code) {
    const CliError c = classify(e);
    ordered_json out;
    out["code"] = c.code;
    out["message"] = e.what();
    if (!file.empty()) {
        out["file"] = file;
    }
    for (const auto& [key, value] : c.detail.items()) {
        out[key] = value;
    }
    std::cerr << out.dump(2) << "\n";
    if (exit_code == 0) {
        exit_code = c.exit_code;
    }
}

json load_scenario(const std::string& argument) {
    if (std::filesystem::exists(argument)) {
        std::ifstream in(argument);
        if (!in) {
            throw wlx::ModelError("cannot open scenario file: " + argument);
        }
        return json::parse(in);
    }
    if (const wlx::cli::BundledScenario* bundled = wlx::cli::find_bundled(argument)) {
        return json::parse(bundled->json_text);
    }
    throw wlx::ModelError("no such file or bundled scenario: " + argument +
                          " (see `wlx list`)");
}

int run_files(const std::vector<std::string>& files, const wlx::cli::RunOptions& options,
              const std::string& format) {
    int exit_code = 0;
    for (const std::string& file : files) {
        try {
            const json scenario = load_scenario(file);
            const ordered_json report = wlx::cli::run_scenario(scenario, options);
            if (format == "text") {
                std::cout << wlx::cli::render_text(report);
            } else {
                std::cout << wlx::cli::canonical_dump(report);
            }
        } catch (const std::exception& e) {
            report_error(e, file, exit_code);
        }
    }
    return exit_code;
}

int list_bundled(const std::string& filter, const std::string& format) {
    ordered_json entries = ordered_json::array();
    for (const wlx::cli::BundledScenario& s : wlx::cli::bundled_scenarios()) {
        if (!filter.empty() && std::string(s.name).find(filter) == std::string::npos) {
            continue;
        }
        const json parsed = json::parse(s.json_text);
        ordered_json entry;
        entry["name"] = s.name;
        entry["kind"] = parsed.value("kind", "");
        entry["description"] = parsed.value("description", "");
        entries.push_back(std::move(entry));
    }
    if (format == "json") {
        std::cout << entries.dump(2) << "\n";
        return 0;
    }
    for (const auto& entry : entries) {
        std::cout << entry.at("name").get<std::string>() << " [" +
                         entry.at("kind").get<std::string>() + "] - "
                  << entry.at("description").get<std::string>() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wlx: exact ramification data of linear systems on Gorenstein "
                 "curve singularities, and divisor-class pipelines on families of "
                 "stable curves"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::size_t precision = 0;
    std::string run_format = "json";
    CLI::App* run = app.add_subcommand("run", "Run scenario files (or bundled scenario names)");
    run->add_option("files", files, "Scenario files")->required();
    run->add_option("--precision", precision, "Override the working precision");
    run->add_option("--format", run_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string filter;
    std::string list_format = "text";
    CLI::App* list = app.add_subcommand("list", "List bundled scenarios");
    list->add_option("filter", filter, "Only names containing this substring");
    list->add_option("--format", list_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        wlx::cli::RunOptions options;
        if (precision > 0) {
            options.precision = precision;
        }
        return run_files(files, options, run_format);
    }
    return list_bundled(filter, list_format);
}
