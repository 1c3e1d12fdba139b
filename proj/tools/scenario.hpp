#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

namespace wlx::cli {

struct RunOptions {
    /// Overrides the scenario's "precision" field when set. The certification
    /// bound may still raise the effective precision.
    std::optional<std::size_t> precision;
};

/// Validates a scenario object against its kind's schema and dispatches to
/// the engine. Returns the canonical report (fixed key order; exact rationals
/// as "p/q" strings when non-integral). Throws ModelError / SyntaxError /
/// PrecisionError / NonGorensteinError / RankDeficiencyError.
nlohmann::ordered_json run_scenario(const nlohmann::json& scenario, const RunOptions& options = {});

/// Canonical serialization used for recorded reports: 2-space indent plus a
/// trailing newline.
std::string canonical_dump(const nlohmann::ordered_json& report);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

struct BundledScenario {
    std::string_view name;
    std::string_view json_text;
};

/// The scenarios shipped with the tool (embedded copies of scenarios/*.json),
/// sorted by name.
std::span<const BundledScenario> bundled_scenarios();

/// Embedded scenario by name ("triple_point" or "triple_point.json").
const BundledScenario* find_bundled(std::string_view name);

} // namespace wlx::cli
