#include "scenario.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "wlx/enumerative.hpp"
#include "wlx/errors.hpp"
#include "wlx/localring.hpp"
#include "wlx/series.hpp"
#include "wlx/wronskian.hpp"

namespace wlx::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kDefaultPrecision = 64;

[[noreturn]] void fail(const std::string& message) {
    throw ModelError(message);
}

void check_keys(const json& obj, const char* kind, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            fail(std::string("unknown key \"") + key + "\" in " + kind + " scenario");
        }
    }
}

long require_int(const json& obj, const char* key, long lo, long hi) {
    if (!obj.contains(key)) {
        fail(std::string("missing required key \"") + key + "\"");
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        fail(std::string("\"") + key + "\" must be an integer");
    }
    const long value = v.get<long>();
    if (value < lo || value > hi) {
        fail(std::string("\"") + key + "\" = " + std::to_string(value) + " is out of range [" +
             std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return value;
}

std::string require_string(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj.at(key).is_string()) {
        fail(std::string("missing or non-string key \"") + key + "\"");
    }
    return obj.at(key).get<std::string>();
}

/// Exact integers render as JSON numbers while they fit int64, decimal strings
/// beyond; non-integral rationals always render as "p/q" strings.
ordered_json json_of(const Int& n) {
    if (const auto small = to_int64(n)) {
        return *small;
    }
    return n.str();
}

ordered_json json_of(const Rat& q) {
    if (denominator(q) == 1) {
        return json_of(numerator(q));
    }
    return rat_to_string(q);
}

ordered_json json_of_class(const DivisorClass& c) {
    ordered_json out;
    out["lambda"] = json_of(c.lambda);
    for (std::size_t i = 0; i < c.delta.size(); ++i) {
        out["delta_" + std::to_string(i)] = json_of(c.delta[i]);
    }
    return out;
}

ordered_json run_singularity(const json& scenario, const RunOptions& options) {
    check_keys(scenario, "singularity",
               {"kind", "description", "r", "precision", "branches"});
    const long r = require_int(scenario, "r", 0, 8);

    std::size_t requested = kDefaultPrecision;
    if (options.precision) {
        requested = *options.precision;
    } else if (scenario.contains("precision")) {
        requested = static_cast<std::size_t>(require_int(scenario, "precision", 2, 1 << 20));
    }

    if (!scenario.contains("branches") || !scenario.at("branches").is_array() ||
        scenario.at("branches").empty()) {
        fail("\"branches\" must be a nonempty array");
    }

    struct BranchInput {
        std::string name;
        std::string variable;
        ParsedPolynomial multiplier;
        std::vector<ParsedPolynomial> sections;
    };
    std::vector<BranchInput> inputs;
    for (const json& branch : scenario.at("branches")) {
        if (!branch.is_object()) {
            fail("every branch must be an object");
        }
        check_keys(branch, "branch", {"name", "variable", "multiplier", "sections"});
        BranchInput in;
        in.name = require_string(branch, "name");
        in.variable = require_string(branch, "variable");
        const std::string multiplier_text = require_string(branch, "multiplier");
        in.multiplier = parse_polynomial(multiplier_text);
        if (!in.multiplier.variable.empty() && in.multiplier.variable != in.variable) {
            fail("branch '" + in.name + "': multiplier uses variable '" +
                 in.multiplier.variable + "', declared '" + in.variable + "'");
        }
        if (in.multiplier.is_zero()) {
            fail("branch '" + in.name + "': multiplier is the zero polynomial");
        }
        if (!branch.contains("sections") || !branch.at("sections").is_array()) {
            fail("branch '" + in.name + "': \"sections\" must be an array");
        }
        if (branch.at("sections").size() != static_cast<std::size_t>(r) + 1) {
            fail("branch '" + in.name + "': expected " + std::to_string(r + 1) +
                 " sections (r + 1), got " + std::to_string(branch.at("sections").size()));
        }
        for (const json& text : branch.at("sections")) {
            if (!text.is_string()) {
                fail("branch '" + in.name + "': sections must be polynomial strings");
            }
            ParsedPolynomial poly = parse_polynomial(text.get<std::string>());
            if (!poly.variable.empty() && poly.variable != in.variable) {
                fail("branch '" + in.name + "': section uses variable '" + poly.variable +
                     "', declared '" + in.variable + "'");
            }
            in.sections.push_back(std::move(poly));
        }
        inputs.push_back(std::move(in));
    }

    // Certification bound: generous enough that every branch order below it
    // is decided; failures are explicit, never a wrong order.
    std::size_t effective = requested;
    for (const BranchInput& in : inputs) {
        std::size_t max_degree = 0;
        for (const ParsedPolynomial& poly : in.sections) {
            max_degree = std::max(max_degree, poly.degree());
        }
        const std::size_t bound =
            static_cast<std::size_t>(r + 1) * (max_degree + in.multiplier.order() + 1) + 8;
        effective = std::max(effective, bound);
    }

    auto to_series = [effective](const ParsedPolynomial& poly) {
        std::vector<Rat> coeffs(effective);
        for (const auto& [exponent, coeff] : poly.terms) {
            if (exponent < effective) {
                coeffs[exponent] = coeff;
            }
        }
        return TruncatedSeries(std::move(coeffs));
    };

    std::vector<BranchModel> branches;
    for (const BranchInput& in : inputs) {
        branches.push_back(make_branch(in.name, to_series(in.multiplier)));
    }
    SingularPointModel point = build_singular_point(std::move(branches));

    std::vector<std::vector<TruncatedSeries>> sections(static_cast<std::size_t>(r) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(r); ++i) {
        for (const BranchInput& in : inputs) {
            sections[i].push_back(to_series(in.sections[i]));
        }
    }
    const LocalLinearSystem sys = make_local_system(point, std::move(sections));
    const WeightReport weight = point_weight(point, sys);

    ordered_json out;
    out["kind"] = "singularity";
    out["r"] = r;
    out["precision"] = effective;
    out["precision_raised"] = effective > requested;
    out["n_p"] = point.n_p;
    out["delta_p"] = point.delta_p;
    out["total_weight"] = weight.total_weight;
    out["lower_bound"] = weight.lower_bound;
    out["extraweight"] = weight.extraweight;
    out["branches"] = ordered_json::array();
    for (std::size_t b = 0; b < point.branches.size(); ++b) {
        std::vector<TruncatedSeries> restricted;
        for (const auto& section : sys.sections) {
            restricted.push_back(section[b]);
        }
        const VanishingProfile profile = vanishing_sequence(restricted);
        ordered_json entry;
        entry["name"] = point.branches[b].name;
        entry["conductor_order"] = point.branches[b].conductor_order;
        entry["wronskian_order"] = weight.per_branch_order[b].value();
        entry["vanishing_sequence"] = profile.vanishing_sequence;
        entry["gap_sequence"] = profile.gap_sequence;
        entry["branch_weight"] = profile.weight;
        out["branches"].push_back(std::move(entry));
    }
    return out;
}

ordered_json run_semigroup(const json& scenario) {
    check_keys(scenario, "semigroup", {"kind", "description", "generators"});
    if (!scenario.contains("generators") || !scenario.at("generators").is_array() ||
        scenario.at("generators").empty()) {
        fail("\"generators\" must be a nonempty array of positive integers");
    }
    std::vector<long> generators;
    for (const json& g : scenario.at("generators")) {
        if (!g.is_number_integer()) {
            fail("\"generators\" must contain integers");
        }
        generators.push_back(g.get<long>());
    }
    const NumericalSemigroup s = semigroup_from_generators(generators);
    const GorensteinReport report = gorenstein_test_monomial(s);

    ordered_json out;
    out["kind"] = "semigroup";
    out["generators"] = s.generators;
    out["conductor"] = s.conductor;
    out["frobenius"] = s.frobenius;
    out["delta"] = s.delta;
    out["n_p"] = report.n_p;
    out["elements_below_conductor"] = s.elements_below_conductor;
    out["gaps"] = s.gaps;
    out["symmetric"] = s.symmetric;
    out["gorenstein"] = report.gorenstein;
    return out;
}

ordered_json run_brill_segre(const json& scenario) {
    check_keys(scenario, "brill-segre", {"kind", "description", "r", "d", "g"});
    const long r = require_int(scenario, "r", 0, 1000000);
    const long d = require_int(scenario, "d", -1000000, 1000000);
    const long g = require_int(scenario, "g", -1000000, 1000000);
    ordered_json out;
    out["kind"] = "brill-segre";
    out["r"] = r;
    out["d"] = d;
    out["g"] = g;
    out["total_weight"] = json_of(brill_segre(r, d, g));
    return out;
}

ordered_json run_jet_chern(const json& scenario) {
    check_keys(scenario, "jet-chern", {"kind", "description", "k"});
    const long k = require_int(scenario, "k", 0, 1000);
    const JetC1 c1 = jet_c1(k);
    const JetC2 c2 = jet_c2(k);
    ordered_json out;
    out["kind"] = "jet-chern";
    out["k"] = k;
    out["c1"]["zeta"] = json_of(c1.zeta_mult);
    out["c1"]["eta"] = json_of(c1.eta_mult);
    out["c2"]["eta_sq"] = json_of(c2.eta2);
    out["c2"]["eta_zeta"] = json_of(c2.eta_zeta);
    out["c2"]["zeta_sq"] = json_of(c2.zeta2);
    return out;
}

ordered_json run_pencil(const json& scenario) {
    check_keys(scenario, "pencil", {"kind", "description", "n", "d"});
    const long n = require_int(scenario, "n", 1, 64);
    const long d = require_int(scenario, "d", 1, 1000000);
    ordered_json out;
    out["kind"] = "pencil";
    out["n"] = n;
    out["d"] = d;
    out["singular_members"] = json_of(pencil_nodes(n, d));
    return out;
}

ordered_json run_sw_class(const json& scenario) {
    check_keys(scenario, "sw-class", {"kind", "description", "g"});
    const long g = require_int(scenario, "g", 1, 200);
    const SwClassBreakdown breakdown = sw_class(g);
    ordered_json out;
    out["kind"] = "sw-class";
    out["g"] = g;
    out["lambda_coeff"] = json_of(breakdown.lambda_coeff);
    out["a0"] = json_of(breakdown.a0);
    ordered_json m = ordered_json::object();
    for (const auto& [i, value] : breakdown.m) {
        m[std::to_string(i)] = json_of(value);
    }
    out["m"] = std::move(m);
    ordered_json c = ordered_json::object();
    ordered_json b = ordered_json::object();
    for (const auto& [i, value] : breakdown.c) {
        c[std::to_string(i)] = json_of(value);
    }
    for (const auto& [i, value] : breakdown.b) {
        b[std::to_string(i)] = json_of(value);
    }
    out["c"] = std::move(c);
    out["b"] = std::move(b);
    out["class"] = json_of_class(breakdown.final);
    return out;
}

ordered_json run_hyperflex_g3(const json& scenario) {
    check_keys(scenario, "hyperflex-g3", {"kind", "description"});
    const HyperflexClassG3 h = hyperflex_class_g3();
    ordered_json out;
    out["kind"] = "hyperflex-g3";
    out["class"] = json_of_class(h.value);
    out["delta1_discrepancy"] = h.delta1_discrepancy;
    out["delta1_alternative"] = json_of(h.delta1_alternative);
    out["sw_class"] = json_of_class(sw_class(3).final);
    out["hyperelliptic_class"] = json_of_class(hyperelliptic_class_g3());
    out["quartic_pencil_count"] = json_of(evaluate_class(h.value, quartic_pencil_degrees()));
    return out;
}

} // namespace

ordered_json run_scenario(const json& scenario, const RunOptions& options) {
    if (!scenario.is_object()) {
        fail("scenario must be a JSON object");
    }
    if (!scenario.contains("kind") || !scenario.at("kind").is_string()) {
        fail("scenario needs a string \"kind\"");
    }
    const std::string kind = scenario.at("kind").get<std::string>();
    if (kind == "singularity") {
        return run_singularity(scenario, options);
    }
    if (kind == "semigroup") {
        return run_semigroup(scenario);
    }
    if (kind == "brill-segre") {
        return run_brill_segre(scenario);
    }
    if (kind == "jet-chern") {
        return run_jet_chern(scenario);
    }
    if (kind == "pencil") {
        return run_pencil(scenario);
    }
    if (kind == "sw-class") {
        return run_sw_class(scenario);
    }
    if (kind == "hyperflex-g3") {
        return run_hyperflex_g3(scenario);
    }
    fail("unknown scenario kind \"" + kind + "\"");
}

std::string canonical_dump(const ordered_json& report) {
    return report.dump(2) + "\n";
}

namespace {

std::string sequence_text(const ordered_json& values) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? " " : "") << values[i].dump();
    }
    out << ")";
    return out.str();
}

std::string class_text(const ordered_json& cls) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : cls.items()) {
        const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
        out << (first ? "" : "  ") << key << " = " << v;
        first = false;
    }
    return out.str();
}

} // namespace

std::string render_text(const ordered_json& report) {
    std::ostringstream out;
    const std::string kind = report.at("kind").get<std::string>();
    out << kind << " report\n";
    if (kind == "singularity") {
        out << "  r = " << report.at("r") << ", precision = " << report.at("precision");
        if (report.at("precision_raised").get<bool>()) {
            out << " (raised by the certification bound)";
        }
        out << "\n";
        out << "  n_P = " << report.at("n_p") << ", delta_P = " << report.at("delta_p") << "\n";
        out << "  total weight = " << report.at("total_weight") << " (lower bound "
            << report.at("lower_bound") << ", extraweight " << report.at("extraweight") << ")\n";
        for (const auto& branch : report.at("branches")) {
            out << "  branch " << branch.at("name").get<std::string>() << ": conductor order "
                << branch.at("conductor_order") << ", Wronskian order "
                << branch.at("wronskian_order") << ", vanishing "
                << sequence_text(branch.at("vanishing_sequence")) << ", gaps "
                << sequence_text(branch.at("gap_sequence")) << ", weight "
                << branch.at("branch_weight") << "\n";
        }
        return out.str();
    }
    if (kind == "semigroup") {
        out << "  generators = " << sequence_text(report.at("generators")) << "\n";
        out << "  conductor = " << report.at("conductor") << ", frobenius = "
            << report.at("frobenius") << ", delta = " << report.at("delta") << "\n";
        out << "  gaps = " << sequence_text(report.at("gaps")) << "\n";
        out << "  symmetric = " << report.at("symmetric") << ", gorenstein = "
            << report.at("gorenstein") << " (n_P = " << report.at("n_p") << ")\n";
        return out.str();
    }
    if (kind == "sw-class") {
        out << "  g = " << report.at("g") << "\n";
        out << "  class: " << class_text(report.at("class")) << "\n";
        out << "  a0 = " << report.at("a0").dump() << ", lambda coefficient = "
            << report.at("lambda_coeff").dump() << "\n";
        return out.str();
    }
    if (kind == "hyperflex-g3") {
        out << "  class: " << class_text(report.at("class")) << "\n";
        out << "  delta_1 discrepancy: computed "
            << report.at("class").at("delta_1").dump() << ", alternative "
            << report.at("delta1_alternative").dump() << "\n";
        out << "  quartic pencil count = " << report.at("quartic_pencil_count").dump() << "\n";
        return out.str();
    }
    // Scalar/tuple kinds: print every key after "kind" on one line each.
    for (const auto& [key, value] : report.items()) {
        if (key == "kind" || key == "description") {
            continue;
        }
        out << "  " << key << " = " << value.dump() << "\n";
    }
    return out.str();
}

namespace {

const std::array<BundledScenario, 11> kBundled = {{
#include "bundled_scenarios.inc"
}};

} // namespace

std::span<const BundledScenario> bundled_scenarios() {
    return kBundled;
}

const BundledScenario* find_bundled(std::string_view name) {
    std::string_view stem = name;
    if (stem.size() > 5 && stem.substr(stem.size() - 5) == ".json") {
        stem = stem.substr(0, stem.size() - 5);
    }
    for (const BundledScenario& s : kBundled) {
        if (s.name == stem) {
            return &s;
        }
    }
    return nullptr;
}

} // namespace wlx::cli
