// Data-driven verification scenarios.  A scenario bundles named fixtures
// (rings plus generator lists with declared Hilbert functions) and a list of
// checks; running one produces a report that serializes to stable JSON.
// Scenario definitions ship embedded in the binary and can be overridden
// from a file at runtime.
#ifndef LEXPOINT_SCENARIO_HPP
#define LEXPOINT_SCENARIO_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lexpoint/exterior.hpp"
#include "lexpoint/family.hpp"
#include "lexpoint/hilbert.hpp"
#include "lexpoint/ideal.hpp"
#include "lexpoint/parse.hpp"
#include "lexpoint/sample.hpp"
#include "lexpoint/scenarios_embed.hpp"
#include "lexpoint/tangent.hpp"

namespace lexpoint {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skip };

inline std::string check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    default:
        return "skip";
    }
}

inline CheckStatus check_status_from_name(const std::string& name) {
    if (name == "pass")
        return CheckStatus::Pass;
    if (name == "fail")
        return CheckStatus::Fail;
    if (name == "skip")
        return CheckStatus::Skip;
    throw UsageError("unknown check status '" + name + "'");
}

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Fail;
    std::string expected;
    std::string actual;
    std::string provenance;
    long long ms = 0;

    friend bool operator==(const CheckResult& a, const CheckResult& b) {
        return a.id == b.id && a.status == b.status && a.expected == b.expected &&
               a.actual == b.actual && a.provenance == b.provenance && a.ms == b.ms;
    }
};

struct VerificationReport {
    std::string scenario;
    std::uint64_t seed = 0;
    std::string field;
    std::vector<CheckResult> checks;
    bool pass = false;

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.scenario == b.scenario && a.seed == b.seed && a.field == b.field &&
               a.checks == b.checks && a.pass == b.pass;
    }
};

inline Json report_to_json(const VerificationReport& r) {
    Json j;
    j["scenario"] = r.scenario;
    j["seed"] = r.seed;
    j["field"] = r.field;
    Json arr = Json::array();
    for (const CheckResult& c : r.checks) {
        Json cj;
        cj["id"] = c.id;
        cj["status"] = check_status_name(c.status);
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["provenance"] = c.provenance;
        cj["ms"] = c.ms;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    j["pass"] = r.pass;
    return j;
}

inline VerificationReport report_from_json(const Json& j) {
    try {
        VerificationReport r;
        r.scenario = j.at("scenario").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.field = j.at("field").get<std::string>();
        for (const Json& cj : j.at("checks")) {
            CheckResult c;
            c.id = cj.at("id").get<std::string>();
            c.status = check_status_from_name(cj.at("status").get<std::string>());
            c.expected = cj.at("expected").get<std::string>();
            c.actual = cj.at("actual").get<std::string>();
            c.provenance = cj.at("provenance").get<std::string>();
            c.ms = cj.at("ms").get<long long>();
            r.checks.push_back(std::move(c));
        }
        r.pass = j.at("pass").get<bool>();
        return r;
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed report JSON: ") + e.what());
    }
}

inline std::string report_to_text(const VerificationReport& r) {
    std::string out = "scenario " + r.scenario + " (seed " + std::to_string(r.seed) +
                      ", field " + r.field + ")\n";
    int passed = 0;
    for (const CheckResult& c : r.checks) {
        out += "  [" + check_status_name(c.status) + "] " + c.id + ": " + c.actual;
        if (c.status != CheckStatus::Pass)
            out += " (expected " + c.expected + ")";
        if (c.ms > 0)
            out += " [" + std::to_string(c.ms) + " ms]";
        out += "\n";
        if (c.status == CheckStatus::Pass)
            ++passed;
    }
    out += r.pass ? "result: PASS" : "result: FAIL";
    out += " (" + std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks)\n";
    return out;
}

// ---------------------------------------------------------------------------
// Scenario data model

struct FixtureSpec {
    std::string name;
    std::string ring;
    std::vector<std::string> gens;
    std::string hf;
    int bound = -1; // -1: use the scenario degree bound
};

struct ScenarioSpec {
    std::string name;
    std::uint64_t seed = 1;
    std::string field;
    int degree_bound = 8;
    std::vector<FixtureSpec> fixtures;
    std::vector<Json> checks;
};

struct ScenarioSet {
    std::vector<ScenarioSpec> scenarios;
};

namespace detail {

inline const Json& jfield(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw UsageError(where + ": missing key '" + key + "'");
    return *it;
}

inline std::string jstring(const Json& j, const char* key, const std::string& where) {
    const Json& v = jfield(j, key, where);
    if (!v.is_string())
        throw UsageError(where + ": key '" + key + "' must be a string");
    return v.get<std::string>();
}

inline long long jint(const Json& j, const char* key, const std::string& where) {
    const Json& v = jfield(j, key, where);
    if (!v.is_number_integer())
        throw UsageError(where + ": key '" + key + "' must be an integer");
    return v.get<long long>();
}

inline long long jint_or(const Json& j, const char* key, long long fallback,
                         const std::string& where) {
    if (j.find(key) == j.end())
        return fallback;
    return jint(j, key, where);
}

inline std::vector<std::string> jstrings(const Json& j, const char* key,
                                         const std::string& where) {
    const Json& v = jfield(j, key, where);
    if (!v.is_array())
        throw UsageError(where + ": key '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const Json& e : v) {
        if (!e.is_string())
            throw UsageError(where + ": key '" + key + "' must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline const std::set<std::string>& known_check_ops() {
    static const std::set<std::string> ops = {
        "lex-ideal",         "hf",
        "h-vector",          "initial",
        "saturate",          "minors-sat",
        "classify3",         "substitute",
        "tangent",           "sample",
        "z4-recover",        "conca-sidman",
        "flat-limit",        "fiber-hf",
        "sat-fiber-minors",  "pencil-free-suite",
        "square-zero-suite", "quadric-fact",
        "pencil-adversarial", "square-zero-example",
        "x5-pencil-unique",  "y5-envelope-unique"};
    return ops;
}

} // namespace detail

inline ScenarioSet parse_scenarios(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("scenario data is not valid JSON: ") + e.what());
    }
    if (!root.is_object() || root.find("scenarios") == root.end() ||
        !root["scenarios"].is_array())
        throw UsageError("scenario data must be an object with a 'scenarios' array");

    ScenarioSet set;
    std::set<std::string> names;
    for (const Json& sj : root["scenarios"]) {
        ScenarioSpec sc;
        sc.name = detail::jstring(sj, "name", "scenario list");
        const std::string where = "scenario '" + sc.name + "'";
        if (!names.insert(sc.name).second)
            throw UsageError("duplicate scenario name '" + sc.name + "'");
        sc.seed = static_cast<std::uint64_t>(detail::jint(sj, "seed", where));
        sc.field = detail::jstring(sj, "field", where);
        sc.degree_bound = static_cast<int>(detail::jint(sj, "degree_bound", where));
        if (sc.degree_bound < 1 || sc.degree_bound > 16)
            throw UsageError(where + ": degree_bound must be 1..16");

        if (sj.find("fixtures") != sj.end()) {
            for (const Json& fj : sj["fixtures"]) {
                FixtureSpec f;
                f.name = detail::jstring(fj, "name", where + " fixtures");
                const std::string fwhere = where + " fixture '" + f.name + "'";
                f.ring = detail::jstring(fj, "ring", fwhere);
                f.gens = detail::jstrings(fj, "gens", fwhere);
                f.hf = detail::jstring(fj, "hf", fwhere);
                f.bound = static_cast<int>(detail::jint_or(fj, "bound", -1, fwhere));
                for (const FixtureSpec& seen : sc.fixtures)
                    if (seen.name == f.name)
                        throw UsageError(fwhere + ": duplicate fixture name");
                sc.fixtures.push_back(std::move(f));
            }
        }

        std::set<std::string> ids;
        for (const Json& cj : detail::jfield(sj, "checks", where)) {
            std::string id = detail::jstring(cj, "id", where + " checks");
            const std::string cwhere = where + " check '" + id + "'";
            if (!ids.insert(id).second)
                throw UsageError(cwhere + ": duplicate check id");
            std::string op = detail::jstring(cj, "op", cwhere);
            if (detail::known_check_ops().count(op) == 0)
                throw UsageError(cwhere + ": unknown op '" + op + "'");
            std::string prov = detail::jstring(cj, "provenance", cwhere);
            if (prov != "PAPER" && prov != "TRIVIAL" && prov != "DERIVED")
                throw UsageError(cwhere + ": provenance must be PAPER, TRIVIAL or DERIVED");
            sc.checks.push_back(cj);
        }
        set.scenarios.push_back(std::move(sc));
    }
    return set;
}

inline ScenarioSet embedded_scenarios() { return parse_scenarios(embedded_scenarios_json()); }

inline std::vector<std::string> scenario_names(const ScenarioSet& set) {
    std::vector<std::string> out;
    for (const ScenarioSpec& sc : set.scenarios)
        out.push_back(sc.name);
    return out;
}

// ---------------------------------------------------------------------------
// Check execution

namespace detail {

// Deterministic per-check seed derivation (FNV-1a over id, seed, index) so a
// single scenario seed reproducibly drives every randomized check.
inline std::uint64_t derive_seed(std::uint64_t scenario_seed, const std::string& id,
                                 std::uint64_t index) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ull;
    }
    mix(scenario_seed);
    mix(index);
    return h;
}

inline const FixtureSpec& find_fixture(const ScenarioSpec& sc, const std::string& name,
                                       const std::string& where) {
    for (const FixtureSpec& f : sc.fixtures)
        if (f.name == name)
            return f;
    throw UsageError(where + ": unknown fixture '" + name + "'");
}

template <typename S>
Rref<S> span_in_degree(const RingPtr<S>& ring, int d, const std::vector<Element<S>>& forms) {
    auto basis = monomial_basis(*ring, d);
    Rref<S> out(static_cast<int>(basis.size()));
    for (const Element<S>& f : forms)
        out.insert(element_to_row(basis, f));
    return out;
}

template <typename S>
std::optional<int> first_component_difference(const Ideal<S>& a, const Ideal<S>& b, int bound) {
    for (int d = 0; d <= bound; ++d)
        if (a.component(d) != b.component(d))
            return d;
    return std::nullopt;
}

inline std::string join_strings(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

template <typename S>
std::vector<std::string> generator_strings(const std::vector<Element<S>>& gens) {
    std::vector<std::string> out;
    for (const Element<S>& g : gens)
        out.push_back(g.to_string());
    return out;
}

// Runs fn(ring, ideal) in the fixture's ring.
template <typename Fn>
auto with_fixture(const FixtureSpec& f, Fn&& fn) {
    return with_parsed_ring(parse_ring_spec(f.ring), [&](auto ring) {
        auto ideal = ideal_from_strings(ring, f.gens);
        return fn(std::move(ring), std::move(ideal));
    });
}

inline int check_bound(const Json& j, const FixtureSpec& f, const ScenarioSpec& sc,
                       const std::string& where) {
    long long b = jint_or(j, "bound", f.bound >= 0 ? f.bound : sc.degree_bound, where);
    if (b < 0 || b > 16)
        throw UsageError(where + ": bound out of range");
    return static_cast<int>(b);
}

// --- op handlers -----------------------------------------------------------

inline void op_lex_ideal(const ScenarioSpec& sc, const Json& j, const std::string& where,
                         CheckResult& r) {
    std::string ring_spec = jstring(j, "ring", where);
    std::string hf_text = jstring(j, "hf", where);
    std::vector<std::string> expect = jstrings(j, "expect", where);
    int bound = static_cast<int>(jint_or(j, "bound", sc.degree_bound, where));
    with_parsed_ring(parse_ring_spec(ring_spec), [&](auto ring) {
        auto L = lex_ideal(ring, parse_hf_spec(hf_text));
        auto want = ideal_from_strings(ring, expect);
        std::vector<std::string> got = generator_strings(L.generators());
        std::vector<std::string> want_str = generator_strings(want.generators());
        std::vector<std::string> got_sorted = got, want_sorted = want_str;
        std::sort(got_sorted.begin(), got_sorted.end());
        std::sort(want_sorted.begin(), want_sorted.end());
        bool ok = got_sorted == want_sorted && L.equals_up_to(want, bound);
        r.expected = "(" + join_strings(want_str, ", ") + ")";
        r.actual = "(" + join_strings(got, ", ") + ")";
        r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    });
}

inline void op_hf(const ScenarioSpec& sc, const Json& j, const std::string& where,
                  CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    int bound = check_bound(j, f, sc, where);
    r.expected = jstring(j, "expect", where);
    with_fixture(f, [&](auto, auto ideal) {
        r.actual = hilbert_function(ideal, bound).to_string();
        r.status = r.actual == r.expected ? CheckStatus::Pass : CheckStatus::Fail;
    });
}

inline void op_h_vector(const ScenarioSpec& sc, const Json& j, const std::string& where,
                        CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    int bound = check_bound(j, f, sc, where);
    r.expected = jstring(j, "expect", where);
    with_fixture(f, [&](auto, auto ideal) {
        r.actual = h_vector(hilbert_function(ideal, bound)).to_string();
        r.status = r.actual == r.expected ? CheckStatus::Pass : CheckStatus::Fail;
    });
}

inline void op_classify3(const ScenarioSpec& sc, const Json& j, const std::string& where,
                         CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    int bound = check_bound(j, f, sc, where);
    r.expected = jstring(j, "expect", where);
    with_fixture(f, [&](auto, auto ideal) {
        r.actual = classify_three_points(ideal, bound).to_string();
        r.status = r.actual == r.expected ? CheckStatus::Pass : CheckStatus::Fail;
    });
}

// Compares a derived ideal against a named fixture componentwise.
template <typename S>
void report_ideal_equality(const Ideal<S>& got, const Ideal<S>& want, int bound,
                           const std::string& what, const std::string& target,
                           CheckResult& r) {
    r.expected = what + " equals " + target + " through degree " + std::to_string(bound);
    std::optional<int> diff = first_component_difference(got, want, bound);
    if (!diff) {
        r.actual = r.expected;
        r.status = CheckStatus::Pass;
    } else {
        r.actual = what + " differs from " + target + " first in degree " +
                   std::to_string(*diff);
        r.status = CheckStatus::Fail;
    }
}

inline void op_initial(const ScenarioSpec& sc, const Json& j, const std::string& where,
                       CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    const FixtureSpec& t = find_fixture(sc, jstring(j, "expect_fixture", where), where);
    if (f.ring != t.ring)
        throw UsageError(where + ": fixtures live in different rings");
    int bound = check_bound(j, f, sc, where);
    with_parsed_ring(parse_ring_spec(f.ring), [&](auto ring) {
        auto I = ideal_from_strings(ring, f.gens);
        auto want = ideal_from_strings(ring, t.gens);
        auto in = initial_ideal(I, bound);
        report_ideal_equality(in, want, bound, "initial ideal of " + f.name, t.name, r);
    });
}

inline void op_substitute(const ScenarioSpec& sc, const Json& j, const std::string& where,
                          CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    const FixtureSpec& t = find_fixture(sc, jstring(j, "expect_fixture", where), where);
    if (f.ring != t.ring)
        throw UsageError(where + ": fixtures live in different rings");
    std::vector<std::string> images = jstrings(j, "images", where);
    int bound = check_bound(j, f, sc, where);
    with_parsed_ring(parse_ring_spec(f.ring), [&](auto ring) {
        using S = typename std::decay_t<decltype(*ring)>::Scalar;
        auto I = ideal_from_strings(ring, f.gens);
        auto want = ideal_from_strings(ring, t.gens);
        std::vector<Element<S>> imgs;
        for (const std::string& text : images)
            imgs.push_back(parse_element<S>(ring, text));
        std::vector<Element<S>> mapped;
        for (const Element<S>& g : I.generators())
            mapped.push_back(g.substitute(imgs));
        auto J = Ideal<S>::from_generators(ring, std::move(mapped));
        report_ideal_equality(J, want, bound, "image of " + f.name, t.name, r);
    });
}

inline void op_saturate(const ScenarioSpec& sc, const Json& j, const std::string& where,
                        CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    std::vector<std::string> expect = jstrings(j, "expect", where);
    int bound = check_bound(j, f, sc, where);
    with_fixture(f, [&](auto ring, auto ideal) {
        auto want = ideal_from_strings(ring, expect);
        auto sat = saturate(ideal, bound);
        report_ideal_equality(sat, want, bound, "saturation of " + f.name,
                              "(" + join_strings(expect, ", ") + ")", r);
    });
}

inline void op_minors_sat(const ScenarioSpec& sc, const Json& j, const std::string& where,
                          CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    const Json& mj = jfield(j, "matrix", where);
    int k = static_cast<int>(jint(j, "k", where));
    int bound = check_bound(j, f, sc, where);
    std::vector<std::string> expect = jstrings(j, "gens_expect", where);
    with_fixture(f, [&](auto ring, auto ideal) {
        using S = typename std::decay_t<decltype(*ring)>::Scalar;
        std::vector<std::vector<Element<S>>> m;
        for (const Json& rowj : mj) {
            std::vector<Element<S>> row;
            for (const Json& ej : rowj)
                row.push_back(parse_element<S>(ring, ej.get<std::string>()));
            m.push_back(std::move(row));
        }
        auto minors = minors_ideal(ring, m, k);
        auto want = ideal_from_strings(ring, expect);
        auto sat = saturate(ideal, bound);
        std::optional<int> d1 = first_component_difference(sat, minors, bound);
        std::optional<int> d2 = first_component_difference(sat, want, bound);
        r.expected = "saturation of " + f.name + " equals both the minor ideal and (" +
                     join_strings(expect, ", ") + ") through degree " + std::to_string(bound);
        if (!d1 && !d2) {
            r.actual = r.expected;
            r.status = CheckStatus::Pass;
        } else {
            r.actual = "saturation of " + f.name + " differs in degree " +
                       std::to_string(d1 ? *d1 : *d2) +
                       (d1 ? " from the minor ideal" : " from the listed generators");
            r.status = CheckStatus::Fail;
        }
    });
}

inline void op_tangent(const ScenarioSpec& sc, const Json& j, const std::string& where,
                       CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    long long min = jint(j, "min", where);
    std::optional<long long> exact;
    if (j.find("expect") != j.end())
        exact = jint(j, "expect", where);
    int d_syz = static_cast<int>(jint_or(j, "d_syz", -1, where));
    with_fixture(f, [&](auto, auto ideal) {
        long long dim = tangent_dimension(ideal, d_syz).dimension;
        r.expected = exact ? "dimension " + std::to_string(*exact) + " (at least " +
                                 std::to_string(min) + ")"
                           : "dimension at least " + std::to_string(min);
        r.actual = "dimension " + std::to_string(dim);
        bool ok = dim >= min && (!exact || dim == *exact);
        r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    });
}

// Draws `count` samples from a locus and re-verifies the declared Hilbert
// function, optional three-point class, and a tangent dimension lower bound.
template <typename S>
void run_sample_series(Locus locus, const FieldOfT<S>& field, std::uint64_t scenario_seed,
                       const Json& j, const std::string& where, CheckResult& r) {
    int count = static_cast<int>(jint(j, "count", where));
    HfSpec hf = parse_hf_spec(jstring(j, "hf", where));
    long long tangent_min = jint(j, "tangent_min", where);
    int d_syz = static_cast<int>(jint_or(j, "d_syz", -1, where));
    std::string classify;
    if (j.find("classify") != j.end())
        classify = jstring(j, "classify", where);

    std::vector<std::string> dims, attempts, problems;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = derive_seed(scenario_seed, r.id, static_cast<std::uint64_t>(i));
        Sample<S> s = sample_locus<S>(locus, seed, field);
        int bound = s.ideal.ring()->kind == RingKind::Exterior ? s.ideal.ring()->n : 8;
        if (!hilbert_function(s.ideal, bound).matches(hf))
            problems.push_back("draw " + std::to_string(i) + ": Hilbert function mismatch");
        if (!classify.empty() && classify_three_points(s.ideal, bound).to_string() != classify)
            problems.push_back("draw " + std::to_string(i) + ": wrong point class");
        long long dim = tangent_dimension(s.ideal, d_syz).dimension;
        if (dim < tangent_min)
            problems.push_back("draw " + std::to_string(i) + ": tangent dimension " +
                               std::to_string(dim));
        dims.push_back(std::to_string(dim));
        attempts.push_back(std::to_string(s.attempts));
    }
    r.expected = std::to_string(count) + " samples with declared growth and tangent dimension" +
                 " at least " + std::to_string(tangent_min);
    if (problems.empty()) {
        r.actual = "tangent dimensions " + join_strings(dims, ",") + " (attempts " +
                   join_strings(attempts, ",") + ")";
        r.status = CheckStatus::Pass;
    } else {
        r.actual = join_strings(problems, "; ");
        r.status = CheckStatus::Fail;
    }
}

inline void op_sample(std::uint64_t scenario_seed, const Json& j, const std::string& where,
                      CheckResult& r) {
    Locus locus = locus_from_name(jstring(j, "locus", where));
    FieldVariant fv = parse_field_spec(jstring(j, "field", where));
    if (const PrimeField* pf = std::get_if<PrimeField>(&fv))
        run_sample_series<GFp>(locus, *pf, scenario_seed, j, where, r);
    else if (std::holds_alternative<RationalField>(fv))
        run_sample_series<Rational>(locus, RationalField{}, scenario_seed, j, where, r);
    else
        throw UsageError(where + ": sampling needs QQ or GF(p)");
}

// Re-derives the stored building blocks of sampled ideals with growth 1,4,...:
// the saturation recovers the two linear forms and the quartic, and the
// degree-2 component recovers the stored quadric space.
inline void op_z4_recover(std::uint64_t scenario_seed, const Json& j, const std::string& where,
                          CheckResult& r) {
    int count = static_cast<int>(jint(j, "count", where));
    int bound = static_cast<int>(jint_or(j, "bound", 6, where));
    FieldVariant fv = parse_field_spec(jstring(j, "field", where));
    const PrimeField* pf = std::get_if<PrimeField>(&fv);
    if (!pf)
        throw UsageError(where + ": recovery sweep needs GF(p)");
    std::vector<std::string> problems;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = derive_seed(scenario_seed, r.id, static_cast<std::uint64_t>(i));
        Sample<GFp> s = sample_locus<GFp>(Locus::Z4, seed, *pf);
        auto tag = [&](const std::string& what) {
            problems.push_back("draw " + std::to_string(i) + ": " + what);
        };
        std::vector<Element<GFp>> expect_gens = s.parts.at("linear");
        expect_gens.push_back(s.parts.at("quartic").front());
        auto want = Ideal<GFp>::from_generators(s.ideal.ring(), std::move(expect_gens));
        auto sat = saturate(s.ideal, bound);
        if (!sat.equals_up_to(want, bound))
            tag("saturation does not recover the linear forms and quartic");
        if (sat.dim(1) != 2)
            tag("saturation has " + std::to_string(sat.dim(1)) + " linear forms");
        if (s.ideal.component(2) != span_in_degree(s.ideal.ring(), 2, s.parts.at("quadrics")))
            tag("degree-2 component does not match the stored quadric space");
    }
    r.expected = std::to_string(count) + " samples with recoverable building blocks";
    r.actual = problems.empty() ? r.expected : join_strings(problems, "; ");
    r.status = problems.empty() ? CheckStatus::Pass : CheckStatus::Fail;
}

// Vanishing ideals of random point quadruples in P^3 should mostly have the
// expected lex initial ideal; degenerate draws are allowed to miss.
inline void op_conca_sidman(std::uint64_t scenario_seed, const Json& j,
                            const std::string& where, CheckResult& r) {
    int trials = static_cast<int>(jint(j, "trials", where));
    int min_pass = static_cast<int>(jint(j, "min_pass", where));
    int bound = static_cast<int>(jint_or(j, "bound", 5, where));
    std::vector<std::string> expect = jstrings(j, "expect", where);
    FieldVariant fv = parse_field_spec(jstring(j, "field", where));
    const PrimeField* pf = std::get_if<PrimeField>(&fv);
    if (!pf)
        throw UsageError(where + ": point sweeps need GF(p)");
    auto ring = make_ring<GFp>(RingKind::Polynomial, 4, *pf);
    auto want = ideal_from_strings(ring, expect);
    std::mt19937_64 rng(derive_seed(scenario_seed, r.id, 0));
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<Vec<GFp>> pts;
        for (int i = 0; i < 4; ++i)
            pts.push_back(random_point(ring, rng));
        try {
            auto I = vanishing_ideal(ring, pts, bound);
            if (initial_ideal(I, bound).equals_up_to(want, bound))
                ++hits;
        } catch (const ComputeError&) {
            // A degenerate draw simply misses.
        }
    }
    r.expected = "at least " + std::to_string(min_pass) + " of " + std::to_string(trials) +
                 " random quadruples with lex initial ideal";
    r.actual = std::to_string(hits) + " of " + std::to_string(trials) + " quadruples matched";
    r.status = hits >= min_pass ? CheckStatus::Pass : CheckStatus::Fail;
}

template <typename K>
void run_flat_limit(const RingPtr<RationalFunction<K>>& ring, const Json& j,
                    const std::string& where, CheckResult& r, int default_bound) {
    std::vector<std::string> gens = jstrings(j, "gens", where);
    std::vector<std::string> expect = jstrings(j, "expect", where);
    int bound = static_cast<int>(jint_or(j, "bound", default_bound, where));
    auto fam = family_from_strings<K>(ring, gens);
    Ideal<K> lim = flat_limit(fam, bound);
    Ideal<K> want = ideal_from_strings(family_base_ring(fam), expect);
    report_ideal_equality(lim, want, bound, "flat limit",
                          "(" + join_strings(expect, ", ") + ")", r);
}

inline void op_flat_limit(const ScenarioSpec& sc, const Json& j, const std::string& where,
                          CheckResult& r) {
    ParsedRingSpec rs = parse_ring_spec(jstring(j, "ring", where));
    if (const auto* fq = std::get_if<FunctionField<RationalField>>(&rs.field))
        run_flat_limit<Rational>(make_ring<RationalFunction<Rational>>(rs.kind, rs.n, *fq), j,
                                 where, r, sc.degree_bound);
    else if (const auto* fp = std::get_if<FunctionField<PrimeField>>(&rs.field))
        run_flat_limit<GFp>(make_ring<RationalFunction<GFp>>(rs.kind, rs.n, *fp), j, where, r,
                            sc.degree_bound);
    else
        throw UsageError(where + ": flat limits need a function field ring");
}

// Specializes a family at a nonzero parameter value drawn from the scenario
// seed and compares the fiber's Hilbert function.
inline void op_fiber_hf(const ScenarioSpec& sc, const Json& j, const std::string& where,
                        CheckResult& r) {
    ParsedRingSpec rs = parse_ring_spec(jstring(j, "ring", where));
    const auto* fq = std::get_if<FunctionField<RationalField>>(&rs.field);
    if (!fq)
        throw UsageError(where + ": fiber checks are defined over QQ(t)");
    std::vector<std::string> gens = jstrings(j, "gens", where);
    std::string expect = jstring(j, "expect", where);
    int bound = static_cast<int>(jint_or(j, "bound", sc.degree_bound, where));
    auto ring = make_ring<RationalFunction<Rational>>(rs.kind, rs.n, *fq);
    auto fam = family_from_strings<Rational>(ring, gens);
    std::mt19937_64 rng(derive_seed(sc.seed, r.id, 0));
    std::int64_t t0 = 1 + static_cast<std::int64_t>(rng() % 9);
    auto fiber = specialize(fam, Rational(t0));
    r.expected = expect;
    r.actual = hilbert_function(fiber, bound).to_string();
    bool ok = r.actual == r.expected;
    r.actual += " (t = " + std::to_string(t0) + ")";
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
}

// Saturation of a family ideal over QQ(t) against a 2x3 matrix of minors,
// plus the Hilbert function of the minor ideal.
inline void op_sat_fiber_minors(const Json& j, const std::string& where, CheckResult& r) {
    using FQ = RationalFunction<Rational>;
    ParsedRingSpec rs = parse_ring_spec(jstring(j, "ring", where));
    const auto* fq = std::get_if<FunctionField<RationalField>>(&rs.field);
    if (!fq)
        throw UsageError(where + ": this check is defined over QQ(t)");
    std::vector<std::string> gens = jstrings(j, "gens", where);
    const Json& mj = jfield(j, "matrix", where);
    int k = static_cast<int>(jint(j, "k", where));
    int bound = static_cast<int>(jint(j, "bound", where));
    std::string hf = jstring(j, "hf", where);
    auto ring = make_ring<FQ>(rs.kind, rs.n, *fq);
    auto fam = family_from_strings<Rational>(ring, gens);
    auto I = Ideal<FQ>::from_generators(fam.ring, fam.gens);
    std::vector<std::vector<Element<FQ>>> m;
    for (const Json& rowj : mj) {
        std::vector<Element<FQ>> row;
        for (const Json& ej : rowj)
            row.push_back(parse_element<FQ>(ring, ej.get<std::string>()));
        m.push_back(std::move(row));
    }
    auto minors = minors_ideal(ring, m, k);
    auto sat = saturate(I, bound);
    bool eq = sat.equals_up_to(minors, bound);
    std::string minors_hf = hilbert_function(minors, bound).to_string();
    r.expected = "saturation equals the minor ideal with growth " + hf;
    if (eq && minors_hf == hf) {
        r.actual = r.expected;
        r.status = CheckStatus::Pass;
    } else {
        r.actual = eq ? "minor ideal growth is " + minors_hf
                      : "saturation differs from the minor ideal";
        r.status = CheckStatus::Fail;
    }
}

inline std::string summary_counts(const TrialSummary& s) {
    std::string out = "checked " + std::to_string(s.checked);
    if (s.agree_true || s.agree_false)
        out += " (true " + std::to_string(s.agree_true) + ", false " +
               std::to_string(s.agree_false) + ")";
    out += ", filtered " + std::to_string(s.filtered) + ", rejected " +
           std::to_string(s.rejected);
    if (!s.counterexamples.empty())
        out += "; counterexample: " + s.counterexamples.front();
    if (!s.note.empty())
        out += "; " + s.note;
    return out;
}

inline void op_trial_suite(const std::string& op, std::uint64_t scenario_seed, const Json& j,
                           const std::string& where, CheckResult& r) {
    int trials = static_cast<int>(jint(j, "trials", where));
    FieldVariant fv = parse_field_spec(jstring(j, "field", where));
    const PrimeField* pf = std::get_if<PrimeField>(&fv);
    if (!pf)
        throw UsageError(where + ": trial suites run over GF(p)");
    std::uint64_t seed = derive_seed(scenario_seed, r.id, 0);
    TrialSummary s;
    bool two_sided = false;
    if (op == "pencil-free-suite") {
        s = check_pencil_free_envelope(seed, trials, *pf);
    } else if (op == "square-zero-suite") {
        s = check_square_zero_envelope(seed, trials, *pf);
        two_sided = true;
    } else {
        s = check_quadric_fact(static_cast<int>(jint(j, "item", where)), seed, trials, *pf);
        two_sided = true;
    }
    bool covered = trials == 0 ? !s.note.empty()
                               : (two_sided ? s.agree_true > 0 && s.agree_false > 0
                                            : s.checked > 0);
    r.expected = trials == 0 ? "vacuous pass with an explanatory note"
                             : "no counterexamples in " + std::to_string(trials) +
                                   " trials with two-sided coverage";
    r.actual = summary_counts(s);
    r.status = s.pass() && covered ? CheckStatus::Pass : CheckStatus::Fail;
}

inline void op_pencil_adversarial(const ScenarioSpec& sc, const Json& j,
                                  const std::string& where, CheckResult& r) {
    const FixtureSpec& f = find_fixture(sc, jstring(j, "fixture", where), where);
    ParsedRingSpec rs = parse_ring_spec(f.ring);
    const PrimeField* pf = std::get_if<PrimeField>(&rs.field);
    if (!pf || rs.kind != RingKind::Exterior)
        throw UsageError(where + ": needs an exterior fixture over GF(p)");
    auto ring = make_ring<GFp>(rs.kind, rs.n, *pf);
    auto I = ideal_from_strings(ring, f.gens);
    PencilFreeOutcome out = pencil_free_envelope_step(I);
    r.expected = "filtered by the rank-2 pencil hypothesis";
    r.actual = out == PencilFreeOutcome::Filtered
                   ? r.expected
                   : (out == PencilFreeOutcome::Holds ? "hypothesis held" : "hypothesis failed");
    r.status = out == PencilFreeOutcome::Filtered ? CheckStatus::Pass : CheckStatus::Fail;
}

inline void op_square_zero_example(const Json& j, const std::string& where, CheckResult& r) {
    std::string ring_spec = jstring(j, "ring", where);
    std::vector<std::string> quadrics = jstrings(j, "quadrics", where);
    const Json& ej = jfield(j, "expect", where);
    if (!ej.is_boolean())
        throw UsageError(where + ": expect must be a boolean");
    bool expect = ej.get<bool>();
    with_parsed_ring(parse_ring_spec(ring_spec), [&](auto ring) {
        using S = typename std::decay_t<decltype(*ring)>::Scalar;
        auto u = QuadricSpace<S>::from_elements(ring, parse_elements<S>(ring, quadrics));
        bool square_zero = u_squared_zero(u);
        bool enveloped = envelope_space(u, 3).has_value();
        r.expected = expect ? "square zero with an enveloping 3-space"
                            : "not square zero and no enveloping 3-space";
        r.actual = std::string(square_zero ? "square zero" : "not square zero") +
                   (enveloped ? " with" : " without") + " an enveloping 3-space";
        r.status = (square_zero == expect && enveloped == expect) ? CheckStatus::Pass
                                                                  : CheckStatus::Fail;
    });
}

// Sampled ideals of the decomposable-pencil family carry exactly one rank-2
// pencil, and it spans the stored one.
inline void op_x5_pencil_unique(std::uint64_t scenario_seed, const Json& j,
                                const std::string& where, CheckResult& r) {
    int count = static_cast<int>(jint(j, "count", where));
    FieldVariant fv = parse_field_spec(jstring(j, "field", where));
    const PrimeField* pf = std::get_if<PrimeField>(&fv);
    if (!pf)
        throw UsageError(where + ": pencil enumeration needs GF(p)");
    std::vector<std::string> problems;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = derive_seed(scenario_seed, r.id, static_cast<std::uint64_t>(i));
        Sample<GFp> s = sample_locus<GFp>(Locus::X5, seed, *pf);
        auto ring = s.ideal.ring();
        auto u = QuadricSpace<GFp>::from_elements(ring, component_elements(s.ideal, 2));
        auto pencils = find_rank2_pencils(u);
        if (pencils.size() != 1) {
            problems.push_back("draw " + std::to_string(i) + ": " +
                               std::to_string(pencils.size()) + " rank-2 pencils");
            continue;
        }
        auto got = span_in_degree(ring, 2, {pencils[0].a, pencils[0].b});
        auto want = span_in_degree(ring, 2, s.parts.at("pencil"));
        if (!(got == want))
            problems.push_back("draw " + std::to_string(i) + ": pencil span mismatch");
    }
    r.expected = "exactly one rank-2 pencil per sample, spanning the stored one";
    r.actual = problems.empty() ? r.expected : join_strings(problems, "; ");
    r.status = problems.empty() ? CheckStatus::Pass : CheckStatus::Fail;
}

// Sampled pencil-free ideals have a one-dimensional annihilator and a unique
// enveloping 4-space matching the stored one; no 3-space envelope exists.
inline void op_y5_envelope_unique(std::uint64_t scenario_seed, const Json& j,
                                  const std::string& where, CheckResult& r) {
    int count = static_cast<int>(jint(j, "count", where));
    FieldVariant fv = parse_field_spec(jstring(j, "field", where));
    const PrimeField* pf = std::get_if<PrimeField>(&fv);
    if (!pf)
        throw UsageError(where + ": envelope sweeps run over GF(p)");
    std::vector<std::string> problems;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = derive_seed(scenario_seed, r.id, static_cast<std::uint64_t>(i));
        Sample<GFp> s = sample_locus<GFp>(Locus::Y5, seed, *pf);
        auto ring = s.ideal.ring();
        auto tag = [&](const std::string& what) {
            problems.push_back("draw " + std::to_string(i) + ": " + what);
        };
        auto u = QuadricSpace<GFp>::from_elements(ring, s.parts.at("quadrics"));
        if (u_squared_zero(u))
            tag("quadric space is square zero");
        if (annihilator_space(u).size() != 1)
            tag("annihilator is not one-dimensional");
        auto env = envelope_space(u, 4);
        if (!env)
            tag("no enveloping 4-space");
        else if (!(span_in_degree(ring, 1, *env) == span_in_degree(ring, 1, s.parts.at("space"))))
            tag("enveloping 4-space does not match the stored one");
        if (envelope_space(u, 3))
            tag("unexpected enveloping 3-space");
    }
    r.expected = "unique enveloping 4-space per sample and no 3-space envelope";
    r.actual = problems.empty() ? r.expected : join_strings(problems, "; ");
    r.status = problems.empty() ? CheckStatus::Pass : CheckStatus::Fail;
}

inline CheckResult run_check(const ScenarioSpec& sc, std::uint64_t scenario_seed,
                             const Json& j, bool timings) {
    CheckResult r;
    r.id = jstring(j, "id", "scenario '" + sc.name + "'");
    const std::string where = "scenario '" + sc.name + "' check '" + r.id + "'";
    r.provenance = jstring(j, "provenance", where);
    std::string op = jstring(j, "op", where);
    auto start = std::chrono::steady_clock::now();
    try {
        if (op == "lex-ideal")
            op_lex_ideal(sc, j, where, r);
        else if (op == "hf")
            op_hf(sc, j, where, r);
        else if (op == "h-vector")
            op_h_vector(sc, j, where, r);
        else if (op == "classify3")
            op_classify3(sc, j, where, r);
        else if (op == "initial")
            op_initial(sc, j, where, r);
        else if (op == "substitute")
            op_substitute(sc, j, where, r);
        else if (op == "saturate")
            op_saturate(sc, j, where, r);
        else if (op == "minors-sat")
            op_minors_sat(sc, j, where, r);
        else if (op == "tangent")
            op_tangent(sc, j, where, r);
        else if (op == "sample")
            op_sample(scenario_seed, j, where, r);
        else if (op == "z4-recover")
            op_z4_recover(scenario_seed, j, where, r);
        else if (op == "conca-sidman")
            op_conca_sidman(scenario_seed, j, where, r);
        else if (op == "flat-limit")
            op_flat_limit(sc, j, where, r);
        else if (op == "fiber-hf")
            op_fiber_hf(sc, j, where, r);
        else if (op == "sat-fiber-minors")
            op_sat_fiber_minors(j, where, r);
        else if (op == "pencil-free-suite" || op == "square-zero-suite" || op == "quadric-fact")
            op_trial_suite(op, scenario_seed, j, where, r);
        else if (op == "pencil-adversarial")
            op_pencil_adversarial(sc, j, where, r);
        else if (op == "square-zero-example")
            op_square_zero_example(j, where, r);
        else if (op == "x5-pencil-unique")
            op_x5_pencil_unique(scenario_seed, j, where, r);
        else if (op == "y5-envelope-unique")
            op_y5_envelope_unique(scenario_seed, j, where, r);
        else
            throw UsageError(where + ": unknown op '" + op + "'");
    } catch (const ComputeError& e) {
        // Compute failures are recorded so the rest of the scenario still runs;
        // malformed data (UsageError) aborts the scenario instead.
        r.status = CheckStatus::Fail;
        r.actual = std::string("error: ") + e.what();
        if (r.expected.empty())
            r.expected = "check completes without a compute error";
    }
    if (timings) {
        auto stop = std::chrono::steady_clock::now();
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    }
    return r;
}

inline void validate_fixtures(const ScenarioSpec& sc) {
    for (const FixtureSpec& f : sc.fixtures) {
        const std::string where = "scenario '" + sc.name + "' fixture '" + f.name + "'";
        try {
            ParsedRingSpec rs = parse_ring_spec(f.ring);
            int bound = f.bound >= 0 ? f.bound : sc.degree_bound;
            if (rs.kind == RingKind::Exterior)
                bound = std::min(bound, rs.n);
            HfSpec spec = parse_hf_spec(f.hf);
            bool ok = with_parsed_ring(rs, [&](auto ring) {
                auto ideal = ideal_from_strings(ring, f.gens);
                return hilbert_function(ideal, bound).matches(spec);
            });
            if (!ok)
                throw UsageError(where + ": declared Hilbert function '" + f.hf +
                                 "' does not match");
        } catch (const Error& e) {
            std::string msg = e.what();
            if (msg.rfind(where, 0) == 0)
                throw;
            throw UsageError(where + ": " + msg);
        }
    }
}

} // namespace detail

struct RunOptions {
    std::optional<std::uint64_t> seed; // overrides the scenario's own seed
    bool timings = false;
};

inline VerificationReport run_scenario(const ScenarioSet& set, const std::string& name,
                                       const RunOptions& options = {}) {
    const ScenarioSpec* sc = nullptr;
    for (const ScenarioSpec& s : set.scenarios)
        if (s.name == name)
            sc = &s;
    if (!sc)
        throw UsageError("unknown scenario '" + name + "'; known: " +
                         detail::join_strings(scenario_names(set), ", "));

    detail::validate_fixtures(*sc);
    VerificationReport rep;
    rep.scenario = sc->name;
    rep.seed = options.seed.value_or(sc->seed);
    rep.field = sc->field;
    for (const Json& cj : sc->checks)
        rep.checks.push_back(detail::run_check(*sc, rep.seed, cj, options.timings));
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Pass;
    });
    return rep;
}

inline std::vector<VerificationReport> run_all_scenarios(const ScenarioSet& set,
                                                         const RunOptions& options = {}) {
    std::vector<VerificationReport> out;
    for (const ScenarioSpec& sc : set.scenarios)
        out.push_back(run_scenario(set, sc.name, options));
    return out;
}

inline Json reports_to_json(const std::vector<VerificationReport>& reports) {
    Json j;
    Json arr = Json::array();
    bool all = true;
    for (const VerificationReport& r : reports) {
        arr.push_back(report_to_json(r));
        all = all && r.pass;
    }
    j["reports"] = std::move(arr);
    j["pass"] = all;
    return j;
}

} // namespace lexpoint

#endif
