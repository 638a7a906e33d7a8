#ifndef METALLIC_REPORT_HPP
#define METALLIC_REPORT_HPP

// Batch runs over a spec file: validation, classification, identity suites,
// theorem suite and file-level claims, rendered as text or JSON.

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "connection.hpp"
#include "errors.hpp"
#include "random.hpp"
#include "spec_file.hpp"
#include "verify.hpp"

namespace metallic {

enum class Format { text, machine };

enum ExitCode : int { exit_ok = 0, exit_parse = 1, exit_validation = 2, exit_identity = 3, exit_theorem = 4 };

inline const std::vector<std::string> &all_checks()
{
    static const std::vector<std::string> c = {"classify", "identities", "lemma44", "theorems", "examples"};
    return c;
}

struct RunConfig {
    std::string path;
    std::set<std::string> checks; // empty: all
    std::optional<std::string> points;
    std::optional<std::string> eta;
    std::uint64_t seed = 1;
    Format format = Format::text;
    bool signature_as_stated = false;
    std::optional<std::pair<long, long>> pq;
    std::size_t random_fields = 2;  // random tangent fields added to the frame fields
    std::size_t metallic_pairs = 50; // random vector pairs for the structure equations

    bool wants(const std::string &c) const { return checks.empty() || checks.count(c) > 0; }
    ParseOptions parse_options() const { return {signature_as_stated, pq, eta, points}; }
};

struct ExpectationResult {
    Expectation claim;
    std::string actual;
    bool holds = false;
};

struct RunReport {
    int exit_code = exit_ok;
    std::string error;   // diagnostic for exit codes 1 and 2
    std::string hash;
    std::uint64_t seed = 0;
    std::optional<Classification> classification;
    std::string signature, signature_as_stated, stated_verdict;
    bool using_stated = false;
    IdentityReport identities;
    std::vector<TheoremReport> theorems;
    std::vector<ExpectationResult> expectations;
    bool ran_identities = false, ran_theorems = false, ran_expectations = false;
};

// 64-bit FNV-1a.
inline std::string fnv1a_hex(const std::string &s)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

namespace detail {

inline bool parse_bool(const Expectation &e)
{
    if (e.value == "true") {
        return true;
    }
    if (e.value == "false") {
        return false;
    }
    throw parse_error("expected true or false for '" + e.key + "'", e.line, 1);
}

inline std::string yes(bool b) { return b ? "true" : "false"; }

// Rejects claims the evaluator does not understand before any work is done.
inline void check_expectation_keys(const ManifoldSpec &ms)
{
    static const std::set<std::string> scalar = {"r",         "kind",   "invariant",  "ssi",
                                                 "b_dim",     "b0_dim", "bprime_dim", "invariant_criterion",
                                                 "bperp_dim"};
    for (const auto &e : ms.expects) {
        if (scalar.count(e.key)) {
            continue;
        }
        const auto dot = e.key.find('.');
        const std::string head = e.key.substr(0, dot);
        const std::string tail = dot == std::string::npos ? "" : e.key.substr(dot + 1);
        if ((head == "integrable" || head == "parallel" || head == "parallel_weak") && distribution_from(tail)) {
            continue;
        }
        if (head == "theorem" && !tail.empty()) {
            continue;
        }
        throw parse_error("unknown claim '" + e.key + "'", e.line, 1);
    }
}

inline ExpectationResult evaluate_expectation(const Expectation &e, const ManifoldSpec &ms, const Classification &c,
                                              const std::vector<TheoremReport> &theorems)
{
    ExpectationResult r{e, "", false};
    auto num = [&](std::size_t v) {
        r.actual = std::to_string(v);
        r.holds = r.actual == e.value;
    };
    auto flag = [&](bool v) {
        r.actual = yes(v);
        r.holds = v == parse_bool(e);
    };
    const auto dot = e.key.find('.');
    const std::string head = e.key.substr(0, dot);
    const std::string tail = dot == std::string::npos ? "" : e.key.substr(dot + 1);
    if (e.key == "r") {
        num(c.r);
    } else if (e.key == "kind") {
        r.actual = to_string(c.kind);
        r.holds = r.actual == e.value;
    } else if (e.key == "invariant") {
        flag(c.invariant);
    } else if (e.key == "ssi") {
        flag(c.ssi);
    } else if (e.key == "invariant_criterion") {
        flag(c.invariant_criterion);
    } else if (e.key == "b_dim") {
        num(c.b_dim);
    } else if (e.key == "bperp_dim") {
        num(c.bperp_dim);
    } else if (e.key == "b0_dim") {
        num(c.b0_dim);
    } else if (e.key == "bprime_dim") {
        num(c.bprime_dim);
    } else if (head == "integrable" || head == "parallel" || head == "parallel_weak") {
        const Distribution d = *distribution_from(tail);
        const PredicateResult pr =
            head == "integrable" ? integrable(ms.space, ms.sub, d)
                                 : parallel_check(ms.space, ms.sub, d,
                                                  head == "parallel" ? ParallelMode::strict : ParallelMode::weak);
        if (pr.vacuous) {
            r.actual = "vacuous";
            r.holds = e.value == "vacuous";
        } else {
            flag(pr.holds);
        }
    } else if (head == "theorem") {
        r.actual = "not evaluated";
        for (const auto &t : theorems) {
            if (t.id == tail) {
                r.actual = t.skipped ? "skipped" : (t.consistent ? "consistent" : "inconsistent");
            }
        }
        r.holds = r.actual == e.value;
    }
    return r;
}

// Verdict under the alternative signature recorded in the file.
inline std::string stated_signature_verdict(const RunConfig &cfg, const ManifoldSpec &ms)
{
    if (!ms.as_stated || ms.using_stated) {
        return {};
    }
    try {
        ParseOptions opts = cfg.parse_options();
        opts.signature_as_stated = true;
        const ManifoldSpec alt = parse_spec_text(ms.source, opts);
        const std::size_t r = radical_rank(alt.space, alt.sub);
        if (r == 0) {
            return "Rad TM = 0, not lightlike";
        }
        return "Rad TM has rank " + std::to_string(r);
    } catch (const error &e) {
        return e.what();
    }
}

inline SuiteFields suite_fields(const ManifoldSpec &ms, Rng &rng, std::size_t random_fields)
{
    const auto &sub = ms.sub;
    SuiteFields f;
    f.tangent = sub.tangent_frame();
    f.screen = sub.screen;
    for (std::size_t k = 0; k < random_fields; ++k) {
        f.tangent.push_back({"X" + std::to_string(k + 1),
                             random_combination(rng, sub.tangent_frame(), sub.embedding.params, sub.m(), 2)});
    }
    if (!sub.screen.empty()) {
        for (std::size_t k = 0; k < random_fields; ++k) {
            f.screen.push_back(
                {"S" + std::to_string(k + 1), random_combination(rng, sub.screen, sub.embedding.params, sub.m(), 2)});
        }
    }
    return f;
}

inline std::int64_t discriminant(const AmbientSpace &space)
{
    return space.params.p * space.params.p + 4 * space.params.q;
}

// J^2 = pJ + q, g(JU,V) = g(U,JV), g(JU,JV) = p g(U,JV) + q g(U,V) on random vectors.
inline void metallic_pairs(const AmbientSpace &space, Rng &rng, std::size_t count, IdentityReport &rep)
{
    const FieldElement p(space.params.p), q(space.params.q);
    const std::vector<std::int64_t> rad = {discriminant(space)};
    for (std::size_t k = 0; k < count; ++k) {
        const Vec u = rng.vec(space.n, rad), v = rng.vec(space.n, rad);
        const Vec ju = space.J * u, jv = space.J * v;
        const std::string w = "pair " + std::to_string(k + 1) + " U=" + u.to_string() + " V=" + v.to_string();
        rep.record_eq("metallic_a", space.J * ju, p * ju + q * u, w);
        rep.record_eq("metallic_b", inner(ju, v, space.sig), inner(u, jv, space.sig), w);
        rep.record_eq("metallic_c", inner(ju, jv, space.sig), p * inner(u, jv, space.sig) + q * inner(u, v, space.sig),
                      w);
    }
}

} // namespace detail

// Runs a parsed spec. Validation errors raised here map to exit code 2.
inline RunReport run_parsed(const ManifoldSpec &ms, const RunConfig &cfg)
{
    RunReport rep;
    rep.hash = fnv1a_hex(ms.source);
    rep.seed = cfg.seed;
    rep.signature = (ms.using_stated ? *ms.as_stated : ms.corrected).to_string();
    rep.using_stated = ms.using_stated;
    if (ms.as_stated) {
        rep.signature_as_stated = ms.as_stated->to_string();
    }
    try {
        detail::check_expectation_keys(ms);
    } catch (const parse_error &e) {
        rep.exit_code = exit_parse;
        rep.error = e.what();
        return rep;
    }
    try {
        rep.stated_verdict = detail::stated_signature_verdict(cfg, ms);
        rep.classification = classify(ms.space, ms.sub);
        const Classification &cls = *rep.classification;
        Rng rng(cfg.seed);
        bool identity_failed = cfg.wants("classify") && !cls.invariant_criterion;
        bool theorem_failed = false;

        if (cfg.wants("identities") || cfg.wants("lemma44")) {
            rep.ran_identities = true;
            const SuiteFields fields = detail::suite_fields(ms, rng, cfg.random_fields);
            if (cfg.wants("identities")) {
                detail::metallic_pairs(ms.space, rng, cfg.metallic_pairs, rep.identities);
            }
            for (const auto &pt : ms.sub.points) {
                PointGeometry geo(ms.space, ms.sub, pt);
                if (cfg.wants("identities")) {
                    rep.identities.merge(identity_suite(geo, fields));
                }
                if (cfg.wants("lemma44")) {
                    rep.identities.merge(lemma44_check(geo, rng));
                }
            }
            identity_failed = identity_failed || !rep.identities.all_pass();
        }
        if (cfg.wants("theorems") || (cfg.wants("examples") && !ms.expects.empty())) {
            rep.theorems = theorem_suite(TheoremContext{ms.space, ms.sub, cls, {}});
            rep.ran_theorems = cfg.wants("theorems");
            for (const auto &t : rep.theorems) {
                theorem_failed = theorem_failed || (rep.ran_theorems && !t.skipped && !t.consistent);
            }
        }
        if (cfg.wants("examples")) {
            rep.ran_expectations = true;
            for (const auto &e : ms.expects) {
                rep.expectations.push_back(detail::evaluate_expectation(e, ms, cls, rep.theorems));
                theorem_failed = theorem_failed || !rep.expectations.back().holds;
            }
        }
        if (!rep.ran_theorems) {
            rep.theorems.clear();
        }
        rep.exit_code = identity_failed ? exit_identity : (theorem_failed ? exit_theorem : exit_ok);
    } catch (const parse_error &e) {
        rep.exit_code = exit_parse;
        rep.error = e.what();
    } catch (const validation_error &e) {
        rep.exit_code = exit_validation;
        rep.error = e.what();
    } catch (const error &e) {
        rep.exit_code = exit_validation;
        rep.error = e.what();
    }
    if (rep.exit_code == exit_validation && ms.as_stated && (ms.using_stated ? *ms.as_stated : ms.corrected) == *ms.as_stated) {
        rep.error += "\nsignature discrepancy: this run used the signature as stated, " + ms.as_stated->to_string();
        if (ms.corrected != *ms.as_stated) {
            rep.error += "; the file records " + ms.corrected.to_string() + " as the corrected signature";
        }
    }
    return rep;
}

inline RunReport run(const RunConfig &cfg)
{
    try {
        const ManifoldSpec ms = parse_spec(cfg.path, cfg.parse_options());
        return run_parsed(ms, cfg);
    } catch (const parse_error &e) {
        RunReport rep;
        rep.exit_code = exit_parse;
        rep.error = e.what();
        rep.seed = cfg.seed;
        return rep;
    } catch (const std::invalid_argument &e) {
        RunReport rep;
        rep.exit_code = exit_parse;
        rep.error = e.what();
        rep.seed = cfg.seed;
        return rep;
    } catch (const error &e) {
        // structure or field validation during construction
        RunReport rep;
        rep.exit_code = exit_validation;
        rep.error = e.what();
        rep.seed = cfg.seed;
        return rep;
    }
}

// ---------------------------------------------------------------- rendering

inline std::string exit_category(int code)
{
    switch (code) {
    case exit_ok:
        return "ok";
    case exit_parse:
        return "parse error";
    case exit_validation:
        return "validation error";
    case exit_identity:
        return "identity failure";
    case exit_theorem:
        return "theorem inconsistency";
    }
    return "unknown";
}

inline nlohmann::ordered_json to_json(const RunReport &rep)
{
    using nlohmann::ordered_json;
    ordered_json out;
    out["spec_hash"] = rep.hash;
    out["seed"] = rep.seed;
    out["exit_code"] = rep.exit_code;
    out["status"] = exit_category(rep.exit_code);
    if (!rep.error.empty()) {
        out["error"] = rep.error;
    }
    out["signature"] = rep.signature;
    if (!rep.signature_as_stated.empty()) {
        out["signature_as_stated"] = rep.signature_as_stated;
        if (!rep.stated_verdict.empty()) {
            out["signature_as_stated_verdict"] = rep.stated_verdict;
        }
    }
    if (rep.classification) {
        const auto &c = *rep.classification;
        ordered_json j;
        j["m"] = c.m;
        j["n"] = c.n;
        j["r"] = c.r;
        j["kind"] = to_string(c.kind);
        j["invariant"] = c.invariant;
        j["ssi"] = c.ssi;
        j["b_dim"] = c.b_dim;
        j["bperp_dim"] = c.bperp_dim;
        j["b0_dim"] = c.b0_dim;
        j["bprime_dim"] = c.bprime_dim;
        j["split_declared"] = c.split_declared;
        j["invariant_criterion"] = c.invariant_criterion;
        j["notes"] = c.notes;
        out["classification"] = j;
    } else {
        out["classification"] = nullptr;
    }
    ordered_json ids = ordered_json::array();
    for (const auto &r : rep.identities.results()) {
        ordered_json j;
        j["tag"] = r.tag;
        j["checks"] = r.checks;
        j["failures"] = r.failures;
        j["skipped"] = r.skipped;
        j["pass"] = r.pass();
        j["note"] = r.note;
        j["witness"] = r.witness;
        ids.push_back(j);
    }
    out["identities"] = ids;
    ordered_json ths = ordered_json::array();
    for (const auto &t : rep.theorems) {
        ordered_json j;
        j["id"] = t.id;
        j["condition_holds"] = t.condition_holds;
        j["property_holds"] = t.property_holds;
        j["consistent"] = t.consistent;
        j["skipped"] = t.skipped;
        if (t.strict_property_holds) {
            j["strict_property_holds"] = *t.strict_property_holds;
        }
        ordered_json ws = ordered_json::array();
        for (const auto &w : t.witnesses) {
            ws.push_back({{"point", w.point}, {"fields", w.fields}, {"residual", w.residual}});
        }
        j["witnesses"] = ws;
        ths.push_back(j);
    }
    out["theorems"] = ths;
    ordered_json ex = ordered_json::array();
    for (const auto &e : rep.expectations) {
        ex.push_back({{"claim", e.claim.key}, {"expected", e.claim.value}, {"actual", e.actual}, {"holds", e.holds}});
    }
    out["expectations"] = ex;
    return out;
}

inline std::string render_machine(const RunReport &rep) { return to_json(rep).dump(2) + "\n"; }

inline std::string render_text(const RunReport &rep, const RunConfig &cfg)
{
    std::ostringstream o;
    o << "spec " << cfg.path;
    if (!rep.hash.empty()) {
        o << " (hash " << rep.hash << ")";
    }
    o << ", seed " << rep.seed << "\n";
    if (!rep.signature.empty()) {
        o << "signature " << rep.signature << (rep.using_stated ? " (as stated)" : "") << "\n";
    }
    if (!rep.signature_as_stated.empty() && !rep.using_stated) {
        o << "  as stated " << rep.signature_as_stated << ": " << rep.stated_verdict << "\n";
    }
    if (!rep.error.empty()) {
        o << "error: " << rep.error << "\n";
    }
    if (rep.classification && cfg.wants("classify")) {
        const auto &c = *rep.classification;
        o << "classification\n";
        o << "  m=" << c.m << " n=" << c.n << " r=" << c.r << " (" << to_string(c.kind) << ")\n";
        o << "  invariant " << detail::yes(c.invariant) << ", screen semi-invariant " << detail::yes(c.ssi) << "\n";
        o << "  dim B=" << c.b_dim << " B-perp=" << c.bperp_dim << " B0=" << c.b0_dim << " B'=" << c.bprime_dim
          << (c.split_declared ? "" : " (B defaults to S(TM))") << "\n";
        o << "  invariant == (ssi and B-perp = 0): " << (c.invariant_criterion ? "holds" : "FAILS") << "\n";
        for (const auto &n : c.notes) {
            o << "  note: " << n << "\n";
        }
    }
    if (rep.ran_identities) {
        o << "identities\n";
        for (const auto &r : rep.identities.results()) {
            o << "  " << (r.skipped ? "SKIP" : (r.failures ? "FAIL" : "PASS")) << " " << r.tag;
            if (!r.skipped) {
                o << " (" << r.checks << " checks";
                if (r.failures) {
                    o << ", " << r.failures << " failed";
                }
                o << ")";
            }
            if (!r.note.empty()) {
                o << " - " << r.note;
            }
            o << "\n";
            if (r.failures) {
                o << "      " << r.witness << "\n";
            }
        }
    }
    if (rep.ran_theorems) {
        o << "theorems\n";
        for (const auto &t : rep.theorems) {
            if (t.skipped) {
                o << "  SKIP " << t.id << " - " << t.skip_reason << "\n";
                continue;
            }
            o << "  " << (t.consistent ? "OK  " : "FAIL") << " " << t.id << ": condition "
              << detail::yes(t.condition_holds) << ", property " << detail::yes(t.property_holds);
            if (t.strict_property_holds) {
                o << ", strict property " << detail::yes(*t.strict_property_holds);
            }
            o << "\n";
            if (!t.note.empty()) {
                o << "      " << t.note << "\n";
            }
            for (const auto &w : t.witnesses) {
                o << "      at " << w.point << " [" << w.fields << "]: " << w.residual << "\n";
            }
        }
    }
    if (rep.ran_expectations && !rep.expectations.empty()) {
        o << "claims\n";
        for (const auto &e : rep.expectations) {
            o << "  " << (e.holds ? "PASS" : "FAIL") << " " << e.claim.key << " = " << e.claim.value;
            if (!e.holds) {
                o << " (got " << e.actual << ")";
            }
            o << "\n";
        }
    }
    o << "result: " << exit_category(rep.exit_code) << " (exit " << rep.exit_code << ")\n";
    return o.str();
}

inline std::string render(const RunReport &rep, const RunConfig &cfg)
{
    return cfg.format == Format::machine ? render_machine(rep) : render_text(rep, cfg);
}

} // namespace metallic

#endif
