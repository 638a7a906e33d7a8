#ifndef METALLIC_VERIFY_HPP
#define METALLIC_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ambient.hpp"
#include "connection.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "submanifold.hpp"

namespace metallic {

// ---------------------------------------------------------------- classification

enum class LightlikeKind { r_lightlike, coisotropic, isotropic, totally_lightlike };

inline std::string to_string(LightlikeKind k)
{
    switch (k) {
    case LightlikeKind::r_lightlike: return "r-lightlike";
    case LightlikeKind::coisotropic: return "coisotropic";
    case LightlikeKind::isotropic: return "isotropic";
    case LightlikeKind::totally_lightlike: return "totally lightlike";
    }
    return "?";
}

inline LightlikeKind lightlike_kind(std::size_t r, std::size_t m, std::size_t n)
{
    const std::size_t codim = n - m;
    if (r == m && r == codim) {
        return LightlikeKind::totally_lightlike;
    }
    if (r == m) {
        return LightlikeKind::isotropic;
    }
    if (r == codim) {
        return LightlikeKind::coisotropic;
    }
    return LightlikeKind::r_lightlike;
}

struct Classification {
    std::size_t m = 0, n = 0, r = 0;
    LightlikeKind kind = LightlikeKind::r_lightlike;
    bool invariant = false;
    bool ssi = false;
    std::size_t b_dim = 0, bperp_dim = 0, b0_dim = 0, bprime_dim = 0;
    bool split_declared = false;
    std::vector<std::string> notes; // first reason each predicate fails
    bool invariant_criterion = true; // invariant == (ssi and B-perp = 0)
};

namespace detail {

inline bool all_in_span(const std::vector<Vec> &images, const std::vector<Vec> &basis)
{
    for (const auto &v : images) {
        if (!in_span(basis, v)) {
            return false;
        }
    }
    return true;
}

inline std::vector<Vec> mapped(const Mat &j, const std::vector<Vec> &vs)
{
    std::vector<Vec> out;
    for (const auto &v : vs) {
        out.push_back(j * v);
    }
    return out;
}

inline std::vector<Vec> values(const PointFrame &pf, const std::vector<NamedParamField> &frame)
{
    std::vector<Vec> out;
    for (const auto &f : frame) {
        out.push_back(pf.jac * f.field.eval(pf.point));
    }
    return out;
}

} // namespace detail

// Orthogonal complement of J B-perp inside S(TM-perp) at one point.
inline std::vector<Vec> b0_basis(const PointFrame &pf, const Signature &sig, const std::vector<Vec> &jbperp)
{
    if (pf.str.empty()) {
        return {};
    }
    if (jbperp.empty()) {
        return pf.str;
    }
    Mat a(jbperp.size(), pf.str.size());
    for (std::size_t i = 0; i < jbperp.size(); ++i) {
        for (std::size_t k = 0; k < pf.str.size(); ++k) {
            a(i, k) = inner(jbperp[i], pf.str[k], sig);
        }
    }
    std::vector<Vec> out;
    for (const auto &c : null_space(a)) {
        Vec v(sig.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!c[k].is_zero()) {
                v += c[k] * pf.str[k];
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Exact membership tests for the J-images of every declared bundle at every sample point.
inline Classification classify(const AmbientSpace &space, const SubmanifoldSpec &spec)
{
    Classification c;
    c.m = spec.m();
    c.n = spec.n();
    c.r = radical_rank(space, spec);
    c.kind = lightlike_kind(c.r, c.m, c.n);
    c.split_declared = spec.declares_split();
    const auto bframe = spec.b_frame();
    const auto bperp = spec.bperp_frame();
    c.b_dim = bframe.size();
    c.bperp_dim = bperp.size();
    c.bprime_dim = c.r + c.b_dim;
    c.invariant = true;
    c.ssi = true;
    auto fail = [&](bool &flag, const std::string &why) {
        if (flag) {
            c.notes.push_back(why);
        }
        flag = false;
    };
    std::optional<std::size_t> b0;
    for (const auto &pt : spec.points) {
        const PointFrame pf = build_point_frame(space, spec, pt);
        const std::string at = " at " + point_to_string(pt);
        const auto jxi = detail::mapped(space.J, pf.xi);
        const auto jscreen = detail::mapped(space.J, pf.screen);
        const auto bv = detail::values(pf, bframe);
        const auto bpv = detail::values(pf, bperp);
        if (!detail::all_in_span(jxi, pf.xi)) {
            fail(c.invariant, "J Rad TM is not contained in Rad TM" + at);
            fail(c.ssi, "J Rad TM is not contained in Rad TM" + at);
        }
        if (!detail::all_in_span(jscreen, pf.screen)) {
            fail(c.invariant, "J S(TM) is not contained in S(TM)" + at);
        }
        if (!detail::all_in_span(detail::mapped(space.J, pf.ltr), pf.ltr)) {
            fail(c.ssi, "J ltr(TM) is not contained in ltr(TM)" + at);
        }
        if (c.split_declared) {
            std::vector<Vec> both = bv;
            both.insert(both.end(), bpv.begin(), bpv.end());
            if (!same_span(both, pf.screen, c.n) || both.size() != pf.screen.size()) {
                throw declared_frame_mismatch("B and B-perp frames do not split S(TM)" + at);
            }
            for (const auto &x : bv) {
                for (const auto &z : bpv) {
                    if (!inner(x, z, space.sig).is_zero()) {
                        throw declared_frame_mismatch("B-perp frame is not orthogonal to B" + at);
                    }
                }
            }
            if (!bv.empty() && rank(gram(bv, space.sig)) != bv.size()) {
                fail(c.ssi, "B is degenerate" + at);
            }
        }
        if (!detail::all_in_span(detail::mapped(space.J, bv), bv)) {
            fail(c.ssi, "J B is not contained in B" + at);
        }
        const auto jbp = detail::mapped(space.J, bpv);
        if (!detail::all_in_span(jbp, pf.str)) {
            fail(c.ssi, "J B-perp is not contained in S(TM-perp)" + at);
        } else {
            const std::size_t here = b0_basis(pf, space.sig, jbp).size();
            if (b0 && *b0 != here) {
                throw rank_jump("dimension of B0 changes" + at);
            }
            b0 = here;
        }
    }
    c.b0_dim = b0.value_or(0);
    c.invariant_criterion = c.invariant == (c.ssi && c.bperp_dim == 0);
    return c;
}

// ---------------------------------------------------------------- reports

struct Witness {
    std::string point;
    std::string fields;
    std::string residual;
};

struct TheoremReport {
    std::string id;
    std::string statement;
    bool condition_holds = true;
    bool property_holds = true;
    bool consistent = true;
    bool skipped = false;
    std::string skip_reason;
    std::string note;
    std::optional<bool> strict_property_holds; // D_U V = 0 where the property is judged in the weak sense
    std::vector<Witness> witnesses;
};

inline constexpr std::size_t max_witnesses = 4;

namespace detail {

// Per-point accumulator for one side of a theorem.
struct Side {
    bool holds = true;
    bool vacuous = true;
    std::vector<Witness> witnesses;

    void check(bool ok, const std::function<Witness()> &w)
    {
        vacuous = false;
        if (!ok) {
            holds = false;
            if (witnesses.size() < 2) {
                witnesses.push_back(w());
            }
        }
    }
    void zero(const FieldElement &x, const std::string &point, const std::string &fields)
    {
        check(x.is_zero(), [&] { return Witness{point, fields, x.to_string()}; });
    }
    void zero(const Vec &x, const std::string &point, const std::string &fields)
    {
        check(x.is_zero(), [&] { return Witness{point, fields, x.to_string()}; });
    }
};

inline std::string names(std::initializer_list<std::string> xs)
{
    std::string s;
    for (const auto &x : xs) {
        s += (s.empty() ? "" : ", ") + x;
    }
    return s;
}

// Frames at one point as local fields.
struct Fields {
    std::vector<LocalField> rad, screen, b, bperp, bprime, tangent, ltr, str;
};

inline Fields local_fields(const PointGeometry &geo)
{
    const auto &spec = geo.spec();
    Fields f;
    auto conv = [&](const std::vector<NamedParamField> &xs) {
        std::vector<LocalField> out;
        for (const auto &x : xs) {
            out.push_back(geo.tangent_field(x.name, x.field));
        }
        return out;
    };
    f.rad = conv(spec.rad);
    f.screen = conv(spec.screen);
    f.b = conv(spec.b_frame());
    f.bperp = conv(spec.bperp_frame());
    f.bprime = conv(spec.bprime_frame());
    f.tangent = conv(spec.tangent_frame());
    for (const auto &x : spec.str) {
        f.str.push_back(geo.ambient_field(x.name, x.field));
    }
    if (spec.has_ltr()) {
        for (const auto &x : spec.ltr) {
            f.ltr.push_back(geo.ambient_field(x.name, x.field));
        }
    } else {
        // Values only: the constructed frame is known pointwise.
        const auto &pf = geo.frame();
        for (std::size_t i = 0; i < pf.ltr.size(); ++i) {
            LocalField lf;
            lf.name = "N" + std::to_string(i + 1);
            lf.jet.val = pf.ltr[i];
            f.ltr.push_back(std::move(lf));
        }
    }
    return f;
}

inline bool bracket_in_span(const PointGeometry &geo, const LocalField &u, const LocalField &v,
                            const std::vector<Vec> &span, Vec *bracket_out = nullptr)
{
    const Vec b = geo.ambient_of(lie_bracket(*u.param, *v.param).eval(geo.point()));
    if (bracket_out) {
        *bracket_out = b;
    }
    return b.is_zero() || in_span(span, b);
}

inline std::vector<Vec> vals(const std::vector<LocalField> &xs)
{
    std::vector<Vec> out;
    for (const auto &x : xs) {
        out.push_back(x.val());
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------- structure equations of f, w, B, C

inline IdentityReport lemma44_check(const PointGeometry &geo, Rng &rng, std::size_t random_vectors = 3)
{
    IdentityReport rep;
    const auto &pf = geo.frame();
    const auto &space = geo.space();
    const FieldElement p(space.params.p), q(space.params.q);
    const std::string at = point_to_string(geo.point());
    const auto f = detail::local_fields(geo);

    std::vector<std::pair<std::string, Vec>> tangent, transversal;
    for (const auto &x : f.tangent) {
        tangent.emplace_back(x.name, x.val());
    }
    std::vector<Vec> tbasis = pf.xi;
    tbasis.insert(tbasis.end(), pf.screen.begin(), pf.screen.end());
    std::vector<Vec> trbasis = pf.ltr;
    trbasis.insert(trbasis.end(), pf.str.begin(), pf.str.end());
    for (std::size_t i = 0; i < pf.ltr.size(); ++i) {
        transversal.emplace_back("N" + std::to_string(i + 1), pf.ltr[i]);
    }
    for (std::size_t i = 0; i < pf.str.size(); ++i) {
        transversal.emplace_back(geo.spec().str[i].name, pf.str[i]);
    }
    auto combo = [&](const std::vector<Vec> &basis) {
        Vec v(space.n);
        for (const auto &b : basis) {
            v += rng.rational() * b;
        }
        return v;
    };
    for (std::size_t k = 0; k < random_vectors; ++k) {
        tangent.emplace_back("random tangent " + std::to_string(k + 1), combo(tbasis));
        if (!trbasis.empty()) {
            transversal.emplace_back("random transversal " + std::to_string(k + 1), combo(trbasis));
        }
    }

    auto F = [&](const Vec &u) { return geo.fw(u).f; };
    auto W = [&](const Vec &u) { return geo.fw(u).w(); };
    auto B = [&](const Vec &n) { return geo.bc(n).b; };
    auto C = [&](const Vec &n) { return geo.bc(n).c; };
    auto g = [&](const Vec &a, const Vec &b) { return geo.g(a, b); };

    for (const auto &[name, u] : tangent) {
        const std::string w = at + " [" + name + "]";
        rep.record_eq("f2", F(F(u)), p * F(u) + q * u - B(W(u)), w);
        rep.record_eq("pw", p * W(u) - C(W(u)), W(F(u)), w);
        for (const auto &[name2, v] : tangent) {
            const std::string w2 = at + " [" + name + ", " + name2 + "]";
            rep.record_eq("g_sym", g(F(u), v) - g(u, F(v)), g(u, W(v)) - g(W(u), v), w2);
            rep.record_eq("g_metallic", g(F(u), F(v)),
                          p * g(F(u), v) + q * g(u, v) + p * g(W(u), v) - g(F(u), W(v)) - g(W(u), F(v)) -
                              g(W(u), W(v)),
                          w2);
        }
    }
    for (const auto &[name, n] : transversal) {
        const std::string w = at + " [" + name + "]";
        rep.record_eq("fB", F(B(n)), p * B(n) - B(C(n)), w);
        rep.record_eq("C2", C(C(n)), p * C(n) + q * n - W(B(n)), w);
    }

    // g(h(U,V), xi) = g(A*_xi U, V) + pi(xi) g(JfU, V), U in B, V in B'.
    for (const auto &u : f.b) {
        const Vec jfu = geo.screen_proj(F(u.val()));
        for (const auto &v : f.bprime) {
            const GaussData gd = geo.gauss_qs(u.u, v);
            for (const auto &xi : f.rad) {
                const Vec astar = geo.shape_star(Conn::quarter_symmetric, u.u, xi);
                rep.record_eq("radical_pairing", g(gd.hl, xi.val()), g(astar, v.val()) + geo.pi(xi.val()) * g(jfu, v.val()),
                              at + " [" + u.name + ", " + v.name + ", " + xi.name + "]");
            }
        }
    }
    return rep;
}

// f o f = p f + q on B'; the property side is w = 0 on B'.
inline void metallic_on_bprime_at(const PointGeometry &geo, detail::Side &cond, detail::Side &prop)
{
    const FieldElement p(geo.space().params.p), q(geo.space().params.q);
    const std::string at = point_to_string(geo.point());
    for (const auto &x : geo.spec().bprime_frame()) {
        const Vec v = geo.ambient_of(x.field.eval(geo.point()));
        const FW fw = geo.fw(v);
        const Vec ff = geo.fw(fw.f).f;
        cond.zero(ff - p * fw.f - q * v, at, x.name);
        prop.zero(fw.w(), at, x.name);
    }
}

// ---------------------------------------------------------------- distributions

enum class Distribution { rad, screen, b, bperp, bprime };

inline std::string to_string(Distribution d)
{
    switch (d) {
    case Distribution::rad: return "rad";
    case Distribution::screen: return "screen";
    case Distribution::b: return "b";
    case Distribution::bperp: return "bperp";
    case Distribution::bprime: return "bprime";
    }
    return "?";
}

inline std::optional<Distribution> distribution_from(const std::string &s)
{
    for (auto d : {Distribution::rad, Distribution::screen, Distribution::b, Distribution::bperp,
                   Distribution::bprime}) {
        if (to_string(d) == s) {
            return d;
        }
    }
    return std::nullopt;
}

inline std::vector<NamedParamField> frame_of(const SubmanifoldSpec &spec, Distribution d)
{
    switch (d) {
    case Distribution::rad: return spec.rad;
    case Distribution::screen: return spec.screen;
    case Distribution::b: return spec.b_frame();
    case Distribution::bperp: return spec.bperp_frame();
    case Distribution::bprime: return spec.bprime_frame();
    }
    return {};
}

struct PredicateResult {
    bool holds = true;
    bool vacuous = true;
    std::vector<Witness> witnesses;
};

// All pairwise brackets of the frame lie in its span at every sample point.
inline PredicateResult integrable(const AmbientSpace &space, const SubmanifoldSpec &spec, Distribution d)
{
    PredicateResult out;
    const auto frame = frame_of(spec, d);
    out.vacuous = frame.empty();
    for (const auto &pt : spec.points) {
        const Mat jac = spec.embedding.jacobian(pt);
        std::vector<Vec> span;
        for (const auto &x : frame) {
            span.push_back(jac * x.field.eval(pt));
        }
        for (std::size_t a = 0; a < frame.size(); ++a) {
            for (std::size_t b = a + 1; b < frame.size(); ++b) {
                const Vec br = jac * lie_bracket(frame[a].field, frame[b].field).eval(pt);
                if (!br.is_zero() && !in_span(span, br)) {
                    out.holds = false;
                    if (out.witnesses.size() < max_witnesses) {
                        out.witnesses.push_back({point_to_string(pt), frame[a].name + ", " + frame[b].name,
                                                 "[U,V] = " + br.to_string()});
                    }
                }
            }
        }
    }
    (void)space;
    return out;
}

enum class ParallelMode { strict, weak };

// strict: D_U V = 0 in the ambient; weak: the induced D_U V stays in the distribution.
inline PredicateResult parallel_check(const AmbientSpace &space, const SubmanifoldSpec &spec, Distribution d,
                                      ParallelMode mode, Conn conn = Conn::quarter_symmetric)
{
    PredicateResult out;
    const auto frame = frame_of(spec, d);
    for (const auto &pt : spec.points) {
        PointGeometry geo(space, spec, pt);
        std::vector<LocalField> xs;
        for (const auto &x : frame) {
            xs.push_back(geo.tangent_field(x.name, x.field));
        }
        const auto span = detail::vals(xs);
        for (const auto &u : xs) {
            for (const auto &v : xs) {
                out.vacuous = false;
                const GaussData gd = geo.gauss(conn, u.u, v);
                const bool ok = mode == ParallelMode::strict
                                    ? gd.raw.is_zero()
                                    : (gd.tangent.is_zero() || in_span(span, gd.tangent));
                if (!ok) {
                    out.holds = false;
                    if (out.witnesses.size() < max_witnesses) {
                        out.witnesses.push_back({point_to_string(pt), u.name + ", " + v.name,
                                                 (mode == ParallelMode::strict ? gd.raw : gd.tangent).to_string()});
                    }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- theorem suite

struct TheoremContext {
    const AmbientSpace &space;
    const SubmanifoldSpec &spec;
    const Classification &cls;
    ConnectionOptions options;
};

namespace detail {

// Evaluation of one theorem at one point.
struct PointEval {
    Side cond, prop;
    std::optional<Side> strict;
};

using Evaluator = std::function<void(const PointGeometry &, const Fields &, PointEval &)>;

enum class Needs { invariant, ssi };

inline TheoremReport run_theorem(const TheoremContext &ctx, const std::string &id, const std::string &statement,
                                 Needs needs, const Evaluator &eval, bool implication = false)
{
    TheoremReport rep;
    rep.id = id;
    rep.statement = statement;
    if (needs == Needs::invariant && !ctx.cls.invariant) {
        rep.skipped = true;
        rep.skip_reason = "submanifold is not invariant";
    } else if (needs == Needs::ssi && !ctx.cls.ssi) {
        rep.skipped = true;
        rep.skip_reason = "submanifold is not screen semi-invariant";
    }
    if (rep.skipped) {
        rep.condition_holds = rep.property_holds = false;
        return rep;
    }
    bool cond_vacuous = true, prop_vacuous = true;
    bool strict_all = true, have_strict = false;
    for (const auto &pt : ctx.spec.points) {
        PointGeometry geo(ctx.space, ctx.spec, pt, ctx.options);
        const Fields f = local_fields(geo);
        PointEval pe;
        eval(geo, f, pe);
        cond_vacuous = cond_vacuous && pe.cond.vacuous;
        prop_vacuous = prop_vacuous && pe.prop.vacuous;
        rep.condition_holds = rep.condition_holds && pe.cond.holds;
        rep.property_holds = rep.property_holds && pe.prop.holds;
        if (pe.strict) {
            have_strict = true;
            strict_all = strict_all && pe.strict->holds;
        }
        const bool ok = implication ? (!pe.prop.holds || pe.cond.holds) : (pe.cond.holds == pe.prop.holds);
        if (!ok) {
            rep.consistent = false;
        }
        for (const auto *side : {&pe.cond, &pe.prop}) {
            for (const auto &w : side->witnesses) {
                if (rep.witnesses.size() < max_witnesses) {
                    Witness tagged = w;
                    tagged.fields = (side == &pe.cond ? "condition: " : "property: ") + w.fields;
                    rep.witnesses.push_back(tagged);
                }
            }
        }
    }
    if (have_strict) {
        rep.strict_property_holds = strict_all;
    }
    if (cond_vacuous || prop_vacuous) {
        rep.skipped = true;
        rep.skip_reason = "quantified distributions are empty";
        rep.condition_holds = rep.property_holds = false;
        rep.consistent = true;
        rep.witnesses.clear();
        rep.strict_property_holds.reset();
    }
    return rep;
}

} // namespace detail

inline std::vector<TheoremReport> theorem_suite(const TheoremContext &ctx)
{
    using detail::Fields;
    using detail::names;
    using detail::PointEval;
    const Conn QS = Conn::quarter_symmetric, LC = Conn::levi_civita;
    const FieldElement p(ctx.space.params.p), q(ctx.space.params.q);
    std::vector<TheoremReport> out;

    // A*_F(dir): shape operator of the radical field F in direction dir.
    auto As = [QS](const PointGeometry &geo, const LocalField &field, const LocalField &dir) {
        return geo.shape_star(QS, dir.u, field);
    };
    auto hstar = [QS](const PointGeometry &geo, const LocalField &dir, const LocalField &field) {
        return geo.screen(QS, dir.u, field).rad_part;
    };
    auto hs = [](const PointGeometry &geo, Conn c, const LocalField &dir, const LocalField &field) {
        return geo.gauss(c, dir.u, field).hs;
    };
    auto tangentD = [QS](const PointGeometry &geo, const LocalField &dir, const LocalField &field) {
        return geo.gauss(QS, dir.u, field).tangent;
    };

    out.push_back(detail::run_theorem(
        ctx, "invariant.rad_integrable", "radical distribution integrable iff A*_{JU}V - pA*_U V = A*_{JV}U - pA*_V U",
        detail::Needs::invariant, [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &u : f.rad) {
                for (const auto &v : f.rad) {
                    const Vec r = As(geo, geo.apply_J(u), v) - p * As(geo, u, v) - As(geo, geo.apply_J(v), u) +
                                  p * As(geo, v, u);
                    for (const auto &z : f.screen) {
                        pe.cond.zero(geo.g(r, geo.J(z.val())), at, names({u.name, v.name, z.name}));
                    }
                    Vec br;
                    const bool ok = detail::bracket_in_span(geo, u, v, geo.frame().xi, &br);
                    pe.prop.check(ok, [&] { return Witness{at, names({u.name, v.name}), br.to_string()}; });
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "invariant.screen_integrable", "screen distribution integrable iff h*(V,JU) + p h*(U,V) = h*(U,JV) + p h*(V,U)",
        detail::Needs::invariant, [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &u : f.screen) {
                for (const auto &v : f.screen) {
                    const Vec r = hstar(geo, v, geo.apply_J(u)) + p * hstar(geo, u, v) -
                                  hstar(geo, u, geo.apply_J(v)) - p * hstar(geo, v, u);
                    for (const auto &n : f.ltr) {
                        pe.cond.zero(geo.g(r, geo.J(n.val())), at, names({u.name, v.name, n.name}));
                    }
                    Vec br;
                    const bool ok = detail::bracket_in_span(geo, u, v, geo.frame().screen, &br);
                    pe.prop.check(ok, [&] { return Witness{at, names({u.name, v.name}), br.to_string()}; });
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "invariant.rad_geodesic", "radical distribution totally geodesic iff A*_{JV}U = -p A*_V U", detail::Needs::invariant,
        [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &u : f.rad) {
                for (const auto &v : f.rad) {
                    const Vec r = As(geo, geo.apply_J(v), u) + p * As(geo, v, u);
                    const Vec d = tangentD(geo, u, v);
                    for (const auto &z : f.screen) {
                        pe.cond.zero(geo.g(r, geo.J(z.val())), at, names({u.name, v.name, z.name}));
                        pe.prop.zero(geo.g(d, z.val()), at, names({u.name, v.name, z.name}));
                    }
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "invariant.screen_geodesic", "screen distribution totally geodesic iff h*(U,JV) = p h*(U,V)", detail::Needs::invariant,
        [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &u : f.screen) {
                for (const auto &v : f.screen) {
                    const Vec r = hstar(geo, u, geo.apply_J(v)) - p * hstar(geo, u, v);
                    const Vec d = tangentD(geo, u, v);
                    for (const auto &n : f.ltr) {
                        pe.cond.zero(geo.g(r, geo.J(n.val())), at, names({u.name, v.name, n.name}));
                        pe.prop.zero(geo.g(d, n.val()), at, names({u.name, v.name, n.name}));
                    }
                }
            }
        }));

    {
        detail::Evaluator ev = [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            metallic_on_bprime_at(geo, pe.cond, pe.prop);
            (void)f;
        };
        out.push_back(detail::run_theorem(ctx, "ssi.f_metallic_on_bprime", "f is a metallic structure on B'", detail::Needs::ssi, ev,
                                          true));
        out.back().note = "theorem holds unconditionally on screen semi-invariant submanifolds; consistency means w = 0 on B' implies f^2 = pf + q";
    }

    out.push_back(detail::run_theorem(
        ctx, "ssi.rad_integrable", "radical distribution integrable iff (i) A*-equation and (ii) h^s(E,JE') = h^s(E',JE)",
        detail::Needs::ssi, [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &e : f.rad) {
                for (const auto &e2 : f.rad) {
                    const Vec r1 = As(geo, geo.apply_J(e), e2) + p * As(geo, e2, e) - As(geo, geo.apply_J(e2), e) -
                                   p * As(geo, e, e2);
                    for (const auto &u : f.b) {
                        pe.cond.zero(geo.g(r1, geo.J(u.val())), at, "(i) " + names({e.name, e2.name, u.name}));
                    }
                    const Vec r2 = hs(geo, QS, e, geo.apply_J(e2)) - hs(geo, QS, e2, geo.apply_J(e));
                    for (const auto &z : f.bperp) {
                        pe.cond.zero(geo.g(r2, geo.J(z.val())), at, "(ii) " + names({e.name, e2.name, z.name}));
                    }
                    Vec br;
                    const bool ok = detail::bracket_in_span(geo, e, e2, geo.frame().xi, &br);
                    pe.prop.check(ok, [&] { return Witness{at, names({e.name, e2.name}), br.to_string()}; });
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "ssi.b_integrable", "B integrable iff h^s(U,JV) = h^s(V,JU) and h*(U,JV) + p h*(V,U) = h*(V,JU) + p h*(U,V)",
        detail::Needs::ssi, [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            const auto bspan = detail::vals(f.b);
            for (const auto &u : f.b) {
                for (const auto &v : f.b) {
                    const Vec r1 = hs(geo, QS, u, geo.apply_J(v)) - hs(geo, QS, v, geo.apply_J(u));
                    for (const auto &z : f.bperp) {
                        pe.cond.zero(geo.g(r1, geo.J(z.val())), at, names({u.name, v.name, z.name}));
                    }
                    const Vec r2 = hstar(geo, u, geo.apply_J(v)) + p * hstar(geo, v, u) -
                                   hstar(geo, v, geo.apply_J(u)) - p * hstar(geo, u, v);
                    for (const auto &n : f.ltr) {
                        pe.cond.zero(geo.g(r2, geo.J(n.val())), at, names({u.name, v.name, n.name}));
                    }
                    Vec br;
                    const bool ok = detail::bracket_in_span(geo, u, v, bspan, &br);
                    pe.prop.check(ok, [&] { return Witness{at, names({u.name, v.name}), br.to_string()}; });
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "ssi.bprime_integrable", "B' integrable iff h^s(U,JV) = h^s(V,JU) for U, V in B", detail::Needs::ssi,
        [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &u : f.b) {
                for (const auto &v : f.b) {
                    const Vec r = hs(geo, QS, u, geo.apply_J(v)) - hs(geo, QS, v, geo.apply_J(u));
                    for (const auto &z : f.bperp) {
                        pe.cond.zero(geo.g(r, geo.J(z.val())), at, names({u.name, v.name, z.name}));
                    }
                }
            }
            const auto span = detail::vals(f.bprime);
            for (const auto &u : f.bprime) {
                for (const auto &v : f.bprime) {
                    Vec br;
                    const bool ok = detail::bracket_in_span(geo, u, v, span, &br);
                    pe.prop.check(ok, [&] { return Witness{at, names({u.name, v.name}), br.to_string()}; });
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "ssi.screen_parallel", "screen distribution parallel iff -A_{JZ}U + p pi(Z) JU = pi(JZ) JU + p h*(U,Z)",
        detail::Needs::ssi, [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            pe.strict.emplace();
            for (const auto &u : f.screen) {
                const Vec ju = geo.J(u.val());
                for (const auto &z : f.bperp) {
                    const LocalField jz = geo.apply_J(z);
                    const Vec a = geo.weingarten_str(QS, u.u, jz).shape;
                    const Vec r = -a + (p * geo.pi(z.val())) * ju - geo.pi(jz.val()) * ju - p * hstar(geo, u, z);
                    const Vec dz = geo.raw(QS, u.u, z);
                    for (const auto &n : f.ltr) {
                        pe.cond.zero(geo.g(r, geo.J(n.val())), at, names({u.name, z.name, n.name}));
                        pe.prop.zero(geo.g(dz, n.val()), at, names({u.name, z.name, n.name}));
                    }
                }
                for (const auto &v : f.screen) {
                    pe.strict->zero(geo.raw(QS, u.u, v), at, names({u.name, v.name}));
                }
            }
        }));
    out.back().note = "condition paired with JN; parallel judged as g(D_U Z, N) = 0; strict_property_holds reports D_U V = 0 on S(TM)";

    out.push_back(detail::run_theorem(
        ctx, "ssi.b_geodesic", "B totally geodesic in S(TM) iff J h^s(U,V) = p pi(V) JU + q pi(V) U - pi(JV) JU",
        detail::Needs::ssi, [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &u : f.tangent) {
                const Vec ju = geo.J(u.val());
                for (const auto &v : f.b) {
                    const Vec r = geo.J(hs(geo, QS, u, v)) - (p * geo.pi(v.val())) * ju - (q * geo.pi(v.val())) * u.val() +
                                  geo.pi(geo.J(v.val())) * ju;
                    const Vec d = tangentD(geo, u, v);
                    for (const auto &z : f.bperp) {
                        pe.cond.zero(geo.g(r, z.val()), at, names({u.name, v.name, z.name}));
                        pe.prop.zero(geo.g(d, z.val()), at, names({u.name, v.name, z.name}));
                    }
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "ssi.bprime_geodesic", "B' totally geodesic iff the D^l(U,JZ) and A_{JZ} pairings hold", detail::Needs::ssi,
        [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            for (const auto &u : f.bprime) {
                const Vec ju = geo.J(u.val());
                for (const auto &z : f.bperp) {
                    const LocalField jz = geo.apply_J(z);
                    const WeingartenData wd = geo.weingarten_str(QS, u.u, jz);
                    const FieldElement pijz = geo.pi(jz.val());
                    for (const auto &e : f.rad) {
                        const Vec je = geo.J(e.val());
                        pe.cond.zero(geo.g(je, wd.d_term) - geo.g(wd.shape, je) - pijz * geo.g(ju, je), at,
                                     "c1 " + names({e.name, u.name, z.name}));
                    }
                    for (const auto &fb : f.b) {
                        const Vec jf = geo.J(fb.val());
                        pe.cond.zero(geo.g(wd.shape, jf) + pijz * geo.g(ju, jf), at,
                                     "c2 " + names({u.name, z.name, fb.name}));
                    }
                }
                for (const auto &v : f.bprime) {
                    const Vec d = tangentD(geo, u, v);
                    for (const auto &z : f.bperp) {
                        pe.prop.zero(geo.g(d, z.val()), at, names({u.name, v.name, z.name}));
                    }
                }
            }
        }));

    out.push_back(detail::run_theorem(
        ctx, "ssi.bperp_geodesic", "B-perp totally geodesic iff the h^s(U,JZ) and D^s(U,JN) pairings hold", detail::Needs::ssi,
        [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            const auto at = point_to_string(geo.point());
            if (!geo.spec().has_ltr()) {
                return; // derivatives of N need declared fields; leaves the condition vacuous
            }
            for (const auto &u : f.bperp) {
                const Vec ju = geo.J(u.val());
                for (const auto &v : f.bperp) {
                    const Vec jv = geo.J(v.val());
                    const FieldElement gjj = geo.g(ju, jv);
                    for (const auto &z : f.b) {
                        const LocalField jz = geo.apply_J(z);
                        pe.cond.zero(geo.g(hs(geo, QS, u, jz), jv) - geo.pi(jz.val()) * gjj, at,
                                     "c1 " + names({u.name, v.name, z.name}));
                    }
                    for (const auto &n : f.ltr) {
                        const LocalField jn = geo.apply_J(n);
                        const Vec ds = geo.weingarten_ltr(QS, u.u, jn).d_term;
                        pe.cond.zero(geo.g(ds, jv) - geo.pi(jn.val()) * gjj, at, "c2 " + names({u.name, v.name, n.name}));
                    }
                    const Vec d = tangentD(geo, u, v);
                    for (const auto &z : f.b) {
                        pe.prop.zero(geo.g(d, geo.J(z.val())), at, names({u.name, v.name, z.name}));
                    }
                    for (const auto &n : f.ltr) {
                        pe.prop.zero(geo.g(d, geo.J(n.val())), at, names({u.name, v.name, n.name}));
                    }
                }
            }
        }));

    // B' parallelism: (a) g(D_U V, Z) = 0, (b) h^s(U,JV) paired with JZ, (c) g(nabla_U V, Z) = 0, (d) LC h^s(U,JV).
    struct BprimeSides {
        detail::Side a, b, c, d;
    };
    auto bprime_sides = [&](const PointGeometry &geo, const Fields &f) {
        BprimeSides s;
        const auto at = point_to_string(geo.point());
        for (const auto &u : f.bprime) {
            for (const auto &v : f.bprime) {
                const LocalField jv = geo.apply_J(v);
                const Vec hsq = hs(geo, QS, u, jv), hsl = hs(geo, LC, u, jv);
                const Vec dq = geo.gauss(QS, u.u, v).tangent, dl = geo.gauss(LC, u.u, v).tangent;
                for (const auto &z : f.bperp) {
                    const auto w = names({u.name, v.name, z.name});
                    const Vec jz = geo.J(z.val());
                    s.a.zero(geo.g(dq, z.val()), at, w);
                    s.b.zero(geo.g(hsq, jz), at, w);
                    s.c.zero(geo.g(dl, z.val()), at, w);
                    s.d.zero(geo.g(hsl, jz), at, w);
                }
            }
        }
        return s;
    };
    out.push_back(detail::run_theorem(ctx, "ssi.bprime_parallel_lc", "B' parallel with respect to nabla iff h^s(U,JV) = 0",
                                      detail::Needs::ssi,
                                      [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
                                          auto s = bprime_sides(geo, f);
                                          pe.cond = s.d;
                                          pe.prop = s.c;
                                      }));
    out.push_back(detail::run_theorem(ctx, "ssi.bprime_parallel",
                                      "B' parallel with respect to D iff B' parallel with respect to nabla",
                                      detail::Needs::ssi,
                                      [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
                                          auto s = bprime_sides(geo, f);
                                          pe.cond = s.c;
                                          pe.prop = s.a;
                                      }));
    out.push_back(detail::run_theorem(
        ctx, "ssi.bprime_parallel_equivalent", "(a) B' parallel for D, (b) hbar^s(U,JV) = 0, (c) parallel for nabla, (d) h^s(U,JV) = 0 are equivalent",
        detail::Needs::ssi, [&](const PointGeometry &geo, const Fields &f, PointEval &pe) {
            auto s = bprime_sides(geo, f);
            pe.cond = s.b;
            pe.prop = s.a;
            // fold (c) and (d) in: any disagreement breaks consistency at this point
            if (s.c.holds != s.a.holds || s.d.holds != s.a.holds) {
                pe.cond.holds = !pe.prop.holds;
                pe.cond.witnesses.push_back({point_to_string(geo.point()), "(c)/(d) disagree with (a)",
                                             std::string("c=") + (s.c.holds ? "true" : "false") +
                                                 " d=" + (s.d.holds ? "true" : "false")});
            }
        }));
    return out;
}

} // namespace metallic

#endif
