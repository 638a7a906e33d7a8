#ifndef METALLIC_CONNECTION_HPP
#define METALLIC_CONNECTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ambient.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "submanifold.hpp"
#include "symbolic.hpp"

namespace metallic {

enum class Conn { levi_civita, quarter_symmetric };

// Split of a derivative of a tangent field: tangent + h^l + h^s.
struct GaussData {
    Vec raw;
    Vec tangent, hl, hs;
    Vec c_hl, c_hs; // coordinates over the ltr and screen transversal frames
};

// Split of a derivative of a transversal field: -A U + (ltr part) + (str part).
struct WeingartenData {
    Vec raw;
    Vec shape;  // A_N U or A_W U
    Vec conn;   // nabla^l_U N or nabla^s_U W
    Vec d_term; // D^s(U, N) or D^l(U, W)
};

// Split of a tangent-valued derivative along S(TM) and Rad TM.
struct ScreenData {
    Vec raw;
    Vec screen_part; // D*_U X, or -A*_xi U for radical fields
    Vec rad_part;    // h*(U, X), or nabla*t_U xi
};

struct ConnectionOptions {
    bool corrupt_hs = false; // test hook: perturbs h^s of the quarter-symmetric connection
};

// A field along the submanifold evaluated to first order at one point.
struct LocalField {
    std::string name;
    AmbField field; // ambient components
    Jet jet;
    std::optional<ParamField> param; // present for tangent fields
    Vec u;                          // parameter coordinates (tangent fields only)

    const Vec &val() const { return jet.val; }
};

class PointGeometry {
public:
    PointGeometry(const AmbientSpace &space, const SubmanifoldSpec &spec, const Point &point,
                  ConnectionOptions opts = {})
        : space_(space), spec_(spec), frame_(build_point_frame(space, spec, point)), amb_(space, spec.embedding, point),
          opts_(opts)
    {
    }

    const AmbientSpace &space() const noexcept { return space_; }
    const SubmanifoldSpec &spec() const noexcept { return spec_; }
    const PointFrame &frame() const noexcept { return frame_; }
    const AmbientPoint &ambient() const noexcept { return amb_; }
    const Point &point() const noexcept { return frame_.point; }

    LocalField tangent_field(const std::string &name, const ParamField &x) const
    {
        LocalField f;
        f.name = name;
        f.field = pushforward(x, spec_.embedding);
        f.jet = amb_.jet(f.field);
        f.param = x;
        f.u = x.eval(point());
        return f;
    }
    LocalField ambient_field(const std::string &name, const AmbField &x) const
    {
        LocalField f;
        f.name = name;
        f.field = x;
        f.jet = amb_.jet(x);
        return f;
    }
    // J applied to a field along M (J is constant, so the jet maps linearly).
    LocalField apply_J(const LocalField &x) const
    {
        LocalField f;
        f.name = "J" + x.name;
        f.field = apply_matrix(space_.J, x.field);
        f.jet = x.jet.mapped(space_.J);
        return f;
    }

    FieldElement g(const Vec &a, const Vec &b) const { return inner(a, b, space_.sig); }
    FieldElement pi(const Vec &v) const { return amb_.pi(v); }
    Vec J(const Vec &v) const { return space_.J * v; }
    Vec ambient_of(const Vec &u) const { return frame_.jac * u; }

    Vec raw(Conn c, const Vec &u, const LocalField &v) const
    {
        return c == Conn::levi_civita ? amb_.lc(u, v.jet) : amb_.qs(u, v.jet);
    }

    GaussData gauss(Conn c, const Vec &u, const LocalField &v) const
    {
        GaussData out;
        out.raw = raw(c, u, v);
        const auto d = frame_.project(out.raw);
        out.tangent = d.tangent();
        out.hl = d.ltr;
        out.hs = d.str;
        out.c_hl = d.c_ltr;
        out.c_hs = d.c_str;
        if (c == Conn::quarter_symmetric && opts_.corrupt_hs && !frame_.str.empty()) {
            out.hs += frame_.str[0];
            out.c_hs[0] += FieldElement(1);
        }
        return out;
    }
    GaussData gauss_lc(const Vec &u, const LocalField &v) const { return gauss(Conn::levi_civita, u, v); }
    GaussData gauss_qs(const Vec &u, const LocalField &v) const { return gauss(Conn::quarter_symmetric, u, v); }

    // N in ltr: conn = ltr part, d_term = str part. W in S(TM^perp): conn = str part, d_term = ltr part.
    WeingartenData weingarten(Conn c, const Vec &u, const LocalField &x, bool is_ltr) const
    {
        WeingartenData out;
        out.raw = raw(c, u, x);
        const auto d = frame_.project(out.raw);
        out.shape = -d.tangent();
        out.conn = is_ltr ? d.ltr : d.str;
        out.d_term = is_ltr ? d.str : d.ltr;
        return out;
    }
    WeingartenData weingarten_ltr(Conn c, const Vec &u, const LocalField &n) const { return weingarten(c, u, n, true); }
    WeingartenData weingarten_str(Conn c, const Vec &u, const LocalField &w) const { return weingarten(c, u, w, false); }

    // Screen field X: D_U X = D*_U X + h*(U, X).
    ScreenData screen(Conn c, const Vec &u, const LocalField &x) const
    {
        const GaussData gd = gauss(c, u, x);
        const auto d = frame_.project(gd.tangent);
        return {gd.tangent, d.screen, d.rad};
    }
    // Radical field xi: D_U xi = -A*_xi U + nabla*t_U xi; screen_part holds -A*_xi U.
    ScreenData radical(Conn c, const Vec &u, const LocalField &xi) const { return screen(c, u, xi); }

    Vec shape_star(Conn c, const Vec &u, const LocalField &xi) const { return -radical(c, u, xi).screen_part; }

    FW fw(const Vec &tangent) const { return fw_decompose(frame_, space_, tangent); }
    BC bc(const Vec &transversal) const { return bc_decompose(frame_, space_, transversal); }
    Vec screen_proj(const Vec &tangent) const { return screen_project(frame_, tangent); }
    std::vector<FieldElement> eta(const Vec &u) const { return eta_i(frame_, space_.sig, u); }

    // sum_i eta_i(v) xi_i
    Vec radical_combination(const Vec &v) const
    {
        Vec out(space_.n);
        const auto e = eta(v);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i].is_zero()) {
                out += e[i] * frame_.xi[i];
            }
        }
        return out;
    }

    // U g(V, Z) from the polynomial g(V, Z) when its degree fits, else by the product rule.
    FieldElement derivative_of_inner(const LocalField &u, const LocalField &v, const LocalField &z) const
    {
        try {
            return apply_field(*u.param, inner_poly(v.field, z.field, space_.sig)).eval(point());
        } catch (const degree_overflow &) {
            return g(v.jet.along(u.u), z.val()) + g(v.val(), z.jet.along(u.u));
        }
    }

private:
    const AmbientSpace &space_;
    const SubmanifoldSpec &spec_;
    PointFrame frame_;
    AmbientPoint amb_;
    ConnectionOptions opts_;
};

// Per-tag outcome of an identity family.
struct IdentityResult {
    std::string tag;
    std::size_t checks = 0;
    std::size_t failures = 0;
    bool skipped = false;
    std::string note;
    std::string witness; // first failure: point, fields, both sides

    bool pass() const noexcept { return !skipped && failures == 0; }
};

class IdentityReport {
public:
    void record(const std::string &tag, bool ok, const std::function<std::string()> &witness)
    {
        auto &r = entry(tag);
        ++r.checks;
        if (!ok) {
            if (r.failures == 0) {
                r.witness = witness();
            }
            ++r.failures;
        }
    }
    void record_eq(const std::string &tag, const Vec &lhs, const Vec &rhs, const std::string &where)
    {
        record(tag, lhs == rhs, [&] { return where + ": lhs " + lhs.to_string() + " rhs " + rhs.to_string(); });
    }
    void record_eq(const std::string &tag, const FieldElement &lhs, const FieldElement &rhs, const std::string &where)
    {
        record(tag, lhs == rhs, [&] { return where + ": lhs " + lhs.to_string() + " rhs " + rhs.to_string(); });
    }
    void skip(const std::string &tag, const std::string &note)
    {
        auto &r = entry(tag);
        if (r.checks == 0) {
            r.skipped = true;
            r.note = note;
        }
    }
    void note(const std::string &tag, const std::string &text) { entry(tag).note = text; }
    void merge(const IdentityReport &o)
    {
        for (const auto &r : o.results_) {
            auto &mine = entry(r.tag);
            if (r.skipped && mine.checks == 0) {
                mine.skipped = true;
                mine.note = r.note;
                continue;
            }
            if (r.skipped) {
                continue;
            }
            mine.skipped = false;
            if (mine.failures == 0 && r.failures > 0) {
                mine.witness = r.witness;
            }
            mine.checks += r.checks;
            mine.failures += r.failures;
            if (!r.note.empty()) {
                mine.note = r.note;
            }
        }
    }

    const std::vector<IdentityResult> &results() const noexcept { return results_; }
    const IdentityResult *find(const std::string &tag) const
    {
        for (const auto &r : results_) {
            if (r.tag == tag) {
                return &r;
            }
        }
        return nullptr;
    }
    bool all_pass() const
    {
        for (const auto &r : results_) {
            if (!r.skipped && r.failures > 0) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<IdentityResult> results_;

    IdentityResult &entry(const std::string &tag)
    {
        for (auto &r : results_) {
            if (r.tag == tag) {
                return r;
            }
        }
        IdentityResult r;
        r.tag = tag;
        results_.push_back(std::move(r));
        return results_.back();
    }
};

struct SuiteFields {
    std::vector<NamedParamField> tangent; // frame fields plus random tangent fields
    std::vector<NamedParamField> screen;  // fields with values in S(TM) (frame fields and combinations)
};

// Evaluates every structural identity at one point. Operators are computed
// from raw projections of ambient derivatives; the stated relations are then
// compared against those independent computations.
inline IdentityReport identity_suite(const PointGeometry &geo, const SuiteFields &fields)
{
    IdentityReport rep;
    const PointFrame &pf = geo.frame();
    const AmbientSpace &space = geo.space();
    const FieldElement p(space.params.p), q(space.params.q);
    const std::string at = point_to_string(geo.point());

    std::vector<LocalField> T, X, E, N, W;
    for (const auto &f : fields.tangent) {
        T.push_back(geo.tangent_field(f.name, f.field));
    }
    for (const auto &f : fields.screen) {
        X.push_back(geo.tangent_field(f.name, f.field));
    }
    for (const auto &f : geo.spec().rad) {
        E.push_back(geo.tangent_field(f.name, f.field));
    }
    for (const auto &f : geo.spec().str) {
        W.push_back(geo.ambient_field(f.name, f.field));
    }
    const bool have_ltr_fields = geo.spec().has_ltr();
    if (have_ltr_fields) {
        for (const auto &f : geo.spec().ltr) {
            N.push_back(geo.ambient_field(f.name, f.field));
        }
    }

    auto where = [&](std::initializer_list<std::string> names) {
        std::string s = at + " [";
        bool first = true;
        for (const auto &nm : names) {
            s += (first ? "" : ", ") + nm;
            first = false;
        }
        return s + "]";
    };

    // Lightlike transversal duality.
    for (std::size_t i = 0; i < pf.ltr.size(); ++i) {
        for (std::size_t j = 0; j < pf.xi.size(); ++j) {
            rep.record_eq("ltr_duality", geo.g(pf.ltr[i], pf.xi[j]), FieldElement(i == j ? 1 : 0),
                          where({"g(N" + std::to_string(i + 1) + ", xi" + std::to_string(j + 1) + ")"}));
            rep.record_eq("ltr_duality", geo.g(pf.ltr[i], pf.ltr[j]), FieldElement(0),
                          where({"g(N" + std::to_string(i + 1) + ", N" + std::to_string(j + 1) + ")"}));
        }
    }
    for (std::size_t i = 0; i < pf.ltr_constructed.size(); ++i) {
        for (std::size_t j = 0; j < pf.xi.size(); ++j) {
            rep.record_eq("ltr_duality_constructed", geo.g(pf.ltr_constructed[i], pf.xi[j]), FieldElement(i == j ? 1 : 0),
                          where({"constructed N" + std::to_string(i + 1)}));
            rep.record_eq("ltr_duality_constructed", geo.g(pf.ltr_constructed[i], pf.ltr_constructed[j]), FieldElement(0),
                          where({"constructed N" + std::to_string(i + 1)}));
        }
    }

    // Ambient structure along M.
    for (const auto &u : T) {
        for (const auto &v : T) {
            auto attempt = [&](const std::string &tag, auto &&fn) {
                try {
                    fn();
                    rep.record(tag, true, [] { return std::string(); });
                } catch (const assertion_failure &e) {
                    rep.record(tag, false, [&] { return where({u.name, v.name}) + ": " + e.what(); });
                }
            };
            attempt("ambient_torsion", [&] { geo.ambient().torsion(*u.param, *v.param); });
            attempt("ambient_a2", [&] { geo.ambient().metallic_identity(*u.param, v.field); });
            for (const auto &z : T) {
                attempt("ambient_nonmetricity", [&] { geo.ambient().nonmetricity(*u.param, v.field, z.field); });
            }
        }
    }

    // Gauss formulae and (q4)-(q6), torsion (q14), (q13), (lc11).
    std::map<std::pair<std::size_t, std::size_t>, std::pair<GaussData, GaussData>> gauss;
    for (std::size_t a = 0; a < T.size(); ++a) {
        for (std::size_t b = 0; b < T.size(); ++b) {
            const auto &u = T[a];
            const auto &v = T[b];
            const GaussData lc = geo.gauss_lc(u.u, v);
            const GaussData qs = geo.gauss_qs(u.u, v);
            const std::string w = where({u.name, v.name});
            rep.record_eq("reconstruction", lc.tangent + lc.hl + lc.hs, lc.raw, w);
            rep.record_eq("reconstruction", qs.tangent + qs.hl + qs.hs, qs.raw, w);
            const FW fw = geo.fw(u.val());
            const FieldElement piv = geo.pi(v.val());
            rep.record_eq("q4", qs.tangent, lc.tangent + piv * fw.f, w);
            rep.record_eq("q5", qs.hl, lc.hl + piv * fw.wl, w);
            rep.record_eq("q6", qs.hs, lc.hs + piv * fw.ws, w);
            gauss.emplace(std::make_pair(a, b), std::make_pair(lc, qs));
        }
    }
    for (std::size_t a = 0; a < T.size(); ++a) {
        for (std::size_t b = 0; b < T.size(); ++b) {
            const auto &u = T[a];
            const auto &v = T[b];
            const Vec bracket = geo.ambient_of(lie_bracket(*u.param, *v.param).eval(geo.point()));
            const Vec torsion = gauss.at({a, b}).second.tangent - gauss.at({b, a}).second.tangent - bracket;
            const Vec expected = geo.pi(v.val()) * geo.fw(u.val()).f - geo.pi(u.val()) * geo.fw(v.val()).f;
            rep.record_eq("q14", torsion, expected, where({u.name, v.name}));
            for (std::size_t c = 0; c < T.size(); ++c) {
                const auto &z = T[c];
                const std::string w = where({u.name, v.name, z.name});
                const FieldElement dg = geo.derivative_of_inner(u, v, z);
                const auto &uv = gauss.at({a, b});
                const auto &uz = gauss.at({a, c});
                // (nabla_U g)(V, Z) = g(h^l(U,V), Z) + g(h^l(U,Z), V)
                rep.record_eq("lc11", dg - geo.g(uv.first.tangent, z.val()) - geo.g(v.val(), uz.first.tangent),
                              geo.g(uv.first.hl, z.val()) + geo.g(uz.first.hl, v.val()), w);
                // (D_U g)(V, Z) = g(h(U,V), Z) + g(h(U,Z), V) - pi(V) g(fU, Z) - pi(Z) g(fU, V)
                const Vec fu = geo.fw(u.val()).f;
                rep.record_eq("q13", dg - geo.g(uv.second.tangent, z.val()) - geo.g(v.val(), uz.second.tangent),
                              geo.g(uv.first.hl + uv.first.hs, z.val()) + geo.g(uz.first.hl + uz.first.hs, v.val()) -
                                  geo.pi(v.val()) * geo.g(fu, z.val()) - geo.pi(z.val()) * geo.g(fu, v.val()),
                              w);
            }
        }
    }

    // Weingarten formulae for screen transversal fields, (q10)-(q12), (lc4), (q15).
    for (const auto &u : T) {
        const FW fw = geo.fw(u.val());
        for (const auto &wf : W) {
            const WeingartenData lc = geo.weingarten_str(Conn::levi_civita, u.u, wf);
            const WeingartenData qs = geo.weingarten_str(Conn::quarter_symmetric, u.u, wf);
            const std::string w = where({u.name, wf.name});
            rep.record_eq("reconstruction", -lc.shape + lc.conn + lc.d_term, lc.raw, w);
            rep.record_eq("reconstruction", -qs.shape + qs.conn + qs.d_term, qs.raw, w);
            const FieldElement piw = geo.pi(wf.val());
            rep.record_eq("q10", qs.shape, lc.shape - piw * fw.f, w);
            rep.record_eq("q11", qs.conn, lc.conn + piw * fw.ws, w);
            rep.record_eq("q12", qs.d_term, lc.d_term + piw * fw.wl, w);
            for (std::size_t b = 0; b < T.size(); ++b) {
                const auto &v = T[b];
                const std::string w2 = where({u.name, v.name, wf.name});
                std::size_t a = static_cast<std::size_t>(&u - &T[0]);
                const auto &uv = gauss.at({a, b});
                rep.record_eq("lc4", geo.g(uv.first.hs, wf.val()) + geo.g(v.val(), lc.d_term),
                              geo.g(lc.shape, v.val()), w2);
                rep.record_eq("q15", geo.g(uv.second.hs, wf.val()) + geo.g(v.val(), qs.d_term),
                              geo.g(qs.shape, v.val()) + piw * geo.g(fw.f, v.val()) +
                                  geo.pi(v.val()) * geo.g(fw.ws, wf.val()) + piw * geo.g(v.val(), fw.wl),
                              w2);
            }
        }
    }

    // Weingarten formulae for lightlike transversal fields, (q7)-(q9), (lc5), (q16), (lc9), (q24).
    if (!have_ltr_fields) {
        for (const char *tag : {"q7", "q8", "q9", "lc5", "q16", "lc9", "q24"}) {
            rep.skip(tag, "no lightlike transversal fields declared; derivatives of N are undefined");
        }
    } else {
        for (const auto &u : T) {
            const FW fw = geo.fw(u.val());
            for (std::size_t k = 0; k < N.size(); ++k) {
                const auto &nf = N[k];
                const WeingartenData lc = geo.weingarten_ltr(Conn::levi_civita, u.u, nf);
                const WeingartenData qs = geo.weingarten_ltr(Conn::quarter_symmetric, u.u, nf);
                const std::string w = where({u.name, nf.name});
                rep.record_eq("reconstruction", -lc.shape + lc.conn + lc.d_term, lc.raw, w);
                rep.record_eq("reconstruction", -qs.shape + qs.conn + qs.d_term, qs.raw, w);
                const FieldElement pin = geo.pi(nf.val());
                rep.record_eq("q7", qs.shape, lc.shape - pin * fw.f, w);
                rep.record_eq("q8", qs.conn, lc.conn + pin * fw.wl, w);
                rep.record_eq("q9", qs.d_term, lc.d_term + pin * fw.ws, w);
                for (const auto &wf : W) {
                    const WeingartenData lcw = geo.weingarten_str(Conn::levi_civita, u.u, wf);
                    const WeingartenData qsw = geo.weingarten_str(Conn::quarter_symmetric, u.u, wf);
                    const std::string w2 = where({u.name, nf.name, wf.name});
                    rep.record_eq("lc5", geo.g(lc.d_term, wf.val()), geo.g(lcw.shape, nf.val()), w2);
                    rep.record_eq("q16", geo.g(qs.d_term, wf.val()),
                                  geo.g(qsw.shape, nf.val()) + geo.pi(wf.val()) * geo.g(fw.f, nf.val()) +
                                      pin * geo.g(fw.ws, wf.val()),
                                  w2);
                }
                for (const auto &x : X) {
                    const std::string w2 = where({u.name, x.name, nf.name});
                    const ScreenData slc = geo.screen(Conn::levi_civita, u.u, x);
                    const ScreenData sqs = geo.screen(Conn::quarter_symmetric, u.u, x);
                    rep.record_eq("lc9", geo.g(slc.rad_part, nf.val()), geo.g(lc.shape, x.val()), w2);
                    rep.record_eq("q24", geo.g(sqs.rad_part, nf.val()),
                                  geo.g(qs.shape, x.val()) + pin * geo.g(fw.f, x.val()) +
                                      geo.pi(x.val()) * geo.eta(fw.f)[k],
                                  w2);
                }
            }
        }
    }

    // Screen fields: (q19), (q20), (lc8), (q23), metric screen connection.
    for (const auto &u : T) {
        const FW fw = geo.fw(u.val());
        const Vec jfu = geo.screen_proj(fw.f);
        for (const auto &x : X) {
            const std::string w = where({u.name, x.name});
            const ScreenData lc = geo.screen(Conn::levi_civita, u.u, x);
            const ScreenData qs = geo.screen(Conn::quarter_symmetric, u.u, x);
            rep.record_eq("reconstruction", lc.screen_part + lc.rad_part, lc.raw, w);
            rep.record_eq("reconstruction", qs.screen_part + qs.rad_part, qs.raw, w);
            const FieldElement pix = geo.pi(x.val());
            rep.record_eq("q19", qs.screen_part, lc.screen_part + pix * jfu, w);
            rep.record_eq("q20", qs.rad_part, lc.rad_part + pix * geo.radical_combination(fw.f), w);
            const GaussData glc = geo.gauss_lc(u.u, x);
            const GaussData gqs = geo.gauss_qs(u.u, x);
            for (const auto &e : E) {
                const std::string w2 = where({u.name, x.name, e.name});
                const Vec a_lc = geo.shape_star(Conn::levi_civita, u.u, e);
                const Vec a_qs = geo.shape_star(Conn::quarter_symmetric, u.u, e);
                rep.record_eq("lc8", geo.g(glc.hl, e.val()), geo.g(a_lc, x.val()), w2);
                rep.record_eq("q23", geo.g(gqs.hl, e.val()),
                              geo.g(a_qs, x.val()) + geo.pi(e.val()) * geo.g(jfu, x.val()) +
                                  pix * geo.g(fw.wl, e.val()),
                              w2);
            }
            for (const auto &y : X) {
                const ScreenData ly = geo.screen(Conn::levi_civita, u.u, y);
                rep.record_eq("screen_metric",
                              geo.derivative_of_inner(u, x, y) - geo.g(lc.screen_part, y.val()) -
                                  geo.g(x.val(), ly.screen_part),
                              FieldElement(0), where({u.name, x.name, y.name}));
            }
        }
    }

    // Radical fields: (q21), (q22), (lc10), (q25).
    for (const auto &u : T) {
        const FW fw = geo.fw(u.val());
        const Vec jfu = geo.screen_proj(fw.f);
        for (const auto &e : E) {
            const std::string w = where({u.name, e.name});
            const ScreenData lc = geo.radical(Conn::levi_civita, u.u, e);
            const ScreenData qs = geo.radical(Conn::quarter_symmetric, u.u, e);
            const FieldElement pie = geo.pi(e.val());
            rep.record_eq("q21", -qs.screen_part, -lc.screen_part - pie * jfu, w);
            rep.record_eq("q22", qs.rad_part, lc.rad_part + pie * geo.radical_combination(fw.f), w);
            const GaussData glc = geo.gauss_lc(u.u, e);
            const GaussData gqs = geo.gauss_qs(u.u, e);
            rep.record_eq("lc10", geo.g(glc.hl, e.val()), FieldElement(0), w);
            rep.record_eq("q25a", geo.g(gqs.hl, e.val()), pie * geo.g(fw.wl, e.val()), w);
        }
    }
    for (const auto &e : E) {
        const std::string w = where({e.name, e.name});
        const Vec fe = geo.fw(e.val()).f;
        const FieldElement pie = geo.pi(e.val());
        rep.record_eq("lc10", geo.shape_star(Conn::levi_civita, e.u, e), Vec(space.n), w);
        rep.record_eq("q25b", geo.shape_star(Conn::quarter_symmetric, e.u, e), -pie * fe, w);
        rep.record_eq("q25b_screen", geo.shape_star(Conn::quarter_symmetric, e.u, e), -pie * geo.screen_proj(fe), w);
    }
    rep.note("q25b", "stated form; the screen-valued left side can only match when pi(xi) f xi = 0");
    return rep;
}

} // namespace metallic

#endif
