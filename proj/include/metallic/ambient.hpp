#ifndef METALLIC_AMBIENT_HPP
#define METALLIC_AMBIENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "symbolic.hpp"

namespace metallic {

struct MetallicReport {
    bool a = false; // J^2 = pJ + qI
    bool b = false; // g(JU, V) = g(U, JV)
    bool c = false; // g(JU, JV) = p g(U, JV) + q g(U, V)
    bool ok() const noexcept { return a && b && c; }
};

inline Mat metric_matrix(const Signature &s)
{
    std::vector<FieldElement> d;
    for (int e : s.eps()) {
        d.emplace_back(e);
    }
    return Mat::diagonal(d);
}

// (b) and (c) are checked on all basis pairs, which is equivalent to the
// matrix identities G J = (G J)^T and J^T G J = p G J + q G.
inline MetallicReport validate_metallic(const Mat &j, const Signature &sig, const MetallicParams &mp)
{
    if (j.rows() != j.cols() || j.rows() != sig.size()) {
        throw dimension_mismatch("metallic structure must be a square matrix of the ambient dimension");
    }
    const std::size_t n = j.rows();
    const Mat g = metric_matrix(sig);
    const Mat id = Mat::identity(n);
    MetallicReport r;
    r.a = (j * j) == (FieldElement(mp.p) * j + FieldElement(mp.q) * id);
    const Mat gj = g * j;
    r.b = gj == gj.transpose();
    r.c = (j.transpose() * g * j) == (FieldElement(mp.p) * gj + FieldElement(mp.q) * g);
    return r;
}

struct AmbientSpace {
    std::size_t n = 0;
    Signature sig;
    MetallicParams params;
    Mat J;
    AmbField eta; // along the submanifold, in its parameters; empty means zero

    // Refuses a structure that fails (a), (b) or (c).
    static AmbientSpace make(Signature sig, MetallicParams mp, Mat j, AmbField eta = {})
    {
        const auto rep = validate_metallic(j, sig, mp);
        if (!rep.ok()) {
            std::string which;
            if (!rep.a) {
                which += " J^2 = pJ + qI";
            }
            if (!rep.b) {
                which += " g(JU,V) = g(U,JV)";
            }
            if (!rep.c) {
                which += " g(JU,JV) = p g(U,JV) + q g(U,V)";
            }
            throw validation_error("metallic structure fails:" + which);
        }
        if (!eta.components.empty() && eta.size() != sig.size()) {
            throw dimension_mismatch("characteristic field has the wrong number of components");
        }
        AmbientSpace a;
        a.n = sig.size();
        a.sig = std::move(sig);
        a.params = std::move(mp);
        a.J = std::move(j);
        a.eta = std::move(eta);
        return a;
    }

    bool eta_is_zero() const { return eta.components.empty() || eta.is_zero(); }

    AmbField eta_field(const Poly::Vars &vars) const
    {
        return eta.components.empty() ? AmbField::zero(vars, n) : eta;
    }

    Vec eta_at(const std::vector<FieldElement> &point) const
    {
        return eta.components.empty() ? Vec(n) : eta.eval(point);
    }

    Vec apply_J(const Vec &v) const { return J * v; }
};

// pi(U) = g(U, eta) as a polynomial in the parameters.
inline Poly pi(const AmbientSpace &space, const AmbField &u)
{
    if (u.size() != space.n) {
        throw dimension_mismatch("field length does not match ambient dimension");
    }
    return inner_poly(u, space.eta_field(u[0].vars()), space.sig);
}

// D_U V = nabla_U V + pi(V) J U with U tangent along the embedding.
inline AmbField qs_conn(const AmbientSpace &space, const Embedding &emb, const ParamField &u, const AmbField &v)
{
    if (v.size() != space.n) {
        throw dimension_mismatch("field length does not match ambient dimension");
    }
    AmbField out = directional_derivative(u, v);
    const Poly piv = pi(space, v);
    if (!piv.is_zero()) {
        out = out + piv * apply_matrix(space.J, pushforward(u, emb));
    }
    return out;
}

// The identity map R^n -> R^n with parameters y1..yn, for purely ambient computations.
inline Embedding identity_embedding(std::size_t n, const std::string &prefix = "y")
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(prefix + std::to_string(i + 1));
    }
    Embedding e;
    e.params = Poly::make_vars(names);
    for (std::size_t i = 0; i < n; ++i) {
        e.components.push_back(Poly::variable(e.params, i));
    }
    return e;
}

// Value and first partial derivatives of a field at one parameter point.
struct Jet {
    Vec val;
    std::vector<Vec> d; // d[j] = d/dt_j

    Vec along(const Vec &u) const
    {
        Vec out(val.size());
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (!u[j].is_zero()) {
                out += u[j] * d[j];
            }
        }
        return out;
    }
    Jet mapped(const Mat &m) const
    {
        Jet out{m * val, {}};
        for (const auto &x : d) {
            out.d.push_back(m * x);
        }
        return out;
    }
    friend Jet operator+(Jet a, const Jet &b)
    {
        a.val += b.val;
        for (std::size_t j = 0; j < a.d.size(); ++j) {
            a.d[j] += b.d[j];
        }
        return a;
    }
    friend Jet operator*(const FieldElement &s, Jet a)
    {
        a.val *= s;
        for (auto &x : a.d) {
            x *= s;
        }
        return a;
    }
};

// Pointwise evaluation of the ambient connections along an embedding.
class AmbientPoint {
public:
    AmbientPoint(const AmbientSpace &space, const Embedding &emb, std::vector<FieldElement> point)
        : space_(space), emb_(emb), t_(std::move(point)), jac_(emb.jacobian(t_)), eta_(space.eta_at(t_))
    {
        if (emb.n() != space.n) {
            throw dimension_mismatch("embedding codimension does not match the ambient dimension");
        }
    }

    const AmbientSpace &space() const noexcept { return space_; }
    const Embedding &embedding() const noexcept { return emb_; }
    const std::vector<FieldElement> &point() const noexcept { return t_; }
    const Mat &jacobian() const noexcept { return jac_; }
    const Vec &eta() const noexcept { return eta_; }

    Jet jet(const PolyVector &f) const
    {
        Jet out{f.eval(t_), {}};
        for (std::size_t j = 0; j < emb_.m(); ++j) {
            Vec dj(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                dj[i] = f[i].diff(j).eval(t_);
            }
            out.d.push_back(std::move(dj));
        }
        return out;
    }
    Jet jet_of_tangent(const ParamField &x) const { return jet(pushforward(x, emb_)); }

    Vec param(const ParamField &u) const { return u.eval(t_); }
    Vec tangent(const ParamField &u) const { return jac_ * param(u); }

    FieldElement g(const Vec &a, const Vec &b) const { return inner(a, b, space_.sig); }
    FieldElement pi(const Vec &v) const { return g(v, eta_); }
    Vec J(const Vec &v) const { return space_.J * v; }

    // Levi-Civita and quarter-symmetric derivatives of V in the tangent direction with parameter coordinates u.
    Vec lc(const Vec &u, const Jet &v) const { return v.along(u); }
    Vec qs(const Vec &u, const Jet &v) const
    {
        Vec out = lc(u, v);
        const FieldElement p = pi(v.val);
        if (!p.is_zero()) {
            out += p * J(jac_ * u);
        }
        return out;
    }

    // T(U,V) = pi(V) JU - pi(U) JV, checked against D_U V - D_V U - [U,V].
    std::pair<Vec, Vec> torsion(const ParamField &u, const ParamField &v) const
    {
        const Vec pu = param(u), pv = param(v);
        const Vec uu = jac_ * pu, vv = jac_ * pv;
        const Vec bracket = tangent(lie_bracket(u, v));
        const Vec lhs = qs(pu, jet_of_tangent(v)) - qs(pv, jet_of_tangent(u)) - bracket;
        const Vec rhs = pi(vv) * J(uu) - pi(uu) * J(vv);
        if (!(lhs == rhs)) {
            throw assertion_failure("torsion formula disagrees with the commutator defect at " + point_string());
        }
        return {lhs, rhs};
    }

    // (D_U g)(V, Z) = -pi(V) g(JU, Z) - pi(Z) g(JU, V).
    std::pair<FieldElement, FieldElement> nonmetricity(const ParamField &u, const AmbField &v, const AmbField &z) const
    {
        const Vec pu = param(u);
        const Vec uu = jac_ * pu;
        const Jet jv = jet(v), jz = jet(z);
        const FieldElement lhs =
            derivative_of_inner(u, v, z, jv, jz) - g(qs(pu, jv), jz.val) - g(jv.val, qs(pu, jz));
        const Vec ju = J(uu);
        const FieldElement rhs = -pi(jv.val) * g(ju, jz.val) - pi(jz.val) * g(ju, jv.val);
        if (lhs != rhs) {
            throw assertion_failure("non-metricity formula fails at " + point_string());
        }
        return {lhs, rhs};
    }

    // D_U JV = J D_U V - p pi(V) JU - q pi(V) U + pi(JV) JU.
    std::pair<Vec, Vec> metallic_identity(const ParamField &u, const AmbField &v) const
    {
        const Vec pu = param(u);
        const Vec uu = jac_ * pu;
        const Jet jv = jet(v);
        const Jet jjv = jv.mapped(space_.J);
        const Vec lhs = qs(pu, jjv);
        const FieldElement piv = pi(jv.val);
        const FieldElement p(space_.params.p), q(space_.params.q);
        const Vec ju = J(uu);
        const Vec rhs = J(qs(pu, jv)) - (p * piv) * ju - (q * piv) * uu + pi(jjv.val) * ju;
        if (!(lhs == rhs)) {
            throw assertion_failure("metallic compatibility identity fails at " + point_string());
        }
        return {lhs, rhs};
    }

    std::string point_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < t_.size(); ++i) {
            out += (i ? ", " : "") + t_[i].to_string();
        }
        return out + ")";
    }

private:
    const AmbientSpace &space_;
    const Embedding &emb_;
    std::vector<FieldElement> t_;
    Mat jac_;
    Vec eta_;

    // U<V,Z> from the polynomial g(V,Z) when its degree fits, else by the product rule.
    FieldElement derivative_of_inner(const ParamField &u, const AmbField &v, const AmbField &z, const Jet &jv,
                                     const Jet &jz) const
    {
        try {
            return apply_field(u, inner_poly(v, z, space_.sig)).eval(t_);
        } catch (const degree_overflow &) {
            const Vec pu = param(u);
            return g(jv.along(pu), jz.val) + g(jv.val, jz.along(pu));
        }
    }
};

} // namespace metallic

#endif
