#ifndef METALLIC_SUBMANIFOLD_HPP
#define METALLIC_SUBMANIFOLD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ambient.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "symbolic.hpp"

namespace metallic {

struct NamedParamField {
    std::string name;
    ParamField field;
};

struct NamedAmbField {
    std::string name;
    AmbField field;
};

using Point = std::vector<FieldElement>;

struct SubmanifoldSpec {
    Embedding embedding;
    std::vector<NamedParamField> rad;
    std::vector<NamedParamField> screen;
    std::vector<NamedParamField> b;     // empty with bperp empty: B defaults to the whole screen
    std::vector<NamedParamField> bperp;
    std::vector<NamedAmbField> str;
    std::vector<NamedAmbField> ltr;     // optional; constructed pointwise when absent
    std::vector<Point> points;

    std::size_t m() const noexcept { return embedding.m(); }
    std::size_t n() const noexcept { return embedding.n(); }
    bool has_ltr() const noexcept { return !ltr.empty(); }
    bool declares_split() const noexcept { return !b.empty() || !bperp.empty(); }

    // Distribution frames as used by the classification: B = screen when no split is declared.
    std::vector<NamedParamField> b_frame() const { return declares_split() ? b : screen; }
    std::vector<NamedParamField> bperp_frame() const { return declares_split() ? bperp : std::vector<NamedParamField>{}; }
    std::vector<NamedParamField> tangent_frame() const
    {
        std::vector<NamedParamField> out = rad;
        out.insert(out.end(), screen.begin(), screen.end());
        return out;
    }
    std::vector<NamedParamField> bprime_frame() const
    {
        std::vector<NamedParamField> out = rad;
        const auto bb = b_frame();
        out.insert(out.end(), bb.begin(), bb.end());
        return out;
    }
};

struct Decomposition {
    Vec rad, screen, ltr, str;             // ambient parts
    Vec c_rad, c_screen, c_ltr, c_str;     // coordinates over the point frame

    Vec tangent() const { return rad + screen; }
    Vec transversal() const { return ltr + str; }
    Vec total() const { return rad + screen + ltr + str; }
};

struct RadicalInfo {
    std::vector<Vec> param_coords; // kernel of the Gram matrix of the coordinate tangent frame
    std::vector<Vec> ambient;
};

inline std::vector<Vec> columns(const Mat &m)
{
    std::vector<Vec> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        out.push_back(m.col(j));
    }
    return out;
}

inline RadicalInfo radical_at(const Mat &jac, const Signature &sig)
{
    const auto tangent = columns(jac);
    RadicalInfo info;
    info.param_coords = null_space(gram(tangent, sig));
    for (const auto &c : info.param_coords) {
        info.ambient.push_back(jac * c);
    }
    return info;
}

// Lightlike transversal frame: (1) kernel K of g(., X) and g(., W) for the
// screen and screen-transversal frames; (2) F_i in K with g(F_i, xi_j) = delta_ij
// (free coordinates zero); (3) N_i = F_i - 1/2 sum_j g(F_i, F_j) xi_j.
inline std::vector<Vec> construct_ltr(const std::vector<Vec> &xi, const std::vector<Vec> &screen,
                                      const std::vector<Vec> &str, const Signature &sig)
{
    const std::size_t n = sig.size();
    if (xi.empty()) {
        return {};
    }
    std::vector<Vec> constraints = screen;
    constraints.insert(constraints.end(), str.begin(), str.end());
    Mat c(constraints.size(), n);
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            c(i, k) = sig[k] > 0 ? constraints[i][k] : -constraints[i][k];
        }
    }
    const std::vector<Vec> kernel = constraints.empty()
                                        ? columns(Mat::identity(n))
                                        : null_space(c);
    const std::size_t r = xi.size();
    Mat a(r, kernel.size());
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < kernel.size(); ++l) {
            a(j, l) = inner(xi[j], kernel[l], sig);
        }
    }
    std::vector<Vec> f;
    for (std::size_t i = 0; i < r; ++i) {
        auto coef = try_solve(a, Vec::unit(r, i));
        if (!coef) {
            throw degenerate_configuration("no transversal vector pairs with the radical frame; the screen choice is invalid");
        }
        Vec fi(n);
        for (std::size_t l = 0; l < kernel.size(); ++l) {
            if (!(*coef)[l].is_zero()) {
                fi += (*coef)[l] * kernel[l];
            }
        }
        f.push_back(std::move(fi));
    }
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r; ++i) {
        Vec ni = f[i];
        for (std::size_t j = 0; j < r; ++j) {
            const FieldElement gij = inner(f[i], f[j], sig);
            if (!gij.is_zero()) {
                ni -= (FieldElement::rational(1, 2) * gij) * xi[j];
            }
        }
        out.push_back(std::move(ni));
    }
    return out;
}

// Frames evaluated at one point, with the inverse of the combined basis
// [rad | screen | ltr | str] cached for projections.
class PointFrame {
public:
    Point point;
    Mat jac;
    std::vector<Vec> xi_param, screen_param; // parameter coordinates
    std::vector<Vec> xi, screen, ltr, str;   // ambient vectors
    std::vector<Vec> ltr_constructed;
    bool ltr_declared = false;

    std::size_t r() const noexcept { return xi.size(); }
    std::size_t s() const noexcept { return screen.size(); }
    std::size_t t() const noexcept { return str.size(); }
    std::size_t n() const noexcept { return basis_.rows(); }
    const Mat &basis() const noexcept { return basis_; }

    Decomposition project(const Vec &u) const
    {
        if (u.size() != n()) {
            throw dimension_mismatch("vector does not live in the ambient space");
        }
        const Vec c = basis_inv_ * u;
        Decomposition d;
        d.rad = Vec(n());
        d.screen = Vec(n());
        d.ltr = Vec(n());
        d.str = Vec(n());
        std::size_t k = 0;
        auto take = [&](const std::vector<Vec> &frame, Vec &part, Vec &coords) {
            coords = Vec(frame.size());
            for (std::size_t i = 0; i < frame.size(); ++i, ++k) {
                coords[i] = c[k];
                if (!c[k].is_zero()) {
                    part += c[k] * frame[i];
                }
            }
        };
        take(xi, d.rad, d.c_rad);
        take(screen, d.screen, d.c_screen);
        take(ltr, d.ltr, d.c_ltr);
        take(str, d.str, d.c_str);
        return d;
    }

    // Parameter coordinates of a tangent vector.
    Vec tangent_params(const Vec &tangent) const
    {
        auto x = try_solve(jac, tangent);
        if (!x) {
            throw assertion_failure("vector expected to be tangent is not");
        }
        return *x;
    }

    void set_basis()
    {
        std::vector<Vec> all = xi;
        all.insert(all.end(), screen.begin(), screen.end());
        all.insert(all.end(), ltr.begin(), ltr.end());
        all.insert(all.end(), str.begin(), str.end());
        basis_ = Mat::from_columns(all, jac.rows());
        if (basis_.cols() != basis_.rows() || rank(basis_) != basis_.rows()) {
            throw degenerate_configuration("radical, screen, lightlike transversal and screen transversal frames do not form a basis");
        }
        basis_inv_ = inverse(basis_);
    }

private:
    Mat basis_;
    Mat basis_inv_;
};

struct FW {
    Vec f, wl, ws;
    Vec w() const { return wl + ws; }
};
struct BC {
    Vec b, c;
};

inline FW fw_decompose(const PointFrame &pf, const AmbientSpace &space, const Vec &u)
{
    const auto d = pf.project(space.J * u);
    return {d.tangent(), d.ltr, d.str};
}

inline BC bc_decompose(const PointFrame &pf, const AmbientSpace &space, const Vec &v)
{
    const auto d = pf.project(space.J * v);
    return {d.tangent(), d.transversal()};
}

inline std::vector<FieldElement> eta_i(const PointFrame &pf, const Signature &sig, const Vec &u)
{
    std::vector<FieldElement> out;
    for (const auto &n : pf.ltr) {
        out.push_back(inner(u, n, sig));
    }
    return out;
}

// Projection of TM onto S(TM) along Rad TM.
inline Vec screen_project(const PointFrame &pf, const Vec &u) { return pf.project(u).screen; }

inline std::string point_to_string(const Point &p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i ? ", " : "") + p[i].to_string();
    }
    return out + ")";
}

// Builds and validates the frames at one point. Throws validation errors
// for non-immersions, frame mismatches and degenerate configurations.
inline PointFrame build_point_frame(const AmbientSpace &space, const SubmanifoldSpec &spec, const Point &point)
{
    const std::size_t m = spec.m(), n = spec.n();
    const std::string where = " at " + point_to_string(point);
    if (point.size() != m) {
        throw dimension_mismatch("sample point has " + std::to_string(point.size()) + " coordinates, expected " +
                                 std::to_string(m));
    }
    PointFrame pf;
    pf.point = point;
    pf.jac = spec.embedding.jacobian(point);
    if (rank(pf.jac) != m) {
        throw validation_error("embedding is not an immersion" + where);
    }
    for (const auto &f : spec.rad) {
        pf.xi_param.push_back(f.field.eval(point));
        pf.xi.push_back(pf.jac * pf.xi_param.back());
    }
    for (const auto &f : spec.screen) {
        pf.screen_param.push_back(f.field.eval(point));
        pf.screen.push_back(pf.jac * pf.screen_param.back());
    }
    const RadicalInfo rad = radical_at(pf.jac, space.sig);
    if (rad.ambient.empty()) {
        throw declared_frame_mismatch("Rad TM = 0" + where + " under signature " + space.sig.to_string() +
                                      ": the induced metric is nondegenerate, so the submanifold is not lightlike");
    }
    if (!same_span(rad.ambient, pf.xi, n) || pf.xi.size() != rad.ambient.size()) {
        throw declared_frame_mismatch("declared radical frame does not span Rad TM" + where + " (computed rank " +
                                      std::to_string(rad.ambient.size()) + ")");
    }
    std::vector<Vec> tangent = pf.xi;
    tangent.insert(tangent.end(), pf.screen.begin(), pf.screen.end());
    if (tangent.size() != m || rank(Mat::from_columns(tangent, n)) != m) {
        throw declared_frame_mismatch("radical and screen frames do not span TM" + where);
    }
    if (rank(gram(pf.screen, space.sig)) != pf.screen.size()) {
        throw degenerate_configuration("screen distribution is degenerate" + where);
    }
    for (const auto &f : spec.str) {
        if (f.field.size() != n) {
            throw dimension_mismatch("screen transversal field '" + f.name + "' has the wrong length");
        }
        pf.str.push_back(f.field.eval(point));
    }
    if (pf.str.size() + m + pf.r() != n) {
        throw declared_frame_mismatch("screen transversal frame has " + std::to_string(pf.str.size()) +
                                      " fields, expected " + std::to_string(n - m - pf.r()) + where);
    }
    for (const auto &w : pf.str) {
        for (const auto &x : tangent) {
            if (!inner(w, x, space.sig).is_zero()) {
                throw declared_frame_mismatch("screen transversal frame is not orthogonal to TM" + where);
            }
        }
    }
    if (rank(gram(pf.str, space.sig)) != pf.str.size()) {
        throw degenerate_configuration("screen transversal bundle is degenerate" + where);
    }
    pf.ltr_constructed = construct_ltr(pf.xi, pf.screen, pf.str, space.sig);
    if (spec.has_ltr()) {
        pf.ltr_declared = true;
        for (const auto &f : spec.ltr) {
            if (f.field.size() != n) {
                throw dimension_mismatch("lightlike transversal field '" + f.name + "' has the wrong length");
            }
            pf.ltr.push_back(f.field.eval(point));
        }
        if (pf.ltr.size() != pf.r()) {
            throw declared_frame_mismatch("lightlike transversal frame has " + std::to_string(pf.ltr.size()) +
                                          " fields, expected " + std::to_string(pf.r()) + where);
        }
        for (const auto &nn : pf.ltr) {
            for (const auto &x : pf.screen) {
                if (!inner(nn, x, space.sig).is_zero()) {
                    throw declared_frame_mismatch("lightlike transversal frame is not orthogonal to S(TM)" + where);
                }
            }
            for (const auto &w : pf.str) {
                if (!inner(nn, w, space.sig).is_zero()) {
                    throw declared_frame_mismatch("lightlike transversal frame is not orthogonal to S(TM^perp)" +
                                                  where);
                }
            }
        }
    } else {
        pf.ltr = pf.ltr_constructed;
    }
    pf.set_basis();
    return pf;
}

// Radical rank at every sample point; differing ranks raise rank_jump.
inline std::size_t radical_rank(const AmbientSpace &space, const SubmanifoldSpec &spec)
{
    std::optional<std::size_t> r;
    for (const auto &p : spec.points) {
        const Mat jac = spec.embedding.jacobian(p);
        if (rank(jac) != spec.m()) {
            throw validation_error("embedding is not an immersion at " + point_to_string(p));
        }
        const std::size_t here = radical_at(jac, space.sig).ambient.size();
        if (r && *r != here) {
            throw rank_jump("radical rank changes from " + std::to_string(*r) + " to " + std::to_string(here) +
                            " at " + point_to_string(p));
        }
        r = here;
    }
    return r.value_or(0);
}

// Radical basis at a point in tangent coordinates, checked against the declared frame.
inline RadicalInfo radical_basis(const AmbientSpace &space, const SubmanifoldSpec &spec, const Point &point)
{
    const Mat jac = spec.embedding.jacobian(point);
    RadicalInfo info = radical_at(jac, space.sig);
    std::vector<Vec> declared;
    for (const auto &f : spec.rad) {
        declared.push_back(jac * f.field.eval(point));
    }
    if (declared.size() != info.ambient.size() || !same_span(declared, info.ambient, spec.n())) {
        throw declared_frame_mismatch("declared radical frame does not span Rad TM at " + point_to_string(point));
    }
    return info;
}

// Convenience: coordinate fields completing a radical frame to TM. The
// result is a candidate screen and must still pass validation.
inline std::vector<std::size_t> screen_complement(const Mat &jac, const std::vector<Vec> &xi)
{
    std::vector<Vec> acc = xi;
    std::vector<std::size_t> chosen;
    std::size_t current = acc.empty() ? 0 : rank(Mat::from_columns(acc));
    for (std::size_t j = 0; j < jac.cols(); ++j) {
        acc.push_back(jac.col(j));
        const std::size_t next = rank(Mat::from_columns(acc));
        if (next > current) {
            chosen.push_back(j);
            current = next;
        } else {
            acc.pop_back();
        }
    }
    return chosen;
}

} // namespace metallic

#endif
