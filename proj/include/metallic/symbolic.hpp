#ifndef METALLIC_SYMBOLIC_HPP
#define METALLIC_SYMBOLIC_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "numeric.hpp"

namespace metallic {

inline constexpr int default_degree_cap = 8;

using Exponents = std::vector<std::uint8_t>;

// Multivariate polynomial over FieldElement in a fixed ordered variable list.
class Poly {
public:
    using Vars = std::shared_ptr<const std::vector<std::string>>;

    Poly() : vars_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Poly(Vars vars, int cap = default_degree_cap) : vars_(std::move(vars)), cap_(cap) {}

    static Vars make_vars(std::vector<std::string> names)
    {
        return std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    static Poly constant(Vars vars, const FieldElement &c)
    {
        Poly p(std::move(vars));
        if (!c.is_zero()) {
            p.terms_[Exponents(p.nvars(), 0)] = c;
        }
        return p;
    }
    static Poly variable(Vars vars, std::size_t i)
    {
        Poly p(std::move(vars));
        Exponents e(p.nvars(), 0);
        e.at(i) = 1;
        p.terms_[e] = FieldElement(1);
        return p;
    }

    const Vars &vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_->size(); }
    int cap() const noexcept { return cap_; }
    const std::map<Exponents, FieldElement> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    int degree() const
    {
        int d = terms_.empty() ? -1 : 0;
        for (const auto &[e, c] : terms_) {
            int s = 0;
            for (auto x : e) {
                s += x;
            }
            d = std::max(d, s);
        }
        return d;
    }

    std::size_t index_of(const std::string &name) const
    {
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if ((*vars_)[i] == name) {
                return i;
            }
        }
        throw unknown_variable(name);
    }

    Poly diff(std::size_t var) const
    {
        if (var >= nvars()) {
            throw unknown_variable("#" + std::to_string(var));
        }
        Poly out(vars_, cap_);
        for (const auto &[e, c] : terms_) {
            if (e[var] == 0) {
                continue;
            }
            Exponents f = e;
            --f[var];
            out.add_term(f, c * FieldElement(static_cast<long>(e[var])));
        }
        return out;
    }
    Poly diff(const std::string &name) const { return diff(index_of(name)); }

    FieldElement eval(const std::vector<FieldElement> &point) const
    {
        if (point.size() != nvars()) {
            throw dimension_mismatch("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                     std::to_string(nvars()));
        }
        FieldElement acc;
        for (const auto &[e, c] : terms_) {
            FieldElement t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] > 0) {
                    t *= pow(point[i], e[i]);
                }
            }
            acc += t;
        }
        return acc;
    }

    Poly &operator+=(const Poly &o)
    {
        check(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        check(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    Poly &operator*=(const FieldElement &s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= FieldElement(-1); }
    friend Poly operator*(Poly a, const FieldElement &s) { return a *= s; }
    friend Poly operator*(const FieldElement &s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        a.check(b);
        const int cap = std::max(a.cap_, b.cap_);
        if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > cap) {
            throw degree_overflow(a.degree() + b.degree(), cap);
        }
        Poly out(a.vars_, cap);
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const Poly &a, const Poly &b) { return *a.vars_ == *b.vars_ && a.terms_ == b.terms_; }

    // Literal form, e.g. "2*t1^2*t4 - sqrt(3)*t2 + 1/2".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        // Highest total degree first, then lexicographic in exponents.
        std::vector<std::pair<Exponents, FieldElement>> ordered(terms_.begin(), terms_.end());
        std::stable_sort(ordered.begin(), ordered.end(), [](const auto &l, const auto &r) {
            int dl = 0, dr = 0;
            for (auto x : l.first) {
                dl += x;
            }
            for (auto x : r.first) {
                dr += x;
            }
            if (dl != dr) {
                return dl > dr;
            }
            return l.first > r.first;
        });
        for (const auto &[e, c] : ordered) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                mono += (mono.empty() ? "" : "*") + (*vars_)[i];
                if (e[i] > 1) {
                    mono += "^" + std::to_string(e[i]);
                }
            }
            FieldElement coef = c;
            bool negative = false;
            if (c.terms().size() == 1 && c.terms()[0].second < 0) {
                negative = true;
                coef = -c;
            }
            std::string cs = coef.to_string();
            if (coef.terms().size() > 1) {
                cs = "(" + cs + ")";
            }
            std::string term;
            if (mono.empty()) {
                term = cs;
            } else if (coef == FieldElement(1)) {
                term = mono;
            } else {
                term = cs + "*" + mono;
            }
            if (first) {
                out += negative ? "-" + term : term;
            } else {
                out += negative ? " - " + term : " + " + term;
            }
            first = false;
        }
        return out;
    }

private:
    Vars vars_;
    int cap_ = default_degree_cap;
    std::map<Exponents, FieldElement> terms_;

    void add_term(const Exponents &e, const FieldElement &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    void check(const Poly &o) const
    {
        if (vars_ != o.vars_ && *vars_ != *o.vars_) {
            throw dimension_mismatch("polynomials over different variable lists");
        }
    }
};

inline Poly p_diff(const Poly &f, const std::string &var) { return f.diff(var); }
inline Poly p_diff(const Poly &f, std::size_t var) { return f.diff(var); }
inline FieldElement p_eval(const Poly &f, const std::vector<FieldElement> &point) { return f.eval(point); }

// Component list of polynomials sharing one variable list.
struct PolyVector {
    std::vector<Poly> components;

    PolyVector() = default;
    explicit PolyVector(std::vector<Poly> c) : components(std::move(c)) {}
    static PolyVector zero(const Poly::Vars &vars, std::size_t n)
    {
        return PolyVector(std::vector<Poly>(n, Poly(vars)));
    }
    static PolyVector constant(const Poly::Vars &vars, const Vec &v)
    {
        PolyVector out;
        for (const auto &x : v) {
            out.components.push_back(Poly::constant(vars, x));
        }
        return out;
    }

    std::size_t size() const noexcept { return components.size(); }
    const Poly &operator[](std::size_t i) const { return components[i]; }
    Poly &operator[](std::size_t i) { return components[i]; }

    Vec eval(const std::vector<FieldElement> &point) const
    {
        Vec v(components.size());
        for (std::size_t i = 0; i < components.size(); ++i) {
            v[i] = components[i].eval(point);
        }
        return v;
    }
    bool is_zero() const
    {
        return std::all_of(components.begin(), components.end(), [](const Poly &p) { return p.is_zero(); });
    }
    int degree() const
    {
        int d = -1;
        for (const auto &c : components) {
            d = std::max(d, c.degree());
        }
        return d;
    }

    friend bool operator==(const PolyVector &a, const PolyVector &b) { return a.components == b.components; }
};

template <class Tag>
struct TypedField : PolyVector {
    using PolyVector::PolyVector;
    TypedField() = default;
    explicit TypedField(PolyVector v) : PolyVector(std::move(v)) {}

    static TypedField zero(const Poly::Vars &vars, std::size_t n) { return TypedField(PolyVector::zero(vars, n)); }
    static TypedField constant(const Poly::Vars &vars, const Vec &v) { return TypedField(PolyVector::constant(vars, v)); }

    friend TypedField operator+(const TypedField &a, const TypedField &b)
    {
        if (a.size() != b.size()) {
            throw dimension_mismatch("field component counts differ");
        }
        TypedField out = a;
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] += b[i];
        }
        return out;
    }
    friend TypedField operator-(const TypedField &a, const TypedField &b)
    {
        if (a.size() != b.size()) {
            throw dimension_mismatch("field component counts differ");
        }
        TypedField out = a;
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] -= b[i];
        }
        return out;
    }
    friend TypedField operator*(const Poly &f, const TypedField &a)
    {
        TypedField out = a;
        for (auto &c : out.components) {
            c = f * c;
        }
        return out;
    }
    friend TypedField operator*(const FieldElement &s, const TypedField &a)
    {
        TypedField out = a;
        for (auto &c : out.components) {
            c *= s;
        }
        return out;
    }
};

struct ParamTag {};
struct AmbTag {};

// Vector field on the parameter domain: components along d/dt_i.
using ParamField = TypedField<ParamTag>;
// Ambient-valued vector field along the submanifold.
using AmbField = TypedField<AmbTag>;

struct Embedding {
    Poly::Vars params;
    std::vector<Poly> components;

    std::size_t m() const noexcept { return params->size(); }
    std::size_t n() const noexcept { return components.size(); }

    Vec eval(const std::vector<FieldElement> &point) const
    {
        Vec v(components.size());
        for (std::size_t i = 0; i < components.size(); ++i) {
            v[i] = components[i].eval(point);
        }
        return v;
    }
    // Column j is d(phi)/dt_j.
    std::vector<AmbField> partials() const
    {
        std::vector<AmbField> out;
        for (std::size_t j = 0; j < m(); ++j) {
            AmbField d;
            for (const auto &c : components) {
                d.components.push_back(c.diff(j));
            }
            out.push_back(std::move(d));
        }
        return out;
    }
    Mat jacobian(const std::vector<FieldElement> &point) const
    {
        Mat jac(n(), m());
        for (std::size_t i = 0; i < n(); ++i) {
            for (std::size_t j = 0; j < m(); ++j) {
                jac(i, j) = components[i].diff(j).eval(point);
            }
        }
        return jac;
    }
};

// Derivative of a polynomial along a parameter field: sum_j X^j d_j f.
inline Poly apply_field(const ParamField &x, const Poly &f)
{
    if (x.size() != f.nvars()) {
        throw dimension_mismatch("field and polynomial have different parameter counts");
    }
    Poly out(f.vars(), f.cap());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!x[j].is_zero()) {
            out += x[j] * f.diff(j);
        }
    }
    return out;
}

// [X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i).
inline ParamField lie_bracket(const ParamField &x, const ParamField &y)
{
    if (x.size() != y.size()) {
        throw dimension_mismatch("bracket of fields with different parameter counts");
    }
    ParamField out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.components.push_back(apply_field(x, y[i]) - apply_field(y, x[i]));
    }
    return out;
}

inline AmbField pushforward(const ParamField &x, const Embedding &emb)
{
    if (x.size() != emb.m()) {
        throw dimension_mismatch("field has " + std::to_string(x.size()) + " components, embedding has " +
                                 std::to_string(emb.m()) + " parameters");
    }
    AmbField out;
    for (const auto &c : emb.components) {
        out.components.push_back(apply_field(x, c));
    }
    return out;
}

// Flat ambient Levi-Civita derivative: componentwise sum_j U^j d_j F^i.
inline AmbField directional_derivative(const ParamField &u, const AmbField &f)
{
    AmbField out;
    for (const auto &c : f.components) {
        out.components.push_back(apply_field(u, c));
    }
    return out;
}

inline Poly inner_poly(const AmbField &a, const AmbField &b, const Signature &s)
{
    if (a.size() != b.size() || a.size() != s.size() || a.size() == 0) {
        throw dimension_mismatch("inner product of fields with mismatched lengths");
    }
    Poly out(a[0].vars(), a[0].cap());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Poly t = a[i] * b[i];
        if (s[i] > 0) {
            out += t;
        } else {
            out -= t;
        }
    }
    return out;
}

inline AmbField apply_matrix(const Mat &m, const AmbField &f)
{
    if (m.cols() != f.size() || f.size() == 0) {
        throw dimension_mismatch("matrix does not act on this field");
    }
    AmbField out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Poly acc(f[0].vars(), f[0].cap());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) {
                acc += m(i, j) * f[j];
            }
        }
        out.components.push_back(std::move(acc));
    }
    return out;
}

} // namespace metallic

#endif
