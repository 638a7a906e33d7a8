#ifndef METALLIC_NUMERIC_HPP
#define METALLIC_NUMERIC_HPP

// Exact arithmetic in multi-quadratic extensions Q(sqrt(d1), ..., sqrt(dk)).
//
// An element is stored sparsely as a sum of c_m * sqrt(m) over squarefree
// integers m >= 1 (m = 1 is the rational part). The square roots of distinct
// squarefree integers are linearly independent over Q, so an element is zero
// exactly when it has no terms, and equality is a term-by-term comparison.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace metallic {

using Rational = mpq_class;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("radicand product overflows 64 bits");
    }
    return r;
}

// Splits n > 0 as square * squarefree; returns {s, m} with n = s^2 * m.
inline std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n)
{
    std::int64_t s = 1, m = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) {
            s *= p;
        }
        if (e % 2 == 1) {
            m *= p;
        }
    }
    return {s, checked_mul(m, n)};
}

inline bool is_squarefree(std::int64_t n)
{
    return n >= 1 && split_square(n).first == 1;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// sqrt(a) * sqrt(b) = g * sqrt(a b / g^2) for squarefree a, b and g = gcd(a, b).
inline std::pair<std::int64_t, std::int64_t> radical_product(std::int64_t a, std::int64_t b)
{
    const std::int64_t g = std::gcd(a, b);
    return {g, checked_mul(a / g, b / g)};
}

inline std::int64_t isqrt(std::int64_t n)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

} // namespace detail

// Ordered, pairwise-distinct squarefree radicands >= 2 whose subset products
// are again pairwise distinct after squarefree reduction.
class RadicalBasis {
public:
    RadicalBasis() = default;
    explicit RadicalBasis(std::vector<std::int64_t> radicands) : radicands_(std::move(radicands))
    {
        for (std::size_t i = 0; i < radicands_.size(); ++i) {
            if (radicands_[i] < 2 || !detail::is_squarefree(radicands_[i])) {
                throw std::invalid_argument("radicand " + std::to_string(radicands_[i]) + " is not a squarefree integer >= 2");
            }
            if (i > 0 && radicands_[i] <= radicands_[i - 1]) {
                throw std::invalid_argument("radicands must be strictly increasing");
            }
        }
        auto keys = subset_keys();
        std::vector<std::int64_t> sorted;
        for (auto &k : keys) {
            sorted.push_back(k.second);
        }
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("radicands are multiplicatively dependent");
        }
    }

    const std::vector<std::int64_t> &radicands() const noexcept { return radicands_; }
    std::size_t size() const noexcept { return radicands_.size(); }
    std::size_t dimension() const noexcept { return std::size_t{1} << radicands_.size(); }

    // For every subset mask: sqrt(product) = factor * sqrt(key).
    std::vector<std::pair<std::int64_t, std::int64_t>> subset_keys() const
    {
        std::vector<std::pair<std::int64_t, std::int64_t>> out(dimension(), {1, 1});
        for (std::size_t mask = 1; mask < dimension(); ++mask) {
            std::int64_t factor = 1, key = 1;
            for (std::size_t i = 0; i < radicands_.size(); ++i) {
                if (mask & (std::size_t{1} << i)) {
                    auto [g, k] = detail::radical_product(key, radicands_[i]);
                    factor = detail::checked_mul(factor, g);
                    key = k;
                }
            }
            out[mask] = {factor, key};
        }
        return out;
    }

    friend RadicalBasis merge(const RadicalBasis &a, const RadicalBasis &b)
    {
        std::vector<std::int64_t> all = a.radicands_;
        all.insert(all.end(), b.radicands_.begin(), b.radicands_.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return RadicalBasis(std::move(all));
    }

    friend bool operator==(const RadicalBasis &, const RadicalBasis &) = default;

private:
    std::vector<std::int64_t> radicands_;
};

class FieldElement {
public:
    using Term = std::pair<std::int64_t, Rational>;

    FieldElement() = default;
    FieldElement(int v) : FieldElement(Rational(v)) {}
    FieldElement(long v) : FieldElement(Rational(v)) {}
    FieldElement(const Rational &r)
    {
        if (r != 0) {
            terms_.emplace_back(1, r);
            terms_.back().second.canonicalize();
        }
    }

    static FieldElement rational(long num, long den = 1)
    {
        Rational r(num, den);
        r.canonicalize();
        return FieldElement(r);
    }

    // sqrt(n) normalized to s*sqrt(m) with m squarefree.
    static FieldElement sqrt(std::int64_t n)
    {
        if (n < 0) {
            throw std::domain_error("square root of a negative integer");
        }
        if (n == 0) {
            return {};
        }
        auto [s, m] = detail::split_square(n);
        FieldElement out;
        out.terms_.emplace_back(m, Rational(static_cast<long>(s)));
        return out;
    }

    // sqrt(a/b) = sqrt(a*b)/b for a rational a/b >= 0.
    static FieldElement sqrt(const Rational &r)
    {
        if (r < 0) {
            throw std::domain_error("square root of a negative rational");
        }
        const mpz_class num = r.get_num(), den = r.get_den();
        const mpz_class prod = num * den;
        if (!prod.fits_slong_p()) {
            throw std::overflow_error("radicand too large");
        }
        return sqrt(static_cast<std::int64_t>(prod.get_si())) * FieldElement(Rational(mpz_class(1), den));
    }

    // Coefficient times sqrt(radicand); radicand need not be squarefree.
    static FieldElement radical(const Rational &coefficient, std::int64_t radicand)
    {
        return sqrt(radicand) * FieldElement(coefficient);
    }

    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_rational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }

    Rational coefficient(std::int64_t radicand) const
    {
        for (const auto &[k, c] : terms_) {
            if (k == radicand) {
                return c;
            }
        }
        return 0;
    }
    Rational rational_part() const { return coefficient(1); }

    // Smallest radical basis (prime radicands) containing this element.
    RadicalBasis basis() const
    {
        std::vector<std::int64_t> primes;
        for (const auto &[k, c] : terms_) {
            for (auto p : detail::prime_factors(k)) {
                primes.push_back(p);
            }
        }
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        return RadicalBasis(std::move(primes));
    }

    // One rational coordinate per subset product of the basis radicands.
    std::vector<Rational> coords(const RadicalBasis &b) const
    {
        const auto keys = b.subset_keys();
        std::vector<Rational> out(keys.size(), Rational(0));
        for (const auto &[k, c] : terms_) {
            bool found = false;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (keys[i].second == k) {
                    out[i] = c / Rational(static_cast<long>(keys[i].first));
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw std::invalid_argument("element is not expressible over the given radical basis");
            }
        }
        return out;
    }

    static FieldElement from_coords(const RadicalBasis &b, std::span<const Rational> coords)
    {
        const auto keys = b.subset_keys();
        if (coords.size() != keys.size()) {
            throw dimension_mismatch("coordinate count does not match radical basis");
        }
        FieldElement out;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (coords[i] != 0) {
                out += radical(coords[i] * Rational(static_cast<long>(keys[i].first)), keys[i].second);
            }
        }
        return out;
    }

    FieldElement operator-() const
    {
        FieldElement out = *this;
        for (auto &t : out.terms_) {
            t.second = -t.second;
        }
        return out;
    }

    FieldElement &operator+=(const FieldElement &o)
    {
        *this = combine(*this, o, 1);
        return *this;
    }
    FieldElement &operator-=(const FieldElement &o)
    {
        *this = combine(*this, o, -1);
        return *this;
    }
    FieldElement &operator*=(const FieldElement &o)
    {
        *this = *this * o;
        return *this;
    }
    FieldElement &operator/=(const FieldElement &o)
    {
        *this = *this * o.inverse();
        return *this;
    }

    friend FieldElement operator+(const FieldElement &a, const FieldElement &b) { return combine(a, b, 1); }
    friend FieldElement operator-(const FieldElement &a, const FieldElement &b) { return combine(a, b, -1); }

    friend FieldElement operator*(const FieldElement &a, const FieldElement &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.is_rational()) {
            return b.scaled(a.terms_[0].second);
        }
        if (b.is_rational()) {
            return a.scaled(b.terms_[0].second);
        }
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto &[ka, ca] : a.terms_) {
            for (const auto &[kb, cb] : b.terms_) {
                auto [g, k] = detail::radical_product(ka, kb);
                acc.emplace_back(k, ca * cb * Rational(static_cast<long>(g)));
            }
        }
        return from_unsorted(std::move(acc));
    }

    friend FieldElement operator/(const FieldElement &a, const FieldElement &b) { return a * b.inverse(); }

    friend bool operator==(const FieldElement &a, const FieldElement &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FieldElement &a, const FieldElement &b) { return !(a == b); }
    friend bool operator<(const FieldElement &a, const FieldElement &b) { return (a - b).sign() < 0; }
    friend bool operator>(const FieldElement &a, const FieldElement &b) { return (a - b).sign() > 0; }

    // Inverse by recursive rationalization: a = x + y sqrt(P) for the largest
    // prime P occurring, and a (x - y sqrt(P)) = x^2 - P y^2 is free of sqrt(P).
    FieldElement inverse() const
    {
        if (is_zero()) {
            throw division_by_zero();
        }
        if (is_rational()) {
            return FieldElement(Rational(1) / terms_[0].second);
        }
        std::int64_t prime = 0;
        for (const auto &[k, c] : terms_) {
            for (auto p : detail::prime_factors(k)) {
                prime = std::max(prime, p);
            }
        }
        FieldElement x, y;
        for (const auto &[k, c] : terms_) {
            if (k % prime == 0) {
                y.terms_.emplace_back(k / prime, c);
            } else {
                x.terms_.emplace_back(k, c);
            }
        }
        // Keys stay sorted: dividing a sorted run by the same prime keeps the order.
        std::sort(y.terms_.begin(), y.terms_.end(), [](const Term &l, const Term &r) { return l.first < r.first; });
        const FieldElement root_p = sqrt(prime);
        const FieldElement conj = x - y * root_p;
        const FieldElement norm = x * x - y * y * FieldElement(static_cast<long>(prime));
        return conj * norm.inverse();
    }

    // Exact sign. Non-rational elements are decided by enclosing every
    // sqrt(m) in a rational interval that is bisected until the enclosure of
    // the element excludes zero.
    int sign() const
    {
        if (is_zero()) {
            return 0;
        }
        if (is_rational()) {
            return sgn(terms_[0].second);
        }
        std::vector<Rational> lo, hi;
        for (const auto &[k, c] : terms_) {
            const auto r = detail::isqrt(k);
            lo.emplace_back(static_cast<long>(r));
            hi.emplace_back(static_cast<long>(r == 0 || r * r != k ? r + 1 : r));
        }
        for (;;) {
            Rational sum_lo = 0, sum_hi = 0;
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                const Rational &c = terms_[i].second;
                if (c > 0) {
                    sum_lo += c * lo[i];
                    sum_hi += c * hi[i];
                } else {
                    sum_lo += c * hi[i];
                    sum_hi += c * lo[i];
                }
            }
            if (sum_lo > 0) {
                return 1;
            }
            if (sum_hi < 0) {
                return -1;
            }
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                const Rational k(static_cast<long>(terms_[i].first));
                if (lo[i] == hi[i]) {
                    continue;
                }
                Rational mid = (lo[i] + hi[i]) / 2;
                if (mid * mid <= k) {
                    lo[i] = mid;
                } else {
                    hi[i] = mid;
                }
            }
        }
    }

    double to_double() const
    {
        double out = 0;
        for (const auto &[k, c] : terms_) {
            out += c.get_d() * std::sqrt(static_cast<double>(k));
        }
        return out;
    }

    // Literal syntax: "1/2 + 3*sqrt(5) - sqrt(2)", "0" for zero.
    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[k, c] : terms_) {
            Rational mag = abs(c);
            if (first) {
                if (c < 0) {
                    out += "-";
                }
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (k == 1) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += "sqrt(" + std::to_string(k) + ")";
            } else {
                out += mag.get_str() + "*sqrt(" + std::to_string(k) + ")";
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const FieldElement &x) { return os << x.to_string(); }

private:
    std::vector<Term> terms_; // sorted by radicand, no zero coefficients

    FieldElement scaled(const Rational &s) const
    {
        FieldElement out = *this;
        for (auto &t : out.terms_) {
            t.second *= s;
        }
        return out;
    }

    static FieldElement combine(const FieldElement &a, const FieldElement &b, int sgn_b)
    {
        FieldElement out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.terms_.emplace_back(b.terms_[j].first, sgn_b > 0 ? b.terms_[j].second : Rational(-b.terms_[j].second));
                ++j;
            } else {
                Rational c = sgn_b > 0 ? Rational(a.terms_[i].second + b.terms_[j].second)
                                       : Rational(a.terms_[i].second - b.terms_[j].second);
                if (c != 0) {
                    out.terms_.emplace_back(a.terms_[i].first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    static FieldElement from_unsorted(std::vector<Term> acc)
    {
        std::sort(acc.begin(), acc.end(), [](const Term &l, const Term &r) { return l.first < r.first; });
        FieldElement out;
        for (auto &t : acc) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first) {
                out.terms_.back().second += t.second;
            } else {
                if (!out.terms_.empty() && out.terms_.back().second == 0) {
                    out.terms_.pop_back();
                }
                out.terms_.push_back(std::move(t));
            }
        }
        if (!out.terms_.empty() && out.terms_.back().second == 0) {
            out.terms_.pop_back();
        }
        return out;
    }
};

inline FieldElement fe_add(const FieldElement &a, const FieldElement &b) { return a + b; }
inline FieldElement fe_mul(const FieldElement &a, const FieldElement &b) { return a * b; }
inline FieldElement fe_inv(const FieldElement &a) { return a.inverse(); }
inline int fe_sign(const FieldElement &a) { return a.sign(); }

inline FieldElement pow(FieldElement base, unsigned e)
{
    FieldElement out(1);
    while (e > 0) {
        if (e & 1U) {
            out *= base;
        }
        base *= base;
        e >>= 1U;
    }
    return out;
}

// (p, q) metallic structure constants and the metallic mean
// sigma = (p + sqrt(p^2 + 4q)) / 2, the positive root of x^2 = p x + q.
struct MetallicParams {
    long p = 1;
    long q = 1;
    FieldElement sigma;

    static MetallicParams make(long p, long q)
    {
        if (p < 1 || q < 1) {
            throw std::invalid_argument("metallic parameters p and q must be positive integers");
        }
        MetallicParams out;
        out.p = p;
        out.q = q;
        out.sigma = FieldElement::rational(p, 2) + FieldElement::sqrt(p * p + 4 * q) * FieldElement::rational(1, 2);
        return out;
    }

    // The conjugate eigenvalue p - sigma.
    FieldElement conjugate() const { return FieldElement(p) - sigma; }
    FieldElement sqrt_q() const { return FieldElement::sqrt(static_cast<std::int64_t>(q)); }
};

} // namespace metallic

#endif
