#ifndef METALLIC_RANDOM_HPP
#define METALLIC_RANDOM_HPP

// Seeded generators for property checks. std::uniform_int_distribution is
// implementation defined, so integers are drawn from the raw engine output
// by rejection to keep streams identical across standard libraries.

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"
#include "submanifold.hpp"
#include "symbolic.hpp"

namespace metallic {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }

    // Small rationals a/b with |a| <= num, 1 <= b <= den.
    FieldElement rational(std::int64_t num = 5, std::int64_t den = 4)
    {
        return FieldElement::rational(uniform(-num, num), uniform(1, den));
    }

    // Small elements of the field generated by the given radicands.
    FieldElement element(const std::vector<std::int64_t> &radicands)
    {
        FieldElement x = rational();
        for (auto d : radicands) {
            if (chance(50)) {
                x += rational(3, 2) * FieldElement::sqrt(d);
            }
        }
        return x;
    }

    Vec vec(std::size_t n, const std::vector<std::int64_t> &radicands = {})
    {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = radicands.empty() ? rational() : element(radicands);
        }
        return v;
    }

    // Sparse polynomial of total degree <= deg with small rational coefficients.
    Poly poly(const Poly::Vars &vars, int deg, int density = 40)
    {
        Poly out = Poly::constant(vars, FieldElement());
        std::vector<Exponents> monomials;
        Exponents e(vars->size(), 0);
        enumerate(e, 0, deg, monomials);
        for (const auto &m : monomials) {
            if (!chance(density)) {
                continue;
            }
            Poly term = Poly::constant(vars, rational(4, 3));
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (int k = 0; k < m[i]; ++k) {
                    term = term * Poly::variable(vars, i);
                }
            }
            out += term;
        }
        return out;
    }

    Point point(std::size_t m) { return vec(m).entries(); }

private:
    std::mt19937_64 eng_;

    static void enumerate(Exponents &e, std::size_t i, int remaining, std::vector<Exponents> &out)
    {
        if (i == e.size()) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[i] = static_cast<std::uint8_t>(k);
            enumerate(e, i + 1, remaining - k, out);
        }
        e[i] = 0;
    }
};

// sum_k c_k(t) X_k with random polynomial coefficients.
inline ParamField random_combination(Rng &rng, const std::vector<NamedParamField> &frame, const Poly::Vars &vars,
                                     std::size_t m, int deg)
{
    ParamField out = ParamField::zero(vars, m);
    for (const auto &f : frame) {
        out = out + rng.poly(vars, deg) * f.field;
    }
    return out;
}

inline AmbField random_ambient_field(Rng &rng, const Poly::Vars &vars, std::size_t n, int deg)
{
    AmbField out = AmbField::zero(vars, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.components[i] = rng.poly(vars, deg);
    }
    return out;
}

} // namespace metallic

#endif
