#ifndef METALLIC_TESTS_SUPPORT_HPP
#define METALLIC_TESTS_SUPPORT_HPP

#include <string>

#include "metallic/metallic.hpp"

namespace testing_support {

inline std::string fixture(const std::string &name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline metallic::ManifoldSpec load(const std::string &name, metallic::ParseOptions opts = {})
{
    return metallic::parse_spec(fixture(name), opts);
}

inline metallic::ManifoldSpec load_pq(const std::string &name, long p, long q)
{
    metallic::ParseOptions opts;
    opts.pq = std::make_pair(p, q);
    return load(name, opts);
}

inline metallic::FieldElement num(const std::string &text, const metallic::MetallicParams *mp = nullptr)
{
    return metallic::parse_number(text, mp ? metallic::LiteralContext::metallic(*mp) : metallic::LiteralContext{});
}

inline metallic::Vec vec(std::initializer_list<const char *> xs)
{
    metallic::Vec v(xs.size());
    std::size_t i = 0;
    for (const char *x : xs) {
        v[i++] = num(x);
    }
    return v;
}

} // namespace testing_support

#endif
