#ifndef METALLIC_SPEC_FILE_HPP
#define METALLIC_SPEC_FILE_HPP

// Sectioned plain-text manifold description.
//
//   [ambient]        dim, signature, signature_as_stated (optional), p, q,
//                    J = diag: a, b, ...   or   J = matrix: a, b; c, d
//   [eta]            components = c1, ..., cn   (polynomials in the parameters)
//   [embedding]      params = t1, ..., tm ; components = ...
//   [frames.rad]     name = (c1, ..., cm)        tangent fields in parameter coordinates
//   [frames.screen]  same
//   [frames.b]       names of screen fields, or tuples
//   [frames.bperp]   same
//   [frames.str]     name = (c1, ..., cn)        ambient fields along the embedding
//   [frames.ltr]     optional, same
//   [points]         one tuple per line
//   [expect]         key = value claims checked after the run
//
// '#' starts a comment. Literals follow the polynomial grammar, with sigma, p, q bound.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ambient.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "literal.hpp"
#include "numeric.hpp"
#include "submanifold.hpp"
#include "symbolic.hpp"

namespace metallic {

struct Expectation {
    std::string key;
    std::string value;
    int line = 0;
};

struct ParseOptions {
    bool signature_as_stated = false;
    std::optional<std::pair<long, long>> pq;
    std::optional<std::string> eta;    // component list, or "0"
    std::optional<std::string> points; // tuples separated by ';'
};

struct ManifoldSpec {
    std::string source;
    AmbientSpace space;
    SubmanifoldSpec sub;
    std::vector<Expectation> expects;
    Signature corrected;                // signature from the file
    std::optional<Signature> as_stated; // alternative stated signature, when given
    bool using_stated = false;
};

namespace detail {

struct Entry {
    std::string key, value;
    int line = 0, col = 0; // position of the value
};

struct RawSection {
    std::string name;
    int line = 0;
    std::vector<Entry> entries;
};

inline std::string trim(const std::string &s, std::size_t *lead = nullptr)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    if (lead) {
        *lead = a;
    }
    return s.substr(a, b - a);
}

inline std::vector<RawSection> split_sections(const std::string &text)
{
    std::vector<RawSection> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::size_t lead = 0;
        const std::string t = trim(line, &lead);
        if (t.empty()) {
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw parse_error("unterminated section header", lineno, static_cast<int>(lead + 1));
            }
            out.push_back({trim(t.substr(1, t.size() - 2)), lineno, {}});
            continue;
        }
        if (out.empty()) {
            throw parse_error("content before the first section", lineno, static_cast<int>(lead + 1));
        }
        Entry e;
        e.line = lineno;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            e.value = t;
            e.col = static_cast<int>(lead + 1);
        } else {
            e.key = trim(line.substr(0, eq));
            std::size_t vlead = 0;
            e.value = trim(line.substr(eq + 1), &vlead);
            e.col = static_cast<int>(eq + 1 + vlead + 1);
            if (e.key.empty()) {
                throw parse_error("missing key before '='", lineno, static_cast<int>(lead + 1));
            }
        }
        out.back().entries.push_back(std::move(e));
    }
    return out;
}

// Splits on a separator at parenthesis depth 0, keeping the column of each piece.
inline std::vector<std::pair<std::string, int>> split_top(const std::string &s, char sep, int col0)
{
    std::vector<std::pair<std::string, int>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == sep && depth == 0)) {
            std::size_t lead = 0;
            std::string piece = trim(s.substr(start, i - start), &lead);
            out.emplace_back(piece, col0 + static_cast<int>(start + lead));
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    return out;
}

inline std::pair<std::string, int> strip_parens(const std::string &s, int col, int line)
{
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        throw parse_error("expected a parenthesised tuple", line, col);
    }
    return {s.substr(1, s.size() - 2), col + 1};
}

class Builder {
public:
    explicit Builder(const ParseOptions &opts) : opts_(opts) {}

    ManifoldSpec build(const std::vector<RawSection> &sections)
    {
        for (const auto &s : sections) {
            if (by_name_.count(s.name)) {
                throw parse_error("duplicate section [" + s.name + "]", s.line, 1);
            }
            static const char *known[] = {"ambient",       "eta",       "embedding",  "frames.rad",
                                          "frames.screen", "frames.b",  "frames.bperp", "frames.str",
                                          "frames.ltr",    "points",    "expect"};
            bool ok = false;
            for (const char *k : known) {
                ok = ok || s.name == k;
            }
            if (!ok) {
                throw parse_error("unknown section [" + s.name + "]", s.line, 2);
            }
            by_name_[s.name] = &s;
        }
        ManifoldSpec out;
        ambient_header(out);
        embedding(out);
        frames(out);
        eta(out);
        out.space = AmbientSpace::make(out.using_stated ? *out.as_stated : out.corrected, mp_, j_,
                                       std::move(eta_));
        points(out);
        expects(out);
        return out;
    }

private:
    const ParseOptions &opts_;
    std::map<std::string, const RawSection *> by_name_;
    MetallicParams mp_;
    LiteralContext ctx_;
    Mat j_;
    AmbField eta_;
    Poly::Vars vars_;
    std::size_t n_ = 0;

    const RawSection &require(const std::string &name)
    {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) {
            throw parse_error("missing section [" + name + "]", 0, 0);
        }
        return *it->second;
    }
    const RawSection *optional_section(const std::string &name)
    {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? nullptr : it->second;
    }
    static const Entry *find(const RawSection &s, const std::string &key)
    {
        for (const auto &e : s.entries) {
            if (e.key == key) {
                return &e;
            }
        }
        return nullptr;
    }
    static const Entry &need(const RawSection &s, const std::string &key)
    {
        const Entry *e = find(s, key);
        if (!e) {
            throw parse_error("section [" + s.name + "] needs '" + key + "'", s.line, 1);
        }
        return *e;
    }
    static long integer(const Entry &e)
    {
        try {
            std::size_t used = 0;
            const long v = std::stol(e.value, &used);
            if (used != e.value.size()) {
                throw std::invalid_argument("trailing");
            }
            return v;
        } catch (const std::exception &) {
            throw parse_error("expected an integer for '" + e.key + "'", e.line, e.col);
        }
    }
    static Signature signature(const Entry &e)
    {
        try {
            return Signature::parse(e.value);
        } catch (const error &x) {
            throw parse_error(x.what(), e.line, e.col);
        }
    }

    void ambient_header(ManifoldSpec &out)
    {
        const RawSection &a = require("ambient");
        for (const auto &e : a.entries) {
            static const char *keys[] = {"dim", "signature", "signature_as_stated", "p", "q", "J"};
            bool ok = false;
            for (const char *k : keys) {
                ok = ok || e.key == k;
            }
            if (!ok) {
                throw parse_error("unknown key '" + e.key + "' in [ambient]", e.line, 1);
            }
        }
        const Entry &dim = need(a, "dim");
        const long d = integer(dim);
        if (d < 1) {
            throw parse_error("dimension must be positive", dim.line, dim.col);
        }
        n_ = static_cast<std::size_t>(d);
        const Entry &sig = need(a, "signature");
        out.corrected = signature(sig);
        if (out.corrected.size() != n_) {
            throw parse_error("signature length differs from dim", sig.line, sig.col);
        }
        if (const Entry *st = find(a, "signature_as_stated")) {
            out.as_stated = signature(*st);
            if (out.as_stated->size() != n_) {
                throw parse_error("signature length differs from dim", st->line, st->col);
            }
        }
        if (opts_.signature_as_stated) {
            if (!out.as_stated) {
                throw parse_error("spec has no signature_as_stated entry", a.line, 1);
            }
            out.using_stated = true;
        }
        long p = integer(need(a, "p")), q = integer(need(a, "q"));
        if (opts_.pq) {
            p = opts_.pq->first;
            q = opts_.pq->second;
        }
        if (p < 1 || q < 1) {
            throw parse_error("metallic parameters must be positive integers", need(a, "p").line, 1);
        }
        mp_ = MetallicParams::make(p, q);
        ctx_ = LiteralContext::metallic(mp_);
        j_ = structure(need(a, "J"));
    }

    FieldElement number(const std::string &text, int line, int col)
    {
        return parse_number(text, ctx_, line, col);
    }

    Mat structure(const Entry &e)
    {
        const auto colon = e.value.find(':');
        if (colon == std::string::npos) {
            throw parse_error("J needs 'diag:' or 'matrix:'", e.line, e.col);
        }
        const std::string kind = trim(e.value.substr(0, colon));
        const std::string body = e.value.substr(colon + 1);
        const int col = e.col + static_cast<int>(colon) + 1;
        if (kind == "diag") {
            std::vector<FieldElement> d;
            for (const auto &[t, c] : split_top(body, ',', col)) {
                d.push_back(number(t, e.line, c));
            }
            if (d.size() != n_) {
                throw parse_error("diag has " + std::to_string(d.size()) + " entries, expected " + std::to_string(n_),
                                  e.line, e.col);
            }
            return Mat::diagonal(d);
        }
        if (kind == "matrix") {
            std::vector<std::vector<FieldElement>> rows;
            for (const auto &[r, rc] : split_top(body, ';', col)) {
                std::vector<FieldElement> row;
                for (const auto &[t, c] : split_top(r, ',', rc)) {
                    row.push_back(number(t, e.line, c));
                }
                if (row.size() != n_) {
                    throw parse_error("matrix row has the wrong length", e.line, rc);
                }
                rows.push_back(std::move(row));
            }
            if (rows.size() != n_) {
                throw parse_error("matrix has the wrong number of rows", e.line, e.col);
            }
            return Mat::from_rows(rows);
        }
        throw parse_error("unknown structure form '" + kind + "'", e.line, e.col);
    }

    std::vector<Poly> poly_list(const std::string &text, int line, int col)
    {
        std::vector<Poly> out;
        for (const auto &[t, c] : split_top(text, ',', col)) {
            if (t.empty()) {
                throw parse_error("empty component", line, c);
            }
            out.push_back(parse_poly(t, vars_, ctx_, line, c));
        }
        return out;
    }

    void embedding(ManifoldSpec &out)
    {
        const RawSection &s = require("embedding");
        const Entry &params = need(s, "params");
        std::vector<std::string> names;
        for (const auto &[t, c] : split_top(params.value, ',', params.col)) {
            if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_')) {
                throw parse_error("bad parameter name", params.line, c);
            }
            names.push_back(t);
        }
        vars_ = Poly::make_vars(names);
        const Entry &comp = need(s, "components");
        out.sub.embedding.params = vars_;
        out.sub.embedding.components = poly_list(comp.value, comp.line, comp.col);
        if (out.sub.embedding.components.size() != n_) {
            throw parse_error("embedding has " + std::to_string(out.sub.embedding.components.size()) +
                                  " components, expected " + std::to_string(n_),
                              comp.line, comp.col);
        }
    }

    template <class Field>
    Field tuple_field(const Entry &e, std::size_t len)
    {
        auto [inner_text, col] = strip_parens(e.value, e.col, e.line);
        Field f(PolyVector(poly_list(inner_text, e.line, col)));
        if (f.size() != len) {
            throw parse_error("field '" + e.key + "' has " + std::to_string(f.size()) + " components, expected " +
                                  std::to_string(len),
                              e.line, e.col);
        }
        return f;
    }

    std::vector<NamedParamField> param_frame(const std::string &section, const std::vector<NamedParamField> *lookup)
    {
        std::vector<NamedParamField> out;
        const RawSection *s = optional_section(section);
        if (!s) {
            return out;
        }
        for (const auto &e : s->entries) {
            if (e.key.empty()) {
                // bare name: reference to a screen field
                const NamedParamField *hit = nullptr;
                if (lookup) {
                    for (const auto &f : *lookup) {
                        if (f.name == e.value) {
                            hit = &f;
                        }
                    }
                }
                if (!hit) {
                    throw parse_error("unknown field '" + e.value + "'", e.line, e.col);
                }
                out.push_back(*hit);
            } else {
                out.push_back({e.key, tuple_field<ParamField>(e, vars_->size())});
            }
        }
        return out;
    }

    std::vector<NamedAmbField> amb_frame(const std::string &section)
    {
        std::vector<NamedAmbField> out;
        if (const RawSection *s = optional_section(section)) {
            for (const auto &e : s->entries) {
                if (e.key.empty()) {
                    throw parse_error("expected 'name = (...)'", e.line, e.col);
                }
                out.push_back({e.key, tuple_field<AmbField>(e, n_)});
            }
        }
        return out;
    }

    void frames(ManifoldSpec &out)
    {
        require("frames.rad");
        require("frames.screen");
        out.sub.rad = param_frame("frames.rad", nullptr);
        out.sub.screen = param_frame("frames.screen", nullptr);
        out.sub.b = param_frame("frames.b", &out.sub.screen);
        out.sub.bperp = param_frame("frames.bperp", &out.sub.screen);
        out.sub.str = amb_frame("frames.str");
        out.sub.ltr = amb_frame("frames.ltr");
    }

    AmbField eta_from(const std::string &text, int line, int col)
    {
        if (trim(text) == "0") {
            return {};
        }
        AmbField f(PolyVector(poly_list(text, line, col)));
        if (f.size() != n_) {
            throw parse_error("eta has " + std::to_string(f.size()) + " components, expected " + std::to_string(n_),
                              line, col);
        }
        return f;
    }

    void eta(ManifoldSpec &)
    {
        if (opts_.eta) {
            eta_ = eta_from(*opts_.eta, 0, 1);
            return;
        }
        if (const RawSection *s = optional_section("eta")) {
            const Entry &e = need(*s, "components");
            eta_ = eta_from(e.value, e.line, e.col);
        }
    }

    Point point_tuple(const std::string &text, int line, int col)
    {
        auto [inner_text, c0] = strip_parens(text, col, line);
        Point p;
        for (const auto &[t, c] : split_top(inner_text, ',', c0)) {
            p.push_back(number(t, line, c));
        }
        if (p.size() != vars_->size()) {
            throw parse_error("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                  std::to_string(vars_->size()),
                              line, col);
        }
        return p;
    }

    void points(ManifoldSpec &out)
    {
        if (opts_.points) {
            for (const auto &[t, c] : split_top(*opts_.points, ';', 1)) {
                if (!t.empty()) {
                    out.sub.points.push_back(point_tuple(t, 0, c));
                }
            }
        } else {
            const RawSection &s = require("points");
            for (const auto &e : s.entries) {
                if (!e.key.empty()) {
                    throw parse_error("expected a point tuple", e.line, e.col);
                }
                out.sub.points.push_back(point_tuple(e.value, e.line, e.col));
            }
        }
        if (out.sub.points.empty()) {
            throw parse_error("no sample points", 0, 0);
        }
    }

    void expects(ManifoldSpec &out)
    {
        if (const RawSection *s = optional_section("expect")) {
            for (const auto &e : s->entries) {
                if (e.key.empty()) {
                    throw parse_error("expected 'key = value'", e.line, e.col);
                }
                out.expects.push_back({e.key, e.value, e.line});
            }
        }
    }
};

} // namespace detail

inline ManifoldSpec parse_spec_text(const std::string &text, const ParseOptions &opts = {})
{
    ManifoldSpec out = detail::Builder(opts).build(detail::split_sections(text));
    out.source = text;
    return out;
}

inline ManifoldSpec parse_spec(const std::string &path, const ParseOptions &opts = {})
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw parse_error("cannot read '" + path + "'", 0, 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), opts);
}

} // namespace metallic

#endif
