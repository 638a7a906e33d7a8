#ifndef METALLIC_LINALG_HPP
#define METALLIC_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace metallic {

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : e_(n) {}
    Vec(std::initializer_list<FieldElement> init) : e_(init) {}
    explicit Vec(std::vector<FieldElement> e) : e_(std::move(e)) {}

    static Vec unit(std::size_t n, std::size_t i)
    {
        Vec v(n);
        v[i] = FieldElement(1);
        return v;
    }

    std::size_t size() const noexcept { return e_.size(); }
    FieldElement &operator[](std::size_t i) { return e_[i]; }
    const FieldElement &operator[](std::size_t i) const { return e_[i]; }
    const std::vector<FieldElement> &entries() const noexcept { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool is_zero() const
    {
        for (const auto &x : e_) {
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }

    Vec &operator+=(const Vec &o)
    {
        check(o);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            e_[i] += o.e_[i];
        }
        return *this;
    }
    Vec &operator-=(const Vec &o)
    {
        check(o);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            e_[i] -= o.e_[i];
        }
        return *this;
    }
    Vec &operator*=(const FieldElement &s)
    {
        for (auto &x : e_) {
            x *= s;
        }
        return *this;
    }

    friend Vec operator+(Vec a, const Vec &b) { return a += b; }
    friend Vec operator-(Vec a, const Vec &b) { return a -= b; }
    friend Vec operator-(Vec a)
    {
        for (auto &x : a.e_) {
            x = -x;
        }
        return a;
    }
    friend Vec operator*(const FieldElement &s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, const FieldElement &s) { return a *= s; }
    friend bool operator==(const Vec &a, const Vec &b) { return a.e_ == b.e_; }

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            out += (i ? ", " : "") + e_[i].to_string();
        }
        return out + ")";
    }

private:
    std::vector<FieldElement> e_;

    void check(const Vec &o) const
    {
        if (o.size() != size()) {
            throw dimension_mismatch("vector lengths " + std::to_string(size()) + " and " + std::to_string(o.size()));
        }
    }
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(std::size_t n)
    {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = FieldElement(1);
        }
        return m;
    }
    static Mat diagonal(const std::vector<FieldElement> &d)
    {
        Mat m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            m(i, i) = d[i];
        }
        return m;
    }
    static Mat from_rows(const std::vector<std::vector<FieldElement>> &rows)
    {
        Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw dimension_mismatch("ragged matrix rows");
            }
            for (std::size_t j = 0; j < m.cols_; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }
    // Columns are the given vectors; an empty list with explicit height n gives n x 0.
    static Mat from_columns(const std::vector<Vec> &cols, std::size_t n = 0)
    {
        const std::size_t rows = cols.empty() ? n : cols[0].size();
        Mat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) {
                throw dimension_mismatch("column lengths differ");
            }
            for (std::size_t i = 0; i < rows; ++i) {
                m(i, j) = cols[j][i];
            }
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement &operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const FieldElement &operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const
    {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            v[j] = (*this)(i, j);
        }
        return v;
    }
    Vec col(std::size_t j) const
    {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            v[i] = (*this)(i, j);
        }
        return v;
    }

    Mat transpose() const
    {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    bool is_zero() const
    {
        for (const auto &x : e_) {
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend Vec operator*(const Mat &m, const Vec &v)
    {
        if (m.cols_ != v.size()) {
            throw dimension_mismatch("matrix-vector shape mismatch");
        }
        Vec out(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i) {
            FieldElement acc;
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (!m(i, j).is_zero() && !v[j].is_zero()) {
                    acc += m(i, j) * v[j];
                }
            }
            out[i] = acc;
        }
        return out;
    }
    friend Mat operator*(const Mat &a, const Mat &b)
    {
        if (a.cols_ != b.rows_) {
            throw dimension_mismatch("matrix product shape mismatch");
        }
        Mat out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!b(k, j).is_zero()) {
                        out(i, j) += a(i, k) * b(k, j);
                    }
                }
            }
        }
        return out;
    }
    friend Mat operator+(Mat a, const Mat &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw dimension_mismatch("matrix sum shape mismatch");
        }
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            a.e_[i] += b.e_[i];
        }
        return a;
    }
    friend Mat operator-(Mat a, const Mat &b) { return a + (FieldElement(-1) * b); }
    friend Mat operator*(const FieldElement &s, Mat a)
    {
        for (auto &x : a.e_) {
            x *= s;
        }
        return a;
    }
    friend bool operator==(const Mat &a, const Mat &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> e_;
};

// Diagonal metric eps_i in {-1, +1}. Index 0 is allowed so that definite
// metrics can serve as test ambients.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<int> eps) : eps_(std::move(eps))
    {
        for (int e : eps_) {
            if (e != 1 && e != -1) {
                throw std::invalid_argument("signature entries must be +1 or -1");
            }
        }
    }
    static Signature parse(const std::string &text)
    {
        std::vector<int> eps;
        for (char c : text) {
            if (c == '-') {
                eps.push_back(-1);
            } else if (c == '+') {
                eps.push_back(1);
            } else if (c != ',' && c != ' ' && c != '\t') {
                throw parse_error(std::string("unexpected character '") + c + "' in signature");
            }
        }
        return Signature(std::move(eps));
    }

    std::size_t size() const noexcept { return eps_.size(); }
    int operator[](std::size_t i) const { return eps_[i]; }
    const std::vector<int> &eps() const noexcept { return eps_; }
    std::size_t index() const
    {
        std::size_t k = 0;
        for (int e : eps_) {
            k += e < 0 ? 1 : 0;
        }
        return k;
    }
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < eps_.size(); ++i) {
            out += (i ? "," : "") + std::string(eps_[i] < 0 ? "-" : "+");
        }
        return out;
    }
    friend bool operator==(const Signature &, const Signature &) = default;

private:
    std::vector<int> eps_;
};

inline FieldElement inner(const Vec &u, const Vec &v, const Signature &s)
{
    if (u.size() != v.size() || u.size() != s.size()) {
        throw dimension_mismatch("inner product of lengths " + std::to_string(u.size()) + ", " +
                                 std::to_string(v.size()) + " under signature of length " + std::to_string(s.size()));
    }
    FieldElement acc;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() || v[i].is_zero()) {
            continue;
        }
        if (s[i] > 0) {
            acc += u[i] * v[i];
        } else {
            acc -= u[i] * v[i];
        }
    }
    return acc;
}

inline Mat gram(const std::vector<Vec> &frame, const Signature &s)
{
    Mat g(frame.size(), frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        for (std::size_t j = i; j < frame.size(); ++j) {
            g(i, j) = inner(frame[i], frame[j], s);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

struct Echelon {
    Mat rref;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row, increasing
};

// Reduced row echelon form. Elimination is fraction-free (Bareiss): each
// update is (p*a_ij - a_ik*a_pj) / p_prev, and the only per-row divisions
// happen during the final normalization. Pivots are searched only among the
// first pivot_limit columns; the pivot of a column is the first nonzero entry
// at or below the current row.
inline Echelon row_reduce(Mat m, std::size_t pivot_limit = static_cast<std::size_t>(-1))
{
    const std::size_t rows = m.rows(), cols = m.cols();
    pivot_limit = std::min(pivot_limit, cols);
    std::vector<std::size_t> pivots;
    FieldElement prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const FieldElement piv = m(r, c);
        const FieldElement prev_inv = prev.inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            const FieldElement a = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                FieldElement v = piv * m(i, j);
                if (!a.is_zero() && !m(r, j).is_zero()) {
                    v -= a * m(r, j);
                }
                m(i, j) = prev.is_rational() && prev == FieldElement(1) ? v : v * prev_inv;
            }
        }
        // Rows above the pivot row keep their old scale; only subsequent rows are updated.
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    // Final normalization and back-substitution.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        const FieldElement inv = m(k, c).inverse();
        for (std::size_t j = c; j < cols; ++j) {
            if (!m(k, j).is_zero()) {
                m(k, j) *= inv;
            }
        }
        for (std::size_t i = 0; i < k; ++i) {
            const FieldElement a = m(i, c);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(k, j).is_zero()) {
                    m(i, j) -= a * m(k, j);
                }
            }
        }
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat &m) { return row_reduce(m).pivots.size(); }

// Right kernel basis; each vector has its first nonzero coordinate equal to 1.
inline std::vector<Vec> null_space(const Mat &m)
{
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) {
        is_pivot[c] = true;
    }
    std::vector<Vec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vec v(m.cols());
        v[f] = FieldElement(1);
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            v[e.pivots[k]] = -e.rref(k, f);
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) {
                if (v[i] != FieldElement(1)) {
                    v *= v[i].inverse();
                }
                break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Thrown when M x = rhs is inconsistent; certificate y has y^T M = 0, y^T rhs != 0.
class no_solution : public error {
public:
    explicit no_solution(Vec certificate) : error("linear system has no solution"), certificate_(std::move(certificate)) {}
    const Vec &certificate() const noexcept { return certificate_; }

private:
    Vec certificate_;
};

// Solution with free variables set to zero, or nullopt with a certificate.
inline std::optional<Vec> try_solve(const Mat &m, const Vec &rhs, Vec *certificate = nullptr)
{
    if (rhs.size() != m.rows()) {
        throw dimension_mismatch("right-hand side length does not match row count");
    }
    const std::size_t rows = m.rows(), cols = m.cols();
    Mat aug(rows, cols + 1 + rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, cols) = rhs[i];
        aug(i, cols + 1 + i) = FieldElement(1);
    }
    const Echelon e = row_reduce(std::move(aug), cols);
    for (std::size_t i = e.pivots.size(); i < rows; ++i) {
        if (!e.rref(i, cols).is_zero()) {
            if (certificate != nullptr) {
                Vec y(rows);
                for (std::size_t k = 0; k < rows; ++k) {
                    y[k] = e.rref(i, cols + 1 + k);
                }
                *certificate = std::move(y);
            }
            return std::nullopt;
        }
    }
    Vec x(cols);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        x[e.pivots[k]] = e.rref(k, cols);
    }
    return x;
}

inline Vec solve(const Mat &m, const Vec &rhs)
{
    Vec cert;
    auto x = try_solve(m, rhs, &cert);
    if (!x) {
        throw no_solution(std::move(cert));
    }
    return std::move(*x);
}

inline Mat inverse(const Mat &m)
{
    if (m.rows() != m.cols()) {
        throw dimension_mismatch("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = FieldElement(1);
    }
    const Echelon e = row_reduce(std::move(aug), n);
    if (e.pivots.size() != n) {
        throw division_by_zero();
    }
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = e.rref(i, n + j);
        }
    }
    return inv;
}

// Exact membership of v in the span of the given vectors.
inline bool in_span(const std::vector<Vec> &basis, const Vec &v)
{
    if (v.is_zero()) {
        return true;
    }
    if (basis.empty()) {
        return false;
    }
    return try_solve(Mat::from_columns(basis), v).has_value();
}

inline bool same_span(const std::vector<Vec> &a, const std::vector<Vec> &b, std::size_t n)
{
    const std::size_t ra = a.empty() ? 0 : rank(Mat::from_columns(a));
    const std::size_t rb = b.empty() ? 0 : rank(Mat::from_columns(b));
    if (ra != rb) {
        return false;
    }
    std::vector<Vec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    const std::size_t rab = all.empty() ? 0 : rank(Mat::from_columns(all, n));
    return rab == ra;
}

} // namespace metallic

#endif
