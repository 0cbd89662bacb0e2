#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieact/rational.hpp"

namespace lieact {

// Dense rational matrix, row major.  Everything in the library that has to
// be exact funnels through this type, so it favors clarity over asymptotic
// tricks; dimensions stay small (a few hundred at most, for derivation
// algebras of the largest catalog entries).
class MatrixQ {
  public:
    MatrixQ() = default;
    MatrixQ(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }

    static MatrixQ identity(int n) {
        MatrixQ m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        MatrixQ m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw DimensionError("ragged row list");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static MatrixQ from_columns(const std::vector<std::vector<Rational>>& cols) {
        int c = static_cast<int>(cols.size());
        int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
        MatrixQ m(r, c);
        for (int j = 0; j < c; ++j) {
            if (static_cast<int>(cols[j].size()) != r)
                throw DimensionError("ragged column list");
            for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[idx(i, j)]; }
    const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }

    std::vector<Rational> row(int i) const {
        std::vector<Rational> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<Rational> col(int j) const {
        std::vector<Rational> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool operator==(const MatrixQ& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const MatrixQ& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    MatrixQ operator+(const MatrixQ& o) const {
        check_same_shape(o, "+");
        MatrixQ r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    MatrixQ operator-(const MatrixQ& o) const {
        check_same_shape(o, "-");
        MatrixQ r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    MatrixQ operator*(const MatrixQ& o) const {
        if (cols_ != o.rows_)
            throw DimensionError("matrix product shape mismatch: " + shape_str() +
                                 " * " + o.shape_str());
        MatrixQ r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j) == 0) continue;
                    r(i, j) += aik * o(k, j);
                }
            }
        return r;
    }

    MatrixQ scaled(const Rational& s) const {
        MatrixQ r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = s * a_[k];
        return r;
    }

    MatrixQ transpose() const {
        MatrixQ r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
        Rational t = 0;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw DimensionError("matrix-vector shape mismatch");
        std::vector<Rational> r(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

  private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw DimensionError("matrix index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    void check_same_shape(const MatrixQ& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError(std::string("matrix ") + op + " shape mismatch: " +
                                 shape_str() + " vs " + o.shape_str());
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    MatrixQ reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Reduced row echelon form by straightforward Gauss-Jordan.  Pivot choice is
// the first nonzero entry in the column, which keeps the result deterministic
// across platforms.
inline RrefResult rref(MatrixQ m) {
    RrefResult out;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

inline int rank_of(const MatrixQ& m) { return rref(m).rank; }

// Basis of the right kernel {x : m x = 0}, one vector per free column.  The
// basis produced by the standard back-substitution recipe: free column j
// yields the vector with x_j = 1 and x_pivot = -R[row, j].
inline std::vector<std::vector<Rational>> kernel_basis(const MatrixQ& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[j] = 1;
        for (int r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.reduced(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Determinant by fraction-tracking Gaussian elimination.
inline Rational det(MatrixQ m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    int n = m.rows();
    Rational d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Rational inv = Rational(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::optional<MatrixQ> inverse(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    int n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
    MatrixQ inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

// Solves A X = B column by column; nullopt if any column is inconsistent.
// When the solution is not unique this returns the one with free variables
// set to zero, which is all the callers need.
inline std::optional<MatrixQ> solve_matrix(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve shape mismatch");
    int n = a.rows(), m = a.cols(), k = b.cols();
    MatrixQ aug(n, m + k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < k; ++j) aug(i, m + j) = b(i, j);
    }
    RrefResult rr = rref(aug);
    // A pivot in the right block means some column of B is outside col(A).
    for (int c : rr.pivot_cols)
        if (c >= m) return std::nullopt;
    MatrixQ x(m, k);
    for (int r = 0; r < rr.rank; ++r)
        for (int j = 0; j < k; ++j) x(rr.pivot_cols[r], j) = rr.reduced(r, m + j);
    return x;
}

// Characteristic polynomial det(tI - m) via the Faddeev-LeVerrier recurrence.
// Returned low degree first: coeffs[k] multiplies t^k, coeffs[n] == 1.
inline std::vector<Rational> charpoly(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw DimensionError("charpoly of non-square matrix");
    int n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    MatrixQ mk(n, n);   // running product, starts at zero
    for (int k = 1; k <= n; ++k) {
        // M_k = m (M_{k-1} + c_{n-k+1} I)
        for (int i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        mk = m * mk;
        c[n - k] = -mk.trace() / k;
    }
    return c;
}

inline std::vector<Rational> vec_sub(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw DimensionError("vector subtraction length mismatch");
    std::vector<Rational> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline std::vector<Rational> vec_add(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw DimensionError("vector addition length mismatch");
    std::vector<Rational> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline std::vector<Rational> vec_scale(const Rational& s, const std::vector<Rational>& a) {
    std::vector<Rational> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline bool vec_is_zero(const std::vector<Rational>& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// Row-major flattening of a matrix, used when treating operator spaces as
// plain vector spaces (derivation algebras, representation span checks).
inline std::vector<Rational> vectorize(const MatrixQ& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

inline MatrixQ devectorize(const std::vector<Rational>& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols)
        throw DimensionError("devectorize length mismatch");
    MatrixQ m(rows, cols);
    std::size_t k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = v[k++];
    return m;
}

}  // namespace lieact
