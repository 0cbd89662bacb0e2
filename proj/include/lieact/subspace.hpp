#pragma once

#include <utility>
#include <vector>

#include "lieact/matrix.hpp"

namespace lieact {

// Linear subspace of Q^n held in canonical form: the basis matrix is the
// RREF of whatever spanning set built it, with zero rows dropped.  Two
// subspaces are equal iff their canonical bases are equal, which makes
// fixed-point loops (derived series, centralizers) trivial to terminate.
class Subspace {
  public:
    Subspace() = default;

    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {
        if (ambient < 0) throw DimensionError("negative ambient dimension");
    }

    static Subspace span(int ambient, const std::vector<std::vector<Rational>>& vectors) {
        for (const auto& v : vectors)
            if (static_cast<int>(v.size()) != ambient)
                throw DimensionError("spanning vector has wrong length for ambient " +
                                     std::to_string(ambient));
        Subspace s(ambient);
        if (vectors.empty()) return s;
        RrefResult rr = rref(MatrixQ::from_rows(vectors));
        MatrixQ b(rr.rank, ambient);
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < ambient; ++j) b(i, j) = rr.reduced(i, j);
        s.basis_ = std::move(b);
        return s;
    }

    static Subspace full(int ambient) {
        Subspace s(ambient);
        s.basis_ = MatrixQ::identity(ambient);
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }

    const MatrixQ& basis() const { return basis_; }
    std::vector<Rational> basis_vector(int i) const { return basis_.row(i); }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw DimensionError("membership test in wrong ambient dimension");
        if (vec_is_zero(v)) return true;
        if (dim() == 0) return false;
        // Reduce v against the RREF basis; membership iff the residue is zero.
        // The pivot of row r is its first nonzero column (entry 1 in RREF).
        std::vector<Rational> w = v;
        for (int r = 0; r < dim(); ++r) {
            int pc = 0;
            while (pc < ambient_ && basis_(r, pc) == 0) ++pc;
            if (pc == ambient_ || w[pc] == 0) continue;
            Rational f = w[pc];
            for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_(r, j);
        }
        return vec_is_zero(w);
    }

    bool contains(const Subspace& o) const {
        check_ambient(o);
        for (int i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        check_ambient(o);
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
        for (int i = 0; i < o.dim(); ++i) rows.push_back(o.basis_vector(i));
        return span(ambient_, rows);
    }

    // Intersection by the kernel trick: x = A^T u = B^T v exactly when
    // (u, v) lies in ker [A^T  -B^T].
    Subspace intersect(const Subspace& o) const {
        check_ambient(o);
        int a = dim(), b = o.dim();
        if (a == 0 || b == 0) return Subspace(ambient_);
        MatrixQ m(ambient_, a + b);
        for (int i = 0; i < ambient_; ++i) {
            for (int j = 0; j < a; ++j) m(i, j) = basis_(j, i);
            for (int j = 0; j < b; ++j) m(i, a + j) = -o.basis_(j, i);
        }
        std::vector<std::vector<Rational>> gens;
        for (const auto& k : kernel_basis(m)) {
            std::vector<Rational> x(ambient_, Rational(0));
            for (int j = 0; j < a; ++j)
                if (k[j] != 0)
                    for (int i = 0; i < ambient_; ++i) x[i] += k[j] * basis_(j, i);
            gens.push_back(std::move(x));
        }
        return span(ambient_, gens);
    }

    // Coordinates of v in this basis; nullopt when v is outside the space.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw DimensionError("coordinates in wrong ambient dimension");
        MatrixQ bt = basis_.transpose();
        MatrixQ rhs(ambient_, 1);
        for (int i = 0; i < ambient_; ++i) rhs(i, 0) = v[i];
        auto x = solve_matrix(bt, rhs);
        if (!x) return std::nullopt;
        return x->col(0);
    }

  private:
    void check_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_)
            throw DimensionError("subspace operation across ambient dimensions " +
                                 std::to_string(ambient_) + " and " +
                                 std::to_string(o.ambient_));
    }

    int ambient_ = 0;
    MatrixQ basis_;
};

// Kernel of a matrix as a canonical subspace of its column space domain.
inline Subspace kernel_subspace(const MatrixQ& m) {
    return Subspace::span(m.cols(), kernel_basis(m));
}

}  // namespace lieact
