#pragma once

#include <vector>

#include "lieact/lie_algebra.hpp"

namespace lieact {

struct SeriesResult {
    std::vector<Subspace> terms;
    std::vector<int> dims;
    bool reaches_zero = false;
    // For the derived series: the least k with g^(k) = 0 (so abelian gives 1).
    // For the lower central series: the largest k with g_k != 0 (class).
    // Meaningful only when reaches_zero; -1 otherwise.
    int length = -1;
};

// g^(0) = g, g^(k+1) = [g^(k), g^(k)], computed until it stabilizes.
inline SeriesResult derived_series(const LieAlgebra& L) {
    SeriesResult out;
    Subspace cur = Subspace::full(L.dim);
    out.terms.push_back(cur);
    out.dims.push_back(cur.dim());
    while (true) {
        Subspace next = bracket_span(L, cur, cur);
        if (next == cur) break;
        cur = next;
        out.terms.push_back(cur);
        out.dims.push_back(cur.dim());
        if (cur.is_zero()) break;
    }
    out.reaches_zero = out.terms.back().is_zero();
    if (out.reaches_zero) out.length = static_cast<int>(out.terms.size()) - 1;
    return out;
}

// g_1 = g, g_{k+1} = [g, g_k].
inline SeriesResult lower_central_series(const LieAlgebra& L) {
    SeriesResult out;
    Subspace full = Subspace::full(L.dim);
    Subspace cur = full;
    out.terms.push_back(cur);
    out.dims.push_back(cur.dim());
    while (true) {
        Subspace next = bracket_span(L, full, cur);
        if (next == cur) break;
        cur = next;
        out.terms.push_back(cur);
        out.dims.push_back(cur.dim());
        if (cur.is_zero()) break;
    }
    out.reaches_zero = out.terms.back().is_zero();
    if (out.reaches_zero) out.length = static_cast<int>(out.terms.size()) - 1;
    return out;
}

inline bool is_solvable(const LieAlgebra& L) { return derived_series(L).reaches_zero; }
inline bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).reaches_zero; }
inline bool is_abelian(const LieAlgebra& L) { return L.constants.empty(); }

// Least k with g^(k) = 0; 0 for the zero algebra, 1 for nonzero abelian.
inline int derived_length(const LieAlgebra& L) {
    SeriesResult s = derived_series(L);
    if (!s.reaches_zero) throw Error("derived length of a non-solvable algebra");
    return s.length;
}

// Largest k with g_k != 0; 0 for the zero algebra, 1 for nonzero abelian.
inline int nilpotency_class(const LieAlgebra& L) {
    SeriesResult s = lower_central_series(L);
    if (!s.reaches_zero) throw Error("nilpotency class of a non-nilpotent algebra");
    if (L.dim == 0) return 0;
    return s.length;
}

// x is central iff ad(e_j) x = 0 for every j; stack and take the kernel.
inline Subspace center(const LieAlgebra& L) {
    if (L.dim == 0) return Subspace(0);
    MatrixQ stacked(L.dim * L.dim, L.dim);
    for (int j = 0; j < L.dim; ++j) {
        MatrixQ adj = ad_matrix(L, basis_vector_of(L, j));
        for (int r = 0; r < L.dim; ++r)
            for (int c = 0; c < L.dim; ++c) stacked(j * L.dim + r, c) = adj(r, c);
    }
    return kernel_subspace(stacked);
}

inline Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(L.dim);
    MatrixQ stacked(s.dim() * L.dim, L.dim);
    for (int j = 0; j < s.dim(); ++j) {
        MatrixQ adj = ad_matrix(L, s.basis_vector(j));
        for (int r = 0; r < L.dim; ++r)
            for (int c = 0; c < L.dim; ++c) stacked(j * L.dim + r, c) = adj(r, c);
    }
    return kernel_subspace(stacked);
}

inline MatrixQ killing_form(const LieAlgebra& L) {
    std::vector<MatrixQ> ads;
    ads.reserve(L.dim);
    for (int i = 0; i < L.dim; ++i) ads.push_back(ad_matrix(L, basis_vector_of(L, i)));
    MatrixQ k(L.dim, L.dim);
    for (int i = 0; i < L.dim; ++i)
        for (int j = i; j < L.dim; ++j) {
            Rational t = (ads[i] * ads[j]).trace();
            k(i, j) = t;
            k(j, i) = t;
        }
    return k;
}

inline bool is_semisimple(const LieAlgebra& L) {
    if (L.dim == 0) return true;
    return det(killing_form(L)) != 0;
}

// All derivations D: D[x,y] = [Dx,y] + [x,Dy], as a basis of matrices.
// Unknowns are the n^2 entries of D (row-major); one linear equation per
// basis pair (i<j) and output coordinate r.
inline std::vector<MatrixQ> derivation_algebra(const LieAlgebra& L) {
    int n = L.dim;
    if (n == 0) return {};
    std::vector<std::vector<std::vector<Rational>>> br(n);
    for (int i = 0; i < n; ++i) {
        br[i].resize(n);
        for (int j = 0; j < n; ++j) br[i][j] = bracket_basis(L, i, j);
    }
    int pairs = n * (n - 1) / 2;
    MatrixQ sys(pairs * n, n * n);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::vector<Rational>& cij = br[i][j];
            for (int r = 0; r < n; ++r) {
                // D[e_i,e_j] term: sum_s D_{r,s} c_s
                for (int s = 0; s < n; ++s)
                    if (cij[s] != 0) sys(row, r * n + s) += cij[s];
                // -[D e_i, e_j]: D e_i = sum_s D_{s,i} e_s
                for (int s = 0; s < n; ++s)
                    if (br[s][j][r] != 0) sys(row, s * n + i) -= br[s][j][r];
                // -[e_i, D e_j]
                for (int s = 0; s < n; ++s)
                    if (br[i][s][r] != 0) sys(row, s * n + j) -= br[i][s][r];
                ++row;
            }
        }
    std::vector<MatrixQ> basis;
    for (const auto& v : kernel_basis(sys)) basis.push_back(devectorize(v, n, n));
    return basis;
}

inline bool is_derivation(const LieAlgebra& L, const MatrixQ& d) {
    if (d.rows() != L.dim || d.cols() != L.dim) return false;
    for (int i = 0; i < L.dim; ++i)
        for (int j = i + 1; j < L.dim; ++j) {
            std::vector<Rational> lhs = d.apply(bracket_basis(L, i, j));
            std::vector<Rational> rhs =
                vec_add(bracket(L, d.col(i), basis_vector_of(L, j)),
                        bracket(L, basis_vector_of(L, i), d.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace lieact
