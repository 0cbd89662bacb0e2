#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieact/subspace.hpp"

namespace lieact {

// Finite-dimensional Lie algebra over Q, presented by structure constants on
// a fixed basis e_1..e_n.  Only pairs i < j are stored; antisymmetry is
// built into the accessors.  Optional extras carried along when known:
// basis labels, a faithful matrix realization, and a grading (a weight per
// basis element making the bracket additive).
struct LieAlgebra {
    int dim = 0;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> constants;
    std::vector<std::string> labels;
    std::vector<MatrixQ> rep;
    std::vector<Rational> grading;
    std::string origin;

    bool has_rep() const { return !rep.empty(); }
    bool has_grading() const { return !grading.empty(); }

    std::string basis_name(int i) const {
        if (i >= 0 && i < static_cast<int>(labels.size()) && !labels[i].empty())
            return labels[i];
        return "e" + std::to_string(i + 1);
    }
};

inline LieAlgebra make_abelian_constants(int dim) {
    LieAlgebra L;
    L.dim = dim;
    return L;
}

// Sets [e_i, e_j] for i != j (both 0-based); the mirrored pair is implied.
inline void set_bracket(LieAlgebra& L, int i, int j,
                        std::vector<std::pair<int, Rational>> coeffs) {
    if (i == j) throw Error("bracket of a basis vector with itself is zero");
    if (i < 0 || j < 0 || i >= L.dim || j >= L.dim)
        throw Error("bracket index out of range");
    bool flip = i > j;
    if (flip) std::swap(i, j);
    for (auto& [k, c] : coeffs) {
        if (k < 0 || k >= L.dim) throw Error("bracket target index out of range");
        if (flip) c = -c;
    }
    std::sort(coeffs.begin(), coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rational>> merged;
    for (auto& [k, c] : coeffs) {
        if (!merged.empty() && merged.back().first == k)
            merged.back().second += c;
        else
            merged.emplace_back(k, c);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    if (merged.empty())
        L.constants.erase({i, j});
    else
        L.constants[{i, j}] = std::move(merged);
}

// Dense coordinates of [e_i, e_j].
inline std::vector<Rational> bracket_basis(const LieAlgebra& L, int i, int j) {
    std::vector<Rational> v(L.dim, Rational(0));
    if (i == j) return v;
    Rational s = 1;
    int a = i, b = j;
    if (a > b) { std::swap(a, b); s = -1; }
    auto it = L.constants.find({a, b});
    if (it == L.constants.end()) return v;
    for (const auto& [k, c] : it->second) v[k] = s * c;
    return v;
}

inline std::vector<Rational> bracket(const LieAlgebra& L, const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) {
    if (static_cast<int>(x.size()) != L.dim || static_cast<int>(y.size()) != L.dim)
        throw DimensionError("bracket operand has wrong length");
    std::vector<Rational> v(L.dim, Rational(0));
    for (const auto& [ij, coeffs] : L.constants) {
        auto [i, j] = ij;
        Rational f = x[i] * y[j] - x[j] * y[i];
        if (f == 0) continue;
        for (const auto& [k, c] : coeffs) v[k] += f * c;
    }
    return v;
}

// Matrix of ad(x): y -> [x, y] in the defining basis.
inline MatrixQ ad_matrix(const LieAlgebra& L, const std::vector<Rational>& x) {
    MatrixQ m(L.dim, L.dim);
    std::vector<Rational> ej(L.dim, Rational(0));
    for (int j = 0; j < L.dim; ++j) {
        ej[j] = 1;
        std::vector<Rational> col = bracket(L, x, ej);
        for (int i = 0; i < L.dim; ++i) m(i, j) = col[i];
        ej[j] = 0;
    }
    return m;
}

inline std::vector<Rational> basis_vector_of(const LieAlgebra& L, int i) {
    std::vector<Rational> v(L.dim, Rational(0));
    v[i] = 1;
    return v;
}

namespace detail {

inline std::string residual_str(const LieAlgebra& L, const std::vector<Rational>& v) {
    std::string s;
    for (int k = 0; k < L.dim; ++k) {
        if (v[k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + rat_str(v[k]) + ")*" + L.basis_name(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace detail

// Checks the Jacobi identity on all basis triples, index sanity, and (when a
// matrix realization is present) that the matrices actually represent the
// bracket.  Throws ValidationError naming the first offending triple.
inline void validate(const LieAlgebra& L) {
    if (L.dim < 0) throw ValidationError("negative dimension", 0, 0, 0);
    for (const auto& [ij, coeffs] : L.constants) {
        auto [i, j] = ij;
        if (i >= j || i < 0 || j >= L.dim)
            throw ValidationError("constants stored for invalid pair (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                  i + 1, j + 1);
        for (const auto& [k, c] : coeffs) {
            if (k < 0 || k >= L.dim)
                throw ValidationError("bracket target out of range", i + 1, j + 1, k + 1);
            if (c == 0)
                throw ValidationError("explicit zero coefficient stored", i + 1, j + 1, k + 1);
        }
    }
    for (int i = 0; i < L.dim; ++i)
        for (int j = i + 1; j < L.dim; ++j)
            for (int k = j + 1; k < L.dim; ++k) {
                std::vector<Rational> jac =
                    vec_add(bracket(L, bracket_basis(L, i, j), basis_vector_of(L, k)),
                            vec_add(bracket(L, bracket_basis(L, j, k), basis_vector_of(L, i)),
                                    bracket(L, bracket_basis(L, k, i), basis_vector_of(L, j))));
                if (!vec_is_zero(jac))
                    throw ValidationError(
                        "Jacobi identity fails on (" + L.basis_name(i) + "," +
                            L.basis_name(j) + "," + L.basis_name(k) +
                            "): residual " + detail::residual_str(L, jac),
                        i + 1, j + 1, k + 1);
            }
    if (L.has_rep()) {
        if (static_cast<int>(L.rep.size()) != L.dim)
            throw ValidationError("matrix realization has wrong arity", 0, 0, 0);
        int d = L.rep.empty() ? 0 : L.rep[0].rows();
        for (const auto& m : L.rep)
            if (m.rows() != d || m.cols() != d)
                throw ValidationError("matrix realization is not square and uniform", 0, 0, 0);
        for (int i = 0; i < L.dim; ++i)
            for (int j = i + 1; j < L.dim; ++j) {
                MatrixQ lhs = L.rep[i] * L.rep[j] - L.rep[j] * L.rep[i];
                MatrixQ rhs(d, d);
                if (auto it = L.constants.find({i, j}); it != L.constants.end())
                    for (const auto& [k, c] : it->second) rhs = rhs + L.rep[k].scaled(c);
                if (lhs != rhs)
                    throw ValidationError("matrix realization disagrees with bracket on (" +
                                              L.basis_name(i) + "," + L.basis_name(j) + ")",
                                          i + 1, j + 1);
            }
    }
    if (L.has_grading()) {
        if (static_cast<int>(L.grading.size()) != L.dim)
            throw ValidationError("grading has wrong arity", 0, 0, 0);
        for (const auto& [ij, coeffs] : L.constants) {
            auto [i, j] = ij;
            for (const auto& [k, c] : coeffs) {
                (void)c;
                if (L.grading[k] != L.grading[i] + L.grading[j])
                    throw ValidationError("grading is not additive on (" +
                                              std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ")",
                                          i + 1, j + 1, k + 1);
            }
        }
    }
}

// Span of all brackets [a, b] with a in A, b in B.
inline Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    if (a.ambient() != L.dim || b.ambient() != L.dim)
        throw DimensionError("bracket_span subspaces live in the wrong ambient space");
    std::vector<std::vector<Rational>> gens;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            gens.push_back(bracket(L, a.basis_vector(i), b.basis_vector(j)));
    return Subspace::span(L.dim, gens);
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    LieAlgebra s;
    s.dim = a.dim + b.dim;
    for (const auto& [ij, coeffs] : a.constants) s.constants[ij] = coeffs;
    for (const auto& [ij, coeffs] : b.constants) {
        auto [i, j] = ij;
        std::vector<std::pair<int, Rational>> shifted;
        for (const auto& [k, c] : coeffs) shifted.emplace_back(k + a.dim, c);
        s.constants[{i + a.dim, j + a.dim}] = std::move(shifted);
    }
    if (!a.labels.empty() || !b.labels.empty()) {
        for (int i = 0; i < a.dim; ++i) s.labels.push_back(a.basis_name(i) + "'");
        for (int i = 0; i < b.dim; ++i) s.labels.push_back(b.basis_name(i) + "''");
    }
    if (a.has_rep() && b.has_rep()) {
        int da = a.rep[0].rows(), db = b.rep[0].rows();
        for (int i = 0; i < s.dim; ++i) {
            MatrixQ m(da + db, da + db);
            if (i < a.dim) {
                for (int r = 0; r < da; ++r)
                    for (int c = 0; c < da; ++c) m(r, c) = a.rep[i](r, c);
            } else {
                for (int r = 0; r < db; ++r)
                    for (int c = 0; c < db; ++c) m(da + r, da + c) = b.rep[i - a.dim](r, c);
            }
            s.rep.push_back(std::move(m));
        }
    }
    if (a.has_grading() && b.has_grading()) {
        s.grading = a.grading;
        s.grading.insert(s.grading.end(), b.grading.begin(), b.grading.end());
    }
    return s;
}

// Restriction of the bracket to a subalgebra given as a subspace.  The span
// must be closed under the bracket; the result uses the subspace's canonical
// basis and inherits a restricted matrix realization when one exists.
inline LieAlgebra subalgebra_from(const LieAlgebra& L, const Subspace& s) {
    if (s.ambient() != L.dim)
        throw DimensionError("subalgebra subspace lives in the wrong ambient space");
    LieAlgebra sub;
    sub.dim = s.dim();
    for (int i = 0; i < s.dim(); ++i)
        for (int j = i + 1; j < s.dim(); ++j) {
            std::vector<Rational> br = bracket(L, s.basis_vector(i), s.basis_vector(j));
            auto coords = s.coordinates(br);
            if (!coords)
                throw Error("span is not closed under the bracket");
            std::vector<std::pair<int, Rational>> coeffs;
            for (int k = 0; k < s.dim(); ++k)
                if ((*coords)[k] != 0) coeffs.emplace_back(k, (*coords)[k]);
            if (!coeffs.empty()) set_bracket(sub, i, j, std::move(coeffs));
        }
    if (L.has_rep()) {
        for (int i = 0; i < s.dim(); ++i) {
            MatrixQ m(L.rep[0].rows(), L.rep[0].cols());
            std::vector<Rational> v = s.basis_vector(i);
            for (int k = 0; k < L.dim; ++k)
                if (v[k] != 0) m = m + L.rep[k].scaled(v[k]);
            sub.rep.push_back(std::move(m));
        }
    }
    // A grading restricts only when the sub-basis is homogeneous; check.
    if (L.has_grading()) {
        std::vector<Rational> g;
        bool homogeneous = true;
        for (int i = 0; i < s.dim() && homogeneous; ++i) {
            std::vector<Rational> v = s.basis_vector(i);
            std::optional<Rational> w;
            for (int k = 0; k < L.dim; ++k) {
                if (v[k] == 0) continue;
                if (!w)
                    w = L.grading[k];
                else if (*w != L.grading[k])
                    homogeneous = false;
            }
            g.push_back(w ? *w : Rational(0));
        }
        if (homogeneous) sub.grading = std::move(g);
    }
    return sub;
}

}  // namespace lieact
