#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lieact/engine.hpp"
#include "lieact/errors.hpp"
#include "lieact/expr.hpp"
#include "lieact/lie_algebra.hpp"
#include "lieact/structure.hpp"

namespace lieact {

// The catalog turns expression trees into concrete Lie algebras.  Every
// atom is built from a pinned faithful matrix basis and the structure
// constants are read off the commutators, so the Jacobi identity holds by
// construction rather than by table entry.  Complex atoms are realified:
// the real dimension doubles and the basis interleaves b, i*b pairs.
//
// Pinned bases:
//   st(m,R)    E11..Emm, then strict uppers by distance then row; grading j-i
//   nt(m,R)    strict uppers by distance then row; grading j-i
//   sl(m,R)    h_i = E_ii - E_{i+1,i+1}, strict uppers, strict lowers
//              (sl(2,R) keeps the classical h, e, f labels); no grading
//   abelian(m) E_{1,j+1} inside (m+1) x (m+1); grading all 1
//   st(m,C), sl(2,C) the realifications of the above
//   strn(n)    alias, expands to derived(st(n+1,R)) x abelian(1)
//
// Parameter bounds are generous soft caps so a typo cannot ask for a
// million-dimensional algebra: st/nt m <= 24, sl m <= 12, abelian m <= 256,
// strn n <= 23.  Out-of-range parameters raise ArityError from build(), not
// from the parser, so programmatically assembled trees get the same checks.

namespace detail {

inline std::vector<std::pair<int, int>> triangular_positions(int m, bool with_diagonal) {
    std::vector<std::pair<int, int>> pos;
    if (with_diagonal)
        for (int i = 0; i < m; ++i) pos.emplace_back(i, i);
    for (int d = 1; d < m; ++d)
        for (int i = 0; i + d < m; ++i) pos.emplace_back(i, i + d);
    return pos;
}

inline MatrixQ unit_matrix(int n, int r, int c) {
    MatrixQ e(n, n);
    e(r, c) = 1;
    return e;
}

inline std::string entry_label(int m, int r, int c) {
    // Rows and columns are single digits up to m = 9; past that an
    // underscore keeps E11_2 and E1_12 distinct.
    std::string sep = m > 9 ? "_" : "";
    return "E" + std::to_string(r + 1) + sep + std::to_string(c + 1);
}

// Realification of A + iB on R^{2n} with (x, y) ~ x + iy.
inline MatrixQ realified(const MatrixQ& re, const MatrixQ& im) {
    int n = re.rows();
    MatrixQ out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out(i, j) = re(i, j);
            out(i, n + j) = -im(i, j);
            out(n + i, j) = im(i, j);
            out(n + i, n + j) = re(i, j);
        }
    return out;
}

// Coefficients of target in the span of the (independent) basis matrices.
inline std::vector<Rational> coords_in_span(const std::vector<MatrixQ>& basis,
                                            const MatrixQ& target) {
    int rows = basis.front().rows() * basis.front().cols();
    MatrixQ sys(rows, static_cast<int>(basis.size()));
    for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
        std::vector<Rational> v = vectorize(basis[c]);
        for (int r = 0; r < rows; ++r) sys(r, c) = v[r];
    }
    MatrixQ rhs(rows, 1);
    std::vector<Rational> t = vectorize(target);
    for (int r = 0; r < rows; ++r) rhs(r, 0) = t[r];
    auto x = solve_matrix(sys, rhs);
    if (!x) throw Error("catalog internal: commutator escapes the basis span");
    std::vector<Rational> out(basis.size());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) out[i] = (*x)(i, 0);
    return out;
}

inline LieAlgebra algebra_from_rep(std::vector<MatrixQ> rep,
                                   std::vector<std::string> labels,
                                   std::vector<Rational> grading) {
    int n = static_cast<int>(rep.size());
    LieAlgebra L = make_abelian_constants(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MatrixQ comm = rep[i] * rep[j] - rep[j] * rep[i];
            if (vec_is_zero(vectorize(comm))) continue;
            std::vector<Rational> co = coords_in_span(rep, comm);
            std::vector<std::pair<int, Rational>> coeffs;
            for (int k = 0; k < n; ++k)
                if (co[k] != 0) coeffs.emplace_back(k, co[k]);
            set_bracket(L, i, j, coeffs);
        }
    L.rep = std::move(rep);
    L.labels = std::move(labels);
    L.grading = std::move(grading);
    return L;
}

// Realified atom from a real matrix basis read as the complex basis: the
// real basis interleaves b_k with i*b_k so conjugate data sits adjacent.
inline LieAlgebra realify_atom(const std::vector<MatrixQ>& basis,
                               const std::vector<std::string>& labels,
                               const std::vector<Rational>& grading) {
    std::vector<MatrixQ> rep;
    std::vector<std::string> labs;
    std::vector<Rational> grad;
    MatrixQ zero(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        rep.push_back(realified(basis[k], zero));
        rep.push_back(realified(zero, basis[k]));
        labs.push_back(labels[k]);
        labs.push_back("i" + labels[k]);
        if (!grading.empty()) {
            grad.push_back(grading[k]);
            grad.push_back(grading[k]);
        }
    }
    return algebra_from_rep(std::move(rep), std::move(labs), std::move(grad));
}

inline void triangular_basis(int m, bool with_diagonal,
                             std::vector<MatrixQ>& basis,
                             std::vector<std::string>& labels,
                             std::vector<Rational>& grading) {
    for (auto [r, c] : triangular_positions(m, with_diagonal)) {
        basis.push_back(unit_matrix(m, r, c));
        labels.push_back(entry_label(m, r, c));
        grading.emplace_back(c - r);
    }
}

inline LieAlgebra build_st_or_nt(int m, bool with_diagonal, bool complex_field) {
    std::vector<MatrixQ> basis;
    std::vector<std::string> labels;
    std::vector<Rational> grading;
    triangular_basis(m, with_diagonal, basis, labels, grading);
    if (complex_field) return realify_atom(basis, labels, grading);
    return algebra_from_rep(std::move(basis), std::move(labels), std::move(grading));
}

inline void sl2_basis(std::vector<MatrixQ>& basis, std::vector<std::string>& labels) {
    MatrixQ h(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    basis = {h, unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)};
    labels = {"h", "e", "f"};
}

inline LieAlgebra build_sl_real(int m) {
    std::vector<MatrixQ> basis;
    std::vector<std::string> labels;
    if (m == 2) {
        sl2_basis(basis, labels);
        return algebra_from_rep(std::move(basis), std::move(labels), {});
    }
    for (int i = 0; i + 1 < m; ++i) {
        MatrixQ h(m, m);
        h(i, i) = 1;
        h(i + 1, i + 1) = -1;
        basis.push_back(h);
        labels.push_back("h" + std::to_string(i + 1));
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            basis.push_back(unit_matrix(m, i, j));
            labels.push_back(entry_label(m, i, j));
        }
    for (int i = 1; i < m; ++i)
        for (int j = 0; j < i; ++j) {
            basis.push_back(unit_matrix(m, i, j));
            labels.push_back(entry_label(m, i, j));
        }
    return algebra_from_rep(std::move(basis), std::move(labels), {});
}

inline LieAlgebra build_sl2_complex() {
    std::vector<MatrixQ> basis;
    std::vector<std::string> labels;
    sl2_basis(basis, labels);
    return realify_atom(basis, labels, {});
}

inline LieAlgebra build_abelian_atom(int m) {
    std::vector<MatrixQ> rep;
    std::vector<std::string> labels;
    std::vector<Rational> grading(m, Rational(1));
    for (int j = 0; j < m; ++j) {
        rep.push_back(unit_matrix(m + 1, 0, j + 1));
        labels.push_back("a" + std::to_string(j + 1));
    }
    return algebra_from_rep(std::move(rep), std::move(labels), std::move(grading));
}

inline LieAlgebra build_derived(const LieAlgebra& g) {
    SeriesResult ds = derived_series(g);
    const Subspace& d = ds.terms.size() >= 2 ? ds.terms[1] : ds.terms.back();
    return subalgebra_from(g, d);
}

inline void require_param(bool ok, const std::string& msg) {
    if (!ok) throw ArityError(msg, 0);
}

inline LieAlgebra build_atom(const AlgebraExpr& e) {
    const std::string& f = e.name;
    int m = e.param;
    if (f == "st") {
        require_param(m >= 1, "st(m) needs m >= 1");
        require_param(m <= 24, "st(m) is capped at m <= 24");
        return build_st_or_nt(m, true, e.complex_field);
    }
    if (f == "nt") {
        require_param(!e.complex_field, "nt is defined over R only");
        require_param(m >= 2, "nt(m) needs m >= 2");
        require_param(m <= 24, "nt(m) is capped at m <= 24");
        return build_st_or_nt(m, false, false);
    }
    if (f == "sl") {
        if (e.complex_field) {
            require_param(m == 2, "sl(m,C) is in the catalog only for m = 2");
            return build_sl2_complex();
        }
        require_param(m >= 2, "sl(m,R) needs m >= 2; sl(1,R) is the zero algebra");
        require_param(m <= 12, "sl(m,R) is capped at m <= 12");
        return build_sl_real(m);
    }
    if (f == "abelian") {
        require_param(m >= 1, "abelian(m) needs m >= 1");
        require_param(m <= 256, "abelian(m) is capped at m <= 256");
        return build_abelian_atom(m);
    }
    throw UnknownNameError("unknown algebra family '" + f + "'", 0);
}

// strn(n) is exactly the derived algebra of st(n+1,R) times a line, so it
// stays an alias: the tree keeps the atom (round trips print strn(n)), and
// the builder rewrites it before any matrices are made.
inline AlgebraExpr expand_strn(const AlgebraExpr& e) {
    switch (e.node) {
        case AlgebraExpr::Node::product:
            return AlgebraExpr::product(expand_strn(e.children[0]),
                                        expand_strn(e.children[1]));
        case AlgebraExpr::Node::derived:
            return AlgebraExpr::derived(expand_strn(e.children[0]));
        case AlgebraExpr::Node::atom:
        default:
            if (e.name != "strn") return e;
            require_param(e.param >= 1, "strn(n) needs n >= 1");
            require_param(e.param <= 23, "strn(n) is capped at n <= 23");
            return AlgebraExpr::product(
                AlgebraExpr::derived(AlgebraExpr::atom("st", e.param + 1, false)),
                AlgebraExpr::atom("abelian", 1));
    }
}

inline LieAlgebra build_node(const AlgebraExpr& e) {
    switch (e.node) {
        case AlgebraExpr::Node::product:
            return direct_sum(build_node(e.children[0]), build_node(e.children[1]));
        case AlgebraExpr::Node::derived:
            return build_derived(build_node(e.children[0]));
        case AlgebraExpr::Node::atom:
        default:
            return build_atom(e);
    }
}

inline void collect_factors(const AlgebraExpr& e, std::vector<const AlgebraExpr*>& out) {
    if (e.node == AlgebraExpr::Node::product) {
        collect_factors(e.children[0], out);
        collect_factors(e.children[1], out);
    } else {
        out.push_back(&e);
    }
}

inline AtomKind atom_kind_of(const std::string& name) {
    if (name == "st") return AtomKind::st;
    if (name == "nt") return AtomKind::nt;
    if (name == "sl") return AtomKind::sl;
    if (name == "abelian") return AtomKind::abelian;
    return AtomKind::other;
}

}  // namespace detail

// Builds the algebra an expression denotes.  Throws ArityError when a
// parameter is outside the buildable range.
inline LieAlgebra build(const AlgebraExpr& expr) {
    LieAlgebra L = detail::build_node(detail::expand_strn(expr));
    L.origin = print_expression(expr);
    return L;
}

// Full invariant profile plus the syntactic factor pattern the rule engine
// matches against.  Factors are the flattened product terms of the
// strn-expanded tree; derived(...) factors carry AtomKind::other.
inline AlgebraProfile profile_expression(const AlgebraExpr& expr,
                                         const ClassifyConfig& ccfg = {},
                                         const SpectralConfig& scfg = {}) {
    AlgebraExpr expanded = detail::expand_strn(expr);
    LieAlgebra whole = detail::build_node(expanded);
    whole.origin = print_expression(expr);
    AlgebraProfile p = profile_algebra(whole, ccfg, scfg);
    p.expression = print_expression(expr);
    p.pattern_known = true;
    p.factors.clear();
    std::vector<const AlgebraExpr*> parts;
    detail::collect_factors(expanded, parts);
    for (const AlgebraExpr* f : parts) {
        bool is_atom = f->node == AlgebraExpr::Node::atom;
        p.factors.push_back(profile_factor(
            print_expression(*f),
            is_atom ? detail::atom_kind_of(f->name) : AtomKind::other,
            is_atom ? f->param : 0,
            is_atom && f->complex_field,
            detail::build_node(*f),
            ccfg));
    }
    return p;
}

// One row of `catalog list`.
struct CatalogEntry {
    std::string form;
    std::string dimension;
    std::string constraints;
    std::string note;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"st(m,R)", "m(m+1)/2", "1 <= m <= 24", "upper triangular m x m matrices"},
        {"st(m,C)", "m(m+1)", "1 <= m <= 24", "realified complex upper triangular"},
        {"nt(m,R)", "m(m-1)/2", "2 <= m <= 24", "strictly upper triangular m x m matrices"},
        {"sl(m,R)", "m^2 - 1", "2 <= m <= 12", "traceless m x m matrices"},
        {"sl(2,C)", "6", "m = 2", "realified traceless complex 2 x 2 matrices"},
        {"abelian(m)", "m", "1 <= m <= 256", "abelian of dimension m"},
        {"strn(n)", "n(n+1)/2 + 1", "1 <= n <= 23", "alias for derived(st(n+1,R)) x abelian(1)"},
    };
    return entries;
}

}  // namespace lieact
