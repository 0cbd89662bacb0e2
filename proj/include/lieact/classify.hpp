#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieact/lie_algebra.hpp"
#include "lieact/matrix.hpp"
#include "lieact/poly.hpp"
#include "lieact/roots.hpp"
#include "lieact/spectral.hpp"
#include "lieact/structure.hpp"
#include "lieact/subspace.hpp"
#include "lieact/tristate.hpp"

namespace lieact {

// Structural classification of a rational Lie algebra: the series-based
// predicates, supersolubility with an honest certainty label, semisimple
// rank, and algebraic contractibility with a checkable certificate.

struct ClassifyConfig {
    int samples = 5;
    std::uint64_t seed = 20260401;
};

namespace detail {

inline std::mt19937_64 classify_rng(std::uint64_t seed, int s) {
    return std::mt19937_64(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(s + 1));
}

// Exact all-real-rootedness: the polynomial splits over R iff its squarefree
// part has as many distinct real roots as its degree.
inline bool all_roots_real(const PolyQ& p) {
    PolyQ sf = squarefree_part(p);
    int d = poly_degree(sf);
    if (d <= 0) return true;
    return count_distinct_real_roots(sf) == d;
}

inline bool is_nilpotent_matrix(const MatrixQ& m) {
    std::vector<Rational> c = charpoly(m);
    for (int i = 0; i + 1 < static_cast<int>(c.size()); ++i)
        if (c[i] != 0) return false;
    return true;
}

// Deterministic element sweep used to hunt counterexample witnesses: all
// basis vectors, then pairwise sums and differences until the budget runs
// out.  Exhaustiveness is not needed, readable witnesses are.
inline std::vector<std::vector<Rational>> witness_sweep(const LieAlgebra& L,
                                                        int pair_budget = 48) {
    std::vector<std::vector<Rational>> out;
    for (int i = 0; i < L.dim; ++i) out.push_back(basis_vector_of(L, i));
    for (int i = 0; i < L.dim; ++i)
        for (int j = i + 1; j < L.dim; ++j) {
            if (pair_budget <= 0) return out;
            std::vector<Rational> x(L.dim, Rational(0));
            x[i] = 1;
            x[j] = 1;
            out.push_back(x);
            x[j] = -1;
            out.push_back(x);
            pair_budget -= 2;
        }
    return out;
}

inline std::vector<Rational> boxed_sample(int n, std::mt19937_64& rng, std::uint64_t box) {
    std::vector<Rational> x(n, Rational(0));
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
        long c = static_cast<long>(rng() % (2 * box + 1)) - static_cast<long>(box);
        x[i] = c;
        nonzero = nonzero || c != 0;
    }
    if (!nonzero && n > 0) x[0] = 1;
    return x;
}

}  // namespace detail

// How a supersolubility answer is backed.  A negative answer always carries
// an exact counterexample (or exact non-solvability), so it is certified.  A
// positive answer is certified when a rational triangularizing flag exists
// and exact-per-sample otherwise: every tested element was decided exactly,
// genericity of the test set is the remaining assumption.
enum class SupersolubleCertainty { certified, exact_per_sample };

inline const char* certainty_str(SupersolubleCertainty c) {
    return c == SupersolubleCertainty::certified ? "certified" : "exact-per-sample";
}

struct SupersolubleResult {
    bool value = false;
    SupersolubleCertainty certainty = SupersolubleCertainty::certified;
    // Element whose ad has a nonreal eigenvalue, when one was found.
    std::vector<Rational> witness;
};

// An algebra is supersoluble when every ad X has all-real spectrum.  The
// reality of each sampled spectrum is decided exactly by Sturm counts; a
// rational flag (weight functionals) certifies the positive answer outright.
inline SupersolubleResult is_supersoluble(const LieAlgebra& L, const ClassifyConfig& cfg = {}) {
    SupersolubleResult out;
    if (L.dim == 0) {
        out.value = true;
        return out;
    }
    const bool solvable = is_solvable(L);
    if (solvable && weight_functionals(L).success) {
        out.value = true;
        return out;
    }
    auto nonreal_at = [&](const std::vector<Rational>& x) {
        return !detail::all_roots_real(charpoly(ad_matrix(L, x)));
    };
    for (const auto& x : detail::witness_sweep(L)) {
        if (nonreal_at(x)) {
            out.value = false;
            out.witness = x;
            return out;
        }
    }
    for (int s = 0; s < cfg.samples; ++s) {
        std::mt19937_64 rng = detail::classify_rng(cfg.seed, s);
        std::vector<Rational> x =
            detail::boxed_sample(L.dim, rng, 3 + static_cast<std::uint64_t>(s));
        if (nonreal_at(x)) {
            out.value = false;
            out.witness = x;
            return out;
        }
    }
    if (!solvable) {
        // Non-solvability alone refutes supersolubility, witness or not.
        out.value = false;
        return out;
    }
    out.value = true;
    out.certainty = SupersolubleCertainty::exact_per_sample;
    return out;
}

// Whether the span of the representing matrices meets the scalar line only
// in 0.  With the span being a subspace, that is exactly "the identity is
// not in the span".  Without a stored realization there is nothing to test.
inline TriState scalar_free_rep(const LieAlgebra& L) {
    if (!L.has_rep()) return TriState::unknown;
    const int d = L.rep[0].rows();
    if (d == 0) return TriState::yes;
    MatrixQ with(L.dim + 1, d * d);
    for (int i = 0; i < L.dim; ++i) {
        std::vector<Rational> v = vectorize(L.rep[i]);
        for (int c = 0; c < d * d; ++c) with(i, c) = v[c];
    }
    std::vector<Rational> iv = vectorize(MatrixQ::identity(d));
    for (int c = 0; c < d * d; ++c) with(L.dim, c) = iv[c];
    MatrixQ without(L.dim, d * d);
    for (int i = 0; i < L.dim; ++i)
        for (int c = 0; c < d * d; ++c) without(i, c) = with(i, c);
    return rank_of(with) > rank_of(without) ? TriState::yes : TriState::no;
}

// ---------------------------------------------------------------------------
// Algebraic contractibility.
//
// A derivation D with positive rational spectrum drives the contraction
// exp(-s D): an automorphism for every s that tends to 0, compactified to a
// path of endomorphisms from the identity to the trivial map.  The
// acceptance here is slightly wider: eigenvalue 0 is allowed when the
// kernel of D is a genuine (semisimple) eigenspace and abelian as a
// subalgebra.  Then exp(-s D) converges to the spectral projection onto
// ker D, the limit is still an algebra endomorphism because the
// endomorphism variety is closed, and scaling an abelian image linearly
// finishes the path to 0.  The standard graded examples (strictly or
// non-strictly triangular matrix algebras) need exactly this widening.

struct ACVerify {
    bool ok = false;
    std::string failed_check;  // empty on success
    explicit operator bool() const { return ok; }
};

enum class ACState { ac, not_ac, unknown };

inline const char* ac_str(ACState s) {
    switch (s) {
        case ACState::ac: return "AC";
        case ACState::not_ac: return "NotAC";
        default: return "Unknown";
    }
}

struct ACStatus {
    ACState status = ACState::unknown;
    std::optional<MatrixQ> certificate;
    // Certificate eigenvalues with multiplicities; empty unless status is AC.
    std::vector<std::pair<Rational, int>> spectrum;
    std::string reason;
};

namespace detail {

inline ACVerify check_ac_certificate_exact(const LieAlgebra& L, const MatrixQ& d) {
    ACVerify v;
    if (d.rows() != L.dim || d.cols() != L.dim) {
        v.failed_check = "certificate shape";
        return v;
    }
    if (!is_derivation(L, d)) {
        v.failed_check = "derivation identity";
        return v;
    }
    std::vector<std::pair<Rational, int>> roots = rational_roots(charpoly(d));
    int total = 0;
    bool any_negative = false;
    bool any_zero = false;
    for (const auto& [r, m] : roots) {
        total += m;
        if (r < 0) any_negative = true;
        if (r == 0) any_zero = true;
    }
    if (total != L.dim) {
        v.failed_check = "spectrum not rational";
        return v;
    }
    if (any_negative) {
        v.failed_check = "negative eigenvalue";
        return v;
    }
    if (any_zero) {
        Subspace k = kernel_subspace(d);
        Subspace k2 = kernel_subspace(d * d);
        if (k.dim() != k2.dim()) {
            v.failed_check = "kernel not semisimple";
            return v;
        }
        if (!bracket_span(L, k, k).is_zero()) {
            v.failed_check = "kernel not abelian";
            return v;
        }
    }
    v.ok = true;
    return v;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::vector<double> mat_mul_d(int n, const std::vector<double>& a,
                                     const std::vector<double>& b) {
    std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double aik = a[i * n + k];
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

// exp(-s d) in doubles by scaling and squaring; the Taylor tail at scaled
// norm <= 1/2 is below machine precision long before 24 terms.
inline std::vector<double> expm_neg(const MatrixQ& d, double s) {
    const int n = d.rows();
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            double e = -s * to_double(d(i, j));
            m[i * n + j] = e;
            row += std::fabs(e);
        }
        norm = std::max(norm, row);
    }
    int k = 0;
    while (norm > 0.5) {
        norm /= 2;
        ++k;
    }
    const double scale = std::ldexp(1.0, -k);
    for (double& e : m) e *= scale;
    std::vector<double> result(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> term = result;
    for (int i = 0; i < n; ++i) result[i * n + i] = term[i * n + i] = 1.0;
    for (int order = 1; order <= 24; ++order) {
        term = mat_mul_d(n, term, m);
        for (double& e : term) e /= order;
        for (std::size_t i = 0; i < result.size(); ++i) result[i] += term[i];
    }
    for (int i = 0; i < k; ++i) result = mat_mul_d(n, result, result);
    return result;
}

inline std::vector<double> bracket_d(const LieAlgebra& L, const std::vector<double>& x,
                                     const std::vector<double>& y) {
    std::vector<double> v(L.dim, 0.0);
    for (const auto& [ij, coeffs] : L.constants) {
        auto [i, j] = ij;
        double f = x[i] * y[j] - x[j] * y[i];
        if (f == 0.0) continue;
        for (const auto& [k, c] : coeffs) v[k] += f * to_double(c);
    }
    return v;
}

}  // namespace detail

// Full certificate check: the exact part (derivation identity, rational
// nonnegative spectrum, abelian semisimple kernel when 0 occurs) plus a
// floating spot-check that exp(-s d) respects the bracket at a few path
// times on seeded vector pairs.
inline ACVerify verify_ac_certificate(const LieAlgebra& L, const MatrixQ& d) {
    ACVerify v = detail::check_ac_certificate_exact(L, d);
    if (!v.ok || L.dim == 0) return v;
    const int n = L.dim;
    std::mt19937_64 rng(0xAC0DE);
    for (double s : {0.5, 1.0, 2.0}) {
        std::vector<double> e = detail::expm_neg(d, s);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> x(n), y(n);
            for (int i = 0; i < n; ++i) {
                x[i] = static_cast<double>(static_cast<long>(rng() % 7) - 3);
                y[i] = static_cast<double>(static_cast<long>(rng() % 7) - 3);
            }
            std::vector<double> bxy = detail::bracket_d(L, x, y);
            std::vector<double> lhs(n, 0.0), ex(n, 0.0), ey(n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    lhs[i] += e[i * n + j] * bxy[j];
                    ex[i] += e[i * n + j] * x[j];
                    ey[i] += e[i * n + j] * y[j];
                }
            std::vector<double> rhs = detail::bracket_d(L, ex, ey);
            double diff = 0.0, size = 1.0;
            for (int i = 0; i < n; ++i) {
                diff = std::max(diff, std::fabs(lhs[i] - rhs[i]));
                size = std::max({size, std::fabs(lhs[i]), std::fabs(rhs[i])});
            }
            if (diff > 1e-10 * size) {
                v.ok = false;
                v.failed_check = "numeric automorphism spot-check";
                return v;
            }
        }
    }
    return v;
}

namespace detail {

// True when the sampled evidence says every derivation is nilpotent: each
// listed basis matrix and each of `samples` generic combinations has
// characteristic polynomial t^n exactly.  Nilpotency on a generic set forces
// nilpotency everywhere (the non-nilpotent locus is open), so a fully
// nilpotent sample set is strong evidence for a unipotent derivation algebra.
inline bool derivations_sampled_nilpotent(const std::vector<MatrixQ>& der, int n,
                                          const ClassifyConfig& cfg) {
    for (const MatrixQ& b : der)
        if (!is_nilpotent_matrix(b)) return false;
    if (der.empty()) return true;
    for (int s = 0; s < cfg.samples; ++s) {
        std::mt19937_64 rng = classify_rng(cfg.seed, s);
        std::vector<Rational> c =
            boxed_sample(static_cast<int>(der.size()), rng, 3 + static_cast<std::uint64_t>(s));
        MatrixQ d0(n, n);
        for (std::size_t i = 0; i < der.size(); ++i)
            if (c[i] != 0) d0 = d0 + der[i].scaled(c[i]);
        if (!is_nilpotent_matrix(d0)) return false;
    }
    return true;
}

// Diagonal derivations in the defining basis are the solutions of
// d_k = d_i + d_j over the nonzero structure constants; a strictly positive
// solution rescales to one with every entry >= 1, so feasibility is a
// phase-1 simplex over the rationals (Bland's rule, hence finite).
inline std::optional<std::vector<Rational>> positive_diagonal_derivation(const LieAlgebra& L) {
    const int n = L.dim;
    std::set<std::array<int, 3>> eqs;
    for (const auto& [ij, coeffs] : L.constants)
        for (const auto& [k, c] : coeffs) {
            (void)c;
            eqs.insert({k, ij.first, ij.second});
        }
    const int m = static_cast<int>(eqs.size());
    if (m == 0) return std::vector<Rational>(n, Rational(1));

    // Substituting d = 1 + y with y >= 0 turns each equation into
    // y_k - y_i - y_j = 1; artificials start as the basis.
    const int cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    {
        int r = 0;
        for (const auto& [k, i, j] : eqs) {
            t[r][k] += 1;
            t[r][i] -= 1;
            t[r][j] -= 1;
            t[r][n + r] = 1;
            t[r][cols - 1] = 1;  // already nonnegative, no row flips needed
            ++r;
        }
    }
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) basis[r] = n + r;
    // Cost row for minimizing the artificial sum, priced out over the basis.
    std::vector<Rational> cost(cols, Rational(0));
    for (int j = n; j < n + m; ++j) cost[j] = 1;
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < cols; ++j) cost[j] -= t[r][j];

    while (true) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (t[r][enter] <= 0) continue;
            Rational ratio = t[r][cols - 1] / t[r][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) return std::nullopt;  // unbounded: cannot happen in phase 1
        Rational piv = t[leave][enter];
        for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rational f = t[r][enter];
            for (int j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
        }
        Rational fc = cost[enter];
        if (fc != 0)
            for (int j = 0; j < cols; ++j) cost[j] -= fc * t[leave][j];
        basis[leave] = enter;
    }
    // Feasible iff every artificial ended at value 0.
    for (int r = 0; r < m; ++r)
        if (basis[r] >= n && t[r][cols - 1] != 0) return std::nullopt;
    std::vector<Rational> d(n, Rational(1));
    for (int r = 0; r < m; ++r)
        if (basis[r] < n) d[basis[r]] += t[r][cols - 1];
    return d;
}

// Semisimple part of a matrix with fully rational spectrum, assembled from
// the generalized eigenspaces.  For a derivation this is again a derivation
// (the Jordan decomposition of a derivation stays inside the derivation
// algebra in characteristic zero), which the caller re-verifies exactly.
inline std::optional<MatrixQ> semisimple_part(const MatrixQ& m) {
    const int n = m.rows();
    if (n == 0) return m;
    std::vector<std::pair<Rational, int>> roots = rational_roots(charpoly(m));
    int total = 0;
    for (const auto& [r, mu] : roots) total += mu;
    if (total != n) return std::nullopt;
    std::vector<std::vector<Rational>> cols;
    std::vector<Rational> eigen;
    for (const auto& [lam, mu] : roots) {
        Subspace g = kernel_of_power(shift_by(m, lam), n);
        if (g.dim() != mu) return std::nullopt;
        for (int i = 0; i < g.dim(); ++i) {
            cols.push_back(g.basis_vector(i));
            eigen.push_back(lam);
        }
    }
    MatrixQ s = MatrixQ::from_columns(cols);
    std::optional<MatrixQ> sinv = inverse(s);
    if (!sinv) return std::nullopt;
    MatrixQ lam(n, n);
    for (int i = 0; i < n; ++i) lam(i, i) = eigen[i];
    return s * lam * *sinv;
}

}  // namespace detail

inline ACStatus ac_status(const LieAlgebra& L, const ClassifyConfig& cfg = {}) {
    ACStatus out;
    if (L.dim == 0) {
        out.status = ACState::ac;
        out.certificate = MatrixQ(0, 0);
        out.reason = "zero algebra: the identity and trivial endomorphisms coincide";
        return out;
    }
    if (!is_solvable(L)) {
        out.status = ACState::not_ac;
        out.reason = "not solvable: a contraction path forces solvability";
        return out;
    }
    std::vector<MatrixQ> der = derivation_algebra(L);
    if (detail::derivations_sampled_nilpotent(der, L.dim, cfg)) {
        out.status = ACState::not_ac;
        out.reason = "derivation algebra unipotent on sampled evidence (" +
                     std::to_string(cfg.samples) +
                     " generic derivations, all nilpotent): no derivation can "
                     "generate a contraction";
        return out;
    }

    auto accept = [&](const MatrixQ& d, std::string why) -> bool {
        if (!verify_ac_certificate(L, d)) return false;
        out.status = ACState::ac;
        out.certificate = d;
        out.spectrum = rational_roots(charpoly(d));
        out.reason = std::move(why);
        return true;
    };

    if (L.has_grading()) {
        MatrixQ d(L.dim, L.dim);
        for (int i = 0; i < L.dim; ++i) d(i, i) = L.grading[i];
        if (accept(d, "grading derivation: the stored basis weights are "
                      "nonnegative with an abelian zero block"))
            return out;
    }
    if (std::optional<std::vector<Rational>> diag = detail::positive_diagonal_derivation(L)) {
        MatrixQ d(L.dim, L.dim);
        for (int i = 0; i < L.dim; ++i) d(i, i) = (*diag)[i];
        if (accept(d, "positive diagonal derivation in the defining basis"))
            return out;
    }
    for (int s = 0; s < cfg.samples; ++s) {
        std::mt19937_64 rng = detail::classify_rng(cfg.seed, cfg.samples + s);
        std::vector<Rational> c = detail::boxed_sample(static_cast<int>(der.size()), rng,
                                                       3 + static_cast<std::uint64_t>(s));
        MatrixQ d0(L.dim, L.dim);
        for (std::size_t i = 0; i < der.size(); ++i)
            if (c[i] != 0) d0 = d0 + der[i].scaled(c[i]);
        std::optional<MatrixQ> ds = detail::semisimple_part(d0);
        if (ds && accept(*ds, "semisimple part of a sampled derivation"))
            return out;
    }
    out.status = ACState::unknown;
    out.reason = "no certificate found: solvable with a non-unipotent derivation "
                 "algebra, but no nonnegative-spectrum derivation was located";
    return out;
}

struct ClassificationFlags {
    bool abelian = false;
    bool nilpotent = false;
    int nilpotency_class = -1;  // meaningful only when nilpotent
    bool solvable = false;
    int derived_length = -1;  // meaningful only when solvable
    bool supersoluble = false;
    SupersolubleCertainty supersoluble_certainty = SupersolubleCertainty::certified;
    std::vector<Rational> supersoluble_witness;
    bool semisimple = false;
    int semisimple_rank = -1;  // meaningful only when semisimple
    TriState scalar_free = TriState::unknown;
};

inline ClassificationFlags classify(const LieAlgebra& L, const ClassifyConfig& cfg = {}) {
    ClassificationFlags f;
    f.abelian = is_abelian(L);
    SeriesResult lcs = lower_central_series(L);
    f.nilpotent = lcs.reaches_zero;
    if (f.nilpotent) f.nilpotency_class = lcs.length;
    SeriesResult ds = derived_series(L);
    f.solvable = ds.reaches_zero;
    if (f.solvable) f.derived_length = ds.length;
    SupersolubleResult ss = is_supersoluble(L, cfg);
    f.supersoluble = ss.value;
    f.supersoluble_certainty = ss.certainty;
    f.supersoluble_witness = std::move(ss.witness);
    f.semisimple = is_semisimple(L);
    if (f.semisimple) f.semisimple_rank = L.dim == 0 ? 0 : detail::min_centralizer_dim(L).dim;
    f.scalar_free = scalar_free_rep(L);
    return f;
}

}  // namespace lieact
