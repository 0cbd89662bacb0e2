#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lieact/lie_algebra.hpp"
#include "lieact/matrix.hpp"
#include "lieact/poly.hpp"
#include "lieact/relations.hpp"
#include "lieact/roots.hpp"
#include "lieact/structure.hpp"
#include "lieact/subspace.hpp"

namespace lieact {

// Weight spaces of a rational operator.  For a rational eigenvalue lambda the
// relevant factor is q(t) = t - lambda; a conjugate pair of eigenvalues with
// rational sum 2*Re and rational norm |.|^2 contributes the real quadratic
// q(t) = t^2 - (2 Re) t + |.|^2.  The plain eigenspace is ker q(T); the full
// weight space is ker q(T)^n, which has stabilized by the ambient dimension.

namespace detail {

inline Subspace kernel_of_power(MatrixQ q, int power) {
    MatrixQ acc = MatrixQ::identity(q.rows());
    for (int i = 0; i < power; ++i) acc = acc * q;
    return kernel_subspace(acc);
}

inline MatrixQ shift_by(const MatrixQ& t, const Rational& lambda) {
    MatrixQ m = t;
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
    return m;
}

inline MatrixQ quadratic_of(const MatrixQ& t, const Rational& two_re, const Rational& abs2) {
    MatrixQ m = t * t - t.scaled(two_re);
    for (int i = 0; i < m.rows(); ++i) m(i, i) += abs2;
    return m;
}

}  // namespace detail

inline Subspace eigenspace(const MatrixQ& t, const Rational& lambda) {
    if (t.rows() != t.cols()) throw DimensionError("eigenspace of a non-square matrix");
    return kernel_subspace(detail::shift_by(t, lambda));
}

inline Subspace weight_space(const MatrixQ& t, const Rational& lambda) {
    if (t.rows() != t.cols()) throw DimensionError("weight space of a non-square matrix");
    return detail::kernel_of_power(detail::shift_by(t, lambda), t.rows());
}

// Conjugate pair given by its rational trace 2*Re(lambda) and norm |lambda|^2.
inline Subspace eigenspace_pair(const MatrixQ& t, const Rational& two_re, const Rational& abs2) {
    if (t.rows() != t.cols()) throw DimensionError("eigenspace of a non-square matrix");
    return kernel_subspace(detail::quadratic_of(t, two_re, abs2));
}

inline Subspace weight_space_pair(const MatrixQ& t, const Rational& two_re, const Rational& abs2) {
    if (t.rows() != t.cols()) throw DimensionError("weight space of a non-square matrix");
    return detail::kernel_of_power(detail::quadratic_of(t, two_re, abs2), t.rows());
}

// Rank of the group generated by the eigenvalues of a rational matrix inside
// the additive complex numbers, keeping one representative per conjugate
// pair; rank_nonreal restricts the generating set to the nonreal eigenvalues.
//
// Which member of a pair counts as "the" eigenvalue is genuinely ambiguous
// for a real matrix: an operator obtained by forgetting a complex structure
// shows every complex-linear eigenvalue twice, once conjugated, and mixing
// the two orientations across pairs destroys the additive relations the
// complex spectrum satisfies.  The representatives are therefore chosen to
// minimize the resulting rank; for a realified complex-linear operator the
// minimum is attained exactly when the choices align with a complex
// structure, and for an honest real operator all choices agree anyway.
// Exact when every eigenvalue is rational, otherwise certified-heuristic.
struct SpectralRank {
    int rank = 0;
    int rank_nonreal = 0;
    std::vector<ApproxRoot> spectrum;  // full eigenvalue list, conjugates included
    Certainty certainty = Certainty::exact;
};

namespace detail {

// Minimum of q_linear_rank over the choice of one generator per conjugate
// pair, on top of a fixed real generator list.  Conjugating every pair at
// once is a group automorphism, so the first pair's choice can be pinned;
// the rest are enumerated outright while that is cheap and descended
// greedily (deterministically) when it is not.
inline QLinearRankResult min_section_rank(const std::vector<GammaGenerator>& fixed,
                                          const std::vector<std::pair<GammaGenerator, GammaGenerator>>& pairs,
                                          const RelationConfig& cfg) {
    const int p = static_cast<int>(pairs.size());
    auto eval = [&](const std::vector<bool>& take_upper) {
        std::vector<GammaGenerator> gens = fixed;
        for (int k = 0; k < p; ++k)
            gens.push_back(take_upper[k] ? pairs[k].first : pairs[k].second);
        return q_linear_rank(gens, cfg);
    };
    std::vector<bool> choice(p, true);
    QLinearRankResult best = eval(choice);
    if (p <= 1) return best;
    if (p <= 9) {
        for (std::uint32_t mask = 1; mask < (1u << (p - 1)); ++mask) {
            for (int k = 1; k < p; ++k) choice[k] = ((mask >> (k - 1)) & 1) == 0;
            QLinearRankResult r = eval(choice);
            if (r.rank < best.rank) best = r;
        }
        return best;
    }
    for (int pass = 0; pass < p; ++pass) {
        bool improved = false;
        for (int k = 1; k < p; ++k) {
            choice[k] = !choice[k];
            QLinearRankResult r = eval(choice);
            if (r.rank < best.rank) {
                best = r;
                improved = true;
            } else {
                choice[k] = !choice[k];
            }
        }
        if (!improved) break;
    }
    return best;
}

}  // namespace detail

inline SpectralRank spectral_rank_of(const MatrixQ& t, const RelationConfig& cfg = {}) {
    if (t.rows() != t.cols()) throw DimensionError("spectral rank of a non-square matrix");
    SpectralRank out;
    if (t.rows() == 0) return out;

    // Root disks are certified well below the radius cap the relation finder
    // imposes at the requested precision.
    RootConfig rc;
    rc.precision_bits = std::max(2 * cfg.precision_bits, 512u);
    rc.escalation_cap = std::max(8 * rc.precision_bits, 8192u);
    out.spectrum = complex_roots(charpoly(t), rc);

    std::vector<GammaGenerator> reals;
    std::vector<std::pair<GammaGenerator, GammaGenerator>> pairs;
    for (const auto& r : out.spectrum) {
        GammaGenerator g{r.value, r.radius, r.exact};
        if (r.is_real) {
            reals.push_back(g);
        } else if (r.value.im > 0) {
            GammaGenerator lower{r.value.conj(), r.radius, std::nullopt};
            pairs.emplace_back(g, lower);
        }
    }
    QLinearRankResult ra = detail::min_section_rank(reals, pairs, cfg);
    QLinearRankResult rn = detail::min_section_rank({}, pairs, cfg);
    out.rank = ra.rank;
    out.rank_nonreal = rn.rank;
    out.certainty = (ra.certainty == Certainty::exact && rn.certainty == Certainty::exact)
                        ? Certainty::exact
                        : Certainty::heuristic;
    return out;
}

namespace detail {

// Canonical basis (as matrices) of the linear span of a family of operators.
inline std::vector<MatrixQ> matrix_span_basis(const std::vector<MatrixQ>& ops, int d) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& op : ops)
        if (!op.is_zero()) rows.push_back(vectorize(op));
    std::vector<MatrixQ> out;
    if (rows.empty()) return out;
    RrefResult rr = rref(MatrixQ::from_rows(rows));
    for (int i = 0; i < rr.rank; ++i) out.push_back(devectorize(rr.reduced.row(i), d, d));
    return out;
}

// Largest subspace on which every operator of the span acts as a rational
// scalar: the joint eigenspace of the family for one consistent system of
// rational eigenvalues.  Empty return means no such subspace was found along
// the deterministic branch (nonreal or irrational eigenvalues somewhere, or a
// family whose span is not solvable).
//
// The recursion steps down a chain of codimension-one ideals.  Any hyperplane
// of the span containing all the commutators is an ideal; the joint
// eigenspace of an ideal is invariant under the whole family, and on it the
// leftover generator is a single operator whose rational eigenspaces cut out
// the answer.  Minimality of the chosen eigenvalue at each step makes the
// branch deterministic.
inline std::optional<MatrixQ> joint_eigenspace(const std::vector<MatrixQ>& gens, int d) {
    std::vector<MatrixQ> ops = matrix_span_basis(gens, d);
    if (ops.empty()) return MatrixQ::identity(d);

    std::vector<MatrixQ> commutators;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            commutators.push_back(ops[i] * ops[j] - ops[j] * ops[i]);
    std::vector<MatrixQ> der = matrix_span_basis(commutators, d);
    if (der.size() >= ops.size()) return std::nullopt;  // span cannot be solvable

    // Complete the commutator span to a hyperplane; one generator stays out.
    std::vector<std::vector<Rational>> hyper_rows;
    for (const auto& m : der) hyper_rows.push_back(vectorize(m));
    int target = static_cast<int>(ops.size()) - 1;
    std::optional<MatrixQ> leftover;
    for (const auto& op : ops) {
        std::vector<Rational> row = vectorize(op);
        if (static_cast<int>(hyper_rows.size()) < target) {
            auto trial = hyper_rows;
            trial.push_back(row);
            if (rank_of(MatrixQ::from_rows(trial)) > static_cast<int>(hyper_rows.size())) {
                hyper_rows.push_back(std::move(row));
                continue;
            }
        }
        if (!leftover) {
            auto trial = hyper_rows;
            trial.push_back(row);
            if (rank_of(MatrixQ::from_rows(trial)) > static_cast<int>(hyper_rows.size()))
                leftover = op;
        }
    }
    if (!leftover) throw Error("hyperplane completion failed");  // cannot happen

    std::vector<MatrixQ> hyper;
    for (const auto& row : hyper_rows) hyper.push_back(devectorize(row, d, d));
    std::optional<MatrixQ> eh = joint_eigenspace(hyper, d);
    if (!eh || eh->cols() == 0) return std::nullopt;

    // The leftover generator preserves the ideal's joint eigenspace.
    std::optional<MatrixQ> ze = solve_matrix(*eh, *leftover * *eh);
    if (!ze) throw Error("joint eigenspace lost invariance");  // cannot happen
    std::vector<std::pair<Rational, int>> eigs = rational_roots(charpoly(*ze));
    if (eigs.empty()) return std::nullopt;
    MatrixQ shifted = shift_by(*ze, eigs.front().first);
    std::vector<std::vector<Rational>> kb = kernel_basis(shifted);
    return *eh * MatrixQ::from_columns(kb);
}

// Residue of v against the canonical row basis of a subspace: subtract the
// unique combination that clears the pivot coordinates.
inline std::vector<Rational> reduce_mod_rows(const MatrixQ& basis, std::vector<Rational> v) {
    for (int r = 0; r < basis.rows(); ++r) {
        int p = -1;
        for (int j = 0; j < basis.cols(); ++j)
            if (basis(r, j) != 0) { p = j; break; }
        if (p < 0) continue;
        Rational c = v[p] / basis(r, p);
        if (c == 0) continue;
        for (int j = 0; j < basis.cols(); ++j) v[j] -= c * basis(r, j);
    }
    return v;
}

}  // namespace detail

// Simultaneous rational triangularization of the adjoint representation.  On
// success the columns of `flag` are a basis adapted to an invariant flag, and
// row t of `functionals` lists, per original basis direction e_i, the scalar
// by which ad(e_i) moves the t-th flag line modulo the earlier ones.  These
// rows are the weights of the adjoint action; their linear span controls the
// eigenvalue group attainable within the algebra.  Fails (success = false)
// whenever some step needs a nonreal or irrational eigenvalue, in particular
// on every algebra that is not solvable.
struct WeightFunctionals {
    bool success = false;
    MatrixQ functionals;
    MatrixQ flag;
};

inline WeightFunctionals weight_functionals(const LieAlgebra& L) {
    const int n = L.dim;
    WeightFunctionals out;
    out.functionals = MatrixQ(n, n);
    out.flag = MatrixQ(n, n);

    std::vector<MatrixQ> ad(n);
    for (int i = 0; i < n; ++i) ad[i] = ad_matrix(L, basis_vector_of(L, i));

    Subspace w(n);
    for (int t = 0; t < n; ++t) {
        // Coordinates transverse to the flag built so far: the non-pivot
        // columns of its canonical basis index a section of the quotient.
        std::vector<bool> is_pivot(n, false);
        const MatrixQ& wb = w.basis();
        for (int r = 0; r < wb.rows(); ++r)
            for (int j = 0; j < n; ++j)
                if (wb(r, j) != 0) { is_pivot[j] = true; break; }
        std::vector<int> free_cols;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
        const int q = static_cast<int>(free_cols.size());

        // Induced operators on the quotient.
        std::vector<MatrixQ> induced(n, MatrixQ(q, q));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < q; ++j) {
                std::vector<Rational> img = ad[i].col(free_cols[j]);
                img = detail::reduce_mod_rows(wb, std::move(img));
                for (int r = 0; r < q; ++r) induced[i](r, j) = img[free_cols[r]];
            }
        }

        std::optional<MatrixQ> e = detail::joint_eigenspace(induced, q);
        if (!e || e->cols() == 0) return out;

        std::vector<Rational> vq(q);
        for (int r = 0; r < q; ++r) vq[r] = (*e)(r, 0);
        int piv = -1;
        for (int r = 0; r < q; ++r)
            if (vq[r] != 0) { piv = r; break; }
        if (piv < 0) throw Error("zero vector in a joint eigenspace");

        for (int i = 0; i < n; ++i) {
            std::vector<Rational> u = induced[i].apply(vq);
            Rational c = u[piv] / vq[piv];
            for (int r = 0; r < q; ++r)
                if (u[r] != c * vq[r]) throw Error("joint eigenspace is not scalar");
            out.functionals(t, i) = c;
        }

        std::vector<Rational> lift(n, Rational(0));
        for (int r = 0; r < q; ++r) lift[free_cols[r]] = vq[r];
        for (int r = 0; r < n; ++r) out.flag(r, t) = lift[r];
        w = w.sum(Subspace::span(n, {lift}));
        if (w.dim() != t + 1) throw Error("flag failed to grow");  // cannot happen
    }

    // Self-check: in the flag basis every ad(e_i) must be upper triangular
    // with the recorded weights on the diagonal.  This certifies the output
    // independently of how the flag was found.
    if (n > 0) {
        std::optional<MatrixQ> inv = inverse(out.flag);
        if (!inv) throw Error("flag basis is singular");
        for (int i = 0; i < n; ++i) {
            MatrixQ m = *inv * ad[i] * out.flag;
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < r; ++c)
                    if (m(r, c) != 0) throw Error("flag fails to triangularize");
                if (m(r, r) != out.functionals(r, i))
                    throw Error("weight mismatch on the diagonal");
            }
        }
    }
    out.success = true;
    return out;
}

// Spectral rank of a whole algebra: the largest eigenvalue-group rank
// attainable by ad(X) as X ranges over the algebra, together with its
// nonreal-spectrum variant.
//
// Four regimes, tried in order:
//   exact-rational    nilpotent algebras, where every ad(X) has spectrum {0};
//   exact-weights     rationally triangularizable adjoint: the attainable
//                     group is the value group of the weight functionals, so
//                     the rank is the dimension of their span;
//   cartan-rank       semisimple algebras, where both ranks equal the minimal
//                     centralizer dimension found on a deterministic sweep;
//   numeric-sampled   everything else: certified per-sample computation on a
//                     deterministic family of test elements, reporting the max.
struct SpectralConfig {
    unsigned precision_bits = 256;
    BigInt height_bound = 1000000;
    int samples = 8;
    std::uint64_t seed = 20260401;
};

struct AlgebraRank {
    int rank = 0;
    int rank_nonreal = 0;
    std::string method;
    Certainty certainty = Certainty::exact;
    std::vector<Rational> witness;  // attaining element, when a sweep or sampling ran
};

namespace detail {

// Direction with maximally independent coordinates: powers of the real root
// theta > 1 of t^d - t - 1, truncated to 48 binary digits, shuffled and
// sign-flipped by the per-sample generator.  Truncation keeps the arithmetic
// exact while any rational dependence among the coordinates still needs
// coefficients far above the relation finder's height bound.
inline std::vector<Rational> pisot_direction(int n, std::mt19937_64& rng) {
    const int d = std::max(n, 2);
    IntPoly p(d + 1, BigInt(0));
    p[0] = -1;
    p[1] = -1;
    p[d] = 1;
    Rational lo(1), hi(2);
    for (int i = 0; i < 52; ++i) {
        Rational mid = (lo + hi) / 2;
        if (int_sign_at(p, mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    const Rational& theta = lo;
    const BigInt scale = BigInt(1) << 48;
    std::vector<Rational> powers(n);
    Rational cur = theta;
    for (int k = 0; k < n; ++k) {
        powers[k] = cur;
        cur = Rational(rat_round(cur * theta * Rational(scale)), scale);
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = powers[perm[i]];
        if (rng() & 1) x[i] = -x[i];
    }
    return x;
}

struct CentralizerSweep {
    int dim = 0;
    std::vector<Rational> witness;
};

// Minimal centralizer dimension over a deterministic element sweep: basis
// vectors, pairwise sums and differences, and an index ramp.  Regularity is
// generic, so on the algebras this is used for (semisimple ones, where the
// minimum is the Cartan dimension) the sweep finds a regular element fast.
inline CentralizerSweep min_centralizer_dim(const LieAlgebra& L) {
    CentralizerSweep out;
    out.dim = L.dim;
    auto consider = [&](const std::vector<Rational>& x) {
        int k = L.dim - rank_of(ad_matrix(L, x));
        if (k < out.dim) {
            out.dim = k;
            out.witness = x;
        }
    };
    for (int i = 0; i < L.dim; ++i) consider(basis_vector_of(L, i));
    for (int i = 0; i < L.dim; ++i)
        for (int j = i + 1; j < L.dim; ++j) {
            std::vector<Rational> x(L.dim, Rational(0));
            x[i] = 1;
            x[j] = 1;
            consider(x);
            x[j] = -1;
            consider(x);
        }
    std::vector<Rational> ramp(L.dim);
    for (int i = 0; i < L.dim; ++i) ramp[i] = i + 1;
    consider(ramp);
    return out;
}

}  // namespace detail

inline AlgebraRank algebra_spectral_rank(const LieAlgebra& L, const SpectralConfig& cfg = {}) {
    AlgebraRank out;
    if (L.dim == 0 || is_nilpotent(L)) {
        out.method = "exact-rational";
        return out;
    }

    WeightFunctionals wf = weight_functionals(L);
    if (wf.success) {
        out.rank = rank_of(wf.functionals);
        out.rank_nonreal = 0;  // triangular over the rationals: all spectra real
        out.method = "exact-weights";
        return out;
    }

    if (is_semisimple(L)) {
        detail::CentralizerSweep sweep = detail::min_centralizer_dim(L);
        out.rank = sweep.dim;
        out.rank_nonreal = sweep.dim;
        out.method = "cartan-rank";
        out.witness = std::move(sweep.witness);
        return out;
    }

    RelationConfig rcfg;
    rcfg.precision_bits = cfg.precision_bits;
    rcfg.height_bound = cfg.height_bound;
    for (int s = 0; s < cfg.samples; ++s) {
        std::mt19937_64 rng(cfg.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(s + 1));
        std::vector<Rational> x(L.dim, Rational(0));
        if (s % 2 == 0) {
            const std::uint64_t box = 3 + static_cast<std::uint64_t>(s);
            bool nonzero = false;
            for (int i = 0; i < L.dim; ++i) {
                long c = static_cast<long>(rng() % (2 * box + 1)) - static_cast<long>(box);
                x[i] = c;
                nonzero = nonzero || c != 0;
            }
            if (!nonzero) x[0] = 1;
        } else {
            x = detail::pisot_direction(L.dim, rng);
        }
        SpectralRank sr = spectral_rank_of(ad_matrix(L, x), rcfg);
        if (sr.rank > out.rank) {
            out.rank = sr.rank;
            out.witness = x;
        }
        out.rank_nonreal = std::max(out.rank_nonreal, sr.rank_nonreal);
    }
    out.method = "numeric-sampled";
    out.certainty = Certainty::heuristic;
    return out;
}

}  // namespace lieact
