#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lieact/floatdefs.hpp"
#include "lieact/matrix.hpp"

namespace lieact {

// LLL reduction with delta = 99/100, exact rational Gram-Schmidt data and
// incremental updates on swaps (the classical integer version).  Rows must
// be linearly independent, which every caller guarantees by embedding an
// identity block.
inline void lll_reduce(std::vector<std::vector<BigInt>>& b) {
    const Rational delta(99, 100);
    int m = static_cast<int>(b.size());
    if (m <= 1) return;
    int n = static_cast<int>(b[0].size());

    std::vector<std::vector<Rational>> mu(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> B(m);
    {
        std::vector<std::vector<Rational>> bstar(m, std::vector<Rational>(n));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) bstar[i][j] = b[i][j];
            for (int j = 0; j < i; ++j) {
                Rational num = 0;
                for (int t = 0; t < n; ++t) num += Rational(b[i][t]) * bstar[j][t];
                mu[i][j] = num / B[j];
                for (int t = 0; t < n; ++t) bstar[i][t] -= mu[i][j] * bstar[j][t];
            }
            Rational nn = 0;
            for (int t = 0; t < n; ++t) nn += bstar[i][t] * bstar[i][t];
            B[i] = nn;
            if (B[i] == 0) throw Error("lll_reduce requires independent rows");
        }
    }

    auto red = [&](int k, int l) {
        if (rat_abs(mu[k][l]) <= Rational(1, 2)) return;
        BigInt q = rat_round(mu[k][l]);
        for (int t = 0; t < n; ++t) b[k][t] -= q * b[l][t];
        mu[k][l] -= Rational(q);
        for (int i = 0; i < l; ++i) mu[k][i] -= Rational(q) * mu[l][i];
    };

    int k = 1;
    while (k < m) {
        red(k, k - 1);
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            std::swap(b[k], b[k - 1]);
            // Incremental Gram-Schmidt repair after the swap.
            Rational m_ = mu[k][k - 1];
            Rational Bnew = B[k] + m_ * m_ * B[k - 1];
            mu[k][k - 1] = m_ * B[k - 1] / Bnew;
            B[k] = B[k - 1] * B[k] / Bnew;
            B[k - 1] = Bnew;
            for (int j = 0; j < k - 1; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            for (int i = k + 1; i < m; ++i) {
                Rational t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m_ * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = std::max(k - 1, 1);
        } else {
            for (int l = k - 2; l >= 0; --l) red(k, l);
            ++k;
        }
    }
}

// One generator of a subgroup of (C, +): a certified disk (the true value
// lies within `radius` of `value`) plus the exact rational value when known.
struct GammaGenerator {
    CFloat value;
    BigFloat radius;
    std::optional<Rational> exact;

    static GammaGenerator of(const Rational& q) {
        GammaGenerator g;
        g.value = CFloat(q);
        g.radius = 0;
        g.exact = q;
        return g;
    }
};

struct RelationConfig {
    unsigned precision_bits = 256;
    BigInt height_bound = 1000000;
};

enum class Certainty { exact, heuristic };

struct QLinearRankResult {
    int rank = 0;
    // Integer vectors a with sum a_i x_i = 0, primitive, first nonzero entry
    // positive, indexed against the original generator list.  They are
    // linearly independent, so #relations + rank == #generators.
    std::vector<std::vector<BigInt>> relations;
    Certainty certainty = Certainty::exact;
};

namespace detail {

// Scale a rational vector into a primitive integer vector (no trimming,
// unlike the polynomial primitivization) and normalize the leading sign.
inline std::vector<BigInt> rat_vector_to_primitive(const std::vector<Rational>& v) {
    BigInt l = 1;
    for (const auto& c : v) l = int_lcm(l, den(c));
    std::vector<BigInt> z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) z[i] = num(v[i]) * (l / den(v[i]));
    return z;
}

inline std::vector<BigInt> normalize_int_vector(std::vector<BigInt> v) {
    BigInt g = 0;
    for (const auto& x : v) g = int_gcd(g, x);
    if (g == 0) return v;
    int lead = 0;
    for (auto& x : v) x /= g;
    while (lead < static_cast<int>(v.size()) && v[lead] == 0) ++lead;
    if (lead < static_cast<int>(v.size()) && v[lead] < 0)
        for (auto& x : v) x = -x;
    return v;
}

inline int int_matrix_rank(const std::vector<std::vector<BigInt>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Rational>> qr;
    for (const auto& r : rows) {
        std::vector<Rational> q(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) q[i] = r[i];
        qr.push_back(std::move(q));
    }
    return rank_of(MatrixQ::from_rows(qr));
}

}  // namespace detail

// Rank of the subgroup of (C, +) generated by the given values, together
// with a spanning set of detected integer relations.  Exact rational inputs
// give a certified answer through kernel computation; anything else goes
// through scaled LLL, and every candidate relation is re-verified against
// the certified disks before being accepted, so accepted relations are
// sound whenever sum |a_i| radius_i stays below the acceptance threshold
// minus the true combination's size.  The rank itself remains heuristic:
// a relation can in principle hide above the height bound.
inline QLinearRankResult q_linear_rank(const std::vector<GammaGenerator>& gens,
                                       const RelationConfig& cfg = {}) {
    const int k = static_cast<int>(gens.size());
    QLinearRankResult out;
    if (k == 0) return out;

    unsigned need = 4 * bit_length(cfg.height_bound) + 96;
    if (cfg.precision_bits < need)
        throw PrecisionError("precision " + std::to_string(cfg.precision_bits) +
                             " bits is too low for height bound " +
                             int_str(cfg.height_bound) + "; need at least " +
                             std::to_string(need));

    PrecisionScope scope(cfg.precision_bits + 64);

    // Split off zero generators: exact zeros certainly, zero-straddling
    // disks heuristically.  Each contributes a unit relation.
    std::vector<int> live;  // indices into gens
    bool heuristic = false;
    for (int i = 0; i < k; ++i) {
        bool is_zero;
        if (gens[i].exact) {
            is_zero = (*gens[i].exact == 0);
        } else {
            is_zero = gens[i].value.abs() <= gens[i].radius;
            if (is_zero) heuristic = true;
        }
        if (is_zero) {
            std::vector<BigInt> e(k, BigInt(0));
            e[i] = 1;
            out.relations.push_back(std::move(e));
        } else {
            live.push_back(i);
        }
    }

    // Ambiguously close generators make the relation problem ill-posed.
    for (std::size_t a = 0; a < live.size(); ++a)
        for (std::size_t b = a + 1; b < live.size(); ++b) {
            const auto& ga = gens[live[a]];
            const auto& gb = gens[live[b]];
            if (ga.exact && gb.exact) continue;  // distinct or equal, exactly
            BigFloat d = (ga.value - gb.value).abs();
            if (d <= ga.radius + gb.radius)
                throw std::invalid_argument(
                    "generators " + std::to_string(live[a]) + " and " +
                    std::to_string(live[b]) + " have overlapping disks");
        }

    const int m = static_cast<int>(live.size());
    if (m == 0) {
        out.rank = 0;
        out.certainty = heuristic ? Certainty::heuristic : Certainty::exact;
        return out;
    }

    bool all_exact = true;
    for (int i : live)
        if (!gens[i].exact) { all_exact = false; break; }

    std::vector<std::vector<BigInt>> found;  // relations among live indices
    if (all_exact) {
        // Kernel of the 1 x m rational row.
        MatrixQ row(1, m);
        for (int j = 0; j < m; ++j) row(0, j) = *gens[live[j]].exact;
        for (auto& v : kernel_basis(row))
            found.push_back(
                detail::normalize_int_vector(detail::rat_vector_to_primitive(v)));
        out.rank = m - static_cast<int>(found.size());
    } else {
        heuristic = true;
        // Radii must leave room between a true relation's residual and the
        // acceptance threshold.
        BigFloat eps = pow2(-static_cast<long>(cfg.precision_bits / 2 + 48));
        BigFloat rad_cap = eps / (4 * BigFloat(m) * BigFloat(cfg.height_bound));
        for (int i : live)
            if (gens[i].radius > rad_cap)
                throw PrecisionError("generator radius too large for the "
                                     "requested precision and height bound");

        long scale_bits = static_cast<long>(cfg.precision_bits / 2 + 64);
        BigFloat scale = pow2(scale_bits);
        std::vector<std::vector<BigInt>> lattice(m,
            std::vector<BigInt>(m + 2, BigInt(0)));
        for (int j = 0; j < m; ++j) {
            const auto& g = gens[live[j]];
            lattice[j][j] = 1;
            lattice[j][m] = float_round(scale * g.value.re);
            lattice[j][m + 1] = float_round(scale * g.value.im);
        }
        lll_reduce(lattice);

        for (const auto& rowv : lattice) {
            std::vector<BigInt> a(rowv.begin(), rowv.begin() + m);
            bool nonzero = false;
            BigInt hmax = 0;
            for (const auto& x : a) {
                if (x != 0) nonzero = true;
                hmax = std::max(hmax, int_abs(x));
            }
            if (!nonzero || hmax > cfg.height_bound) continue;
            // Certified re-verification against the disks.
            CFloat s(BigFloat(0), BigFloat(0));
            BigFloat slack(0);
            for (int j = 0; j < m; ++j) {
                if (a[j] == 0) continue;
                const auto& g = gens[live[j]];
                s = s + CFloat(BigFloat(a[j]), BigFloat(0)) * g.value;
                slack += abs(BigFloat(a[j])) * g.radius;
            }
            BigFloat u = (s.abs() + slack) * (1 + pow2(-30)) +
                         BigFloat(m) * pow2(-static_cast<long>(cfg.precision_bits) - 16);
            if (u < eps) found.push_back(detail::normalize_int_vector(std::move(a)));
        }
        // Keep a maximal independent subset, in order of appearance.
        std::vector<std::vector<BigInt>> kept;
        for (auto& r : found) {
            kept.push_back(r);
            if (detail::int_matrix_rank(kept) < static_cast<int>(kept.size()))
                kept.pop_back();
        }
        found = std::move(kept);
        out.rank = m - static_cast<int>(found.size());
    }

    // Lift relations back to original indexing.
    for (const auto& r : found) {
        std::vector<BigInt> full(k, BigInt(0));
        for (int j = 0; j < m; ++j) full[live[j]] = r[j];
        out.relations.push_back(std::move(full));
    }
    out.certainty = heuristic ? Certainty::heuristic : Certainty::exact;
    return out;
}

}  // namespace lieact
