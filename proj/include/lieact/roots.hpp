#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "lieact/floatdefs.hpp"
#include "lieact/poly.hpp"

namespace lieact {

// One root of a rational polynomial.  Rational roots carry their exact value
// and a zero radius; the rest carry a certified disk: the true root lies
// within `radius` of `value`, and distinct roots have disjoint disks.
struct ApproxRoot {
    CFloat value;
    BigFloat radius;
    int multiplicity = 1;
    bool is_real = false;
    std::optional<Rational> exact;
};

namespace detail {

// Exact bisection of an isolating interval (lo, hi) for a squarefree integer
// polynomial with sign(p(lo)) != sign(p(hi)).  Narrows until hi - lo < width.
// If a midpoint happens to be a root it is reported exactly.
struct RefineOutcome {
    Rational lo, hi;
    std::optional<Rational> exact;
};

inline RefineOutcome refine_interval(const IntPoly& p, Rational lo, Rational hi,
                                     const Rational& width) {
    int slo = int_sign_at(p, lo);
    int shi = int_sign_at(p, hi);
    if (slo == 0) return {lo, lo, lo};
    if (shi == 0) return {hi, hi, hi};
    if (slo == shi) throw Error("refine_interval: no sign change");
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        int sm = int_sign_at(p, mid);
        if (sm == 0) return {mid, mid, mid};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi, std::nullopt};
}

// Isolating intervals for the real roots of a squarefree integer polynomial.
// Rational roots hit head-on during bisection are split off exactly and the
// polynomial is deflated and re-isolated, so the returned open intervals each
// contain exactly one irrational-or-unlucky real root and no exact entry is
// duplicated.
struct RealIsolation {
    std::vector<Rational> exact_roots;
    std::vector<std::pair<Rational, Rational>> intervals;  // open, one root each
    IntPoly deflated;  // input with the exact roots divided out; the
                       // intervals isolate roots of THIS polynomial
};

inline RealIsolation isolate_real_roots(IntPoly p) {
    RealIsolation out;
    for (bool restart = true; restart;) {
        restart = false;
        out.intervals.clear();
        if (int_poly_degree(p) <= 0) break;
        auto chain = sturm_chain(int_to_polyq(p));
        int total = sturm_variations_at_inf(chain, -1) - sturm_variations_at_inf(chain, +1);
        if (total == 0) break;
        // Smallest power-of-two box already holding every real root; the
        // Cauchy bound is only the fallback cap.  Counting against the
        // variations at infinity keeps the box certificate exact and spares
        // the chain from evaluations at huge rationals.
        Rational cap = cauchy_root_bound(p) + 1;
        Rational bound(2);
        while (bound < cap && sturm_count_interval(chain, -bound, bound) < total)
            bound *= bound;
        if (bound >= cap) bound = cap;
        // A power-of-two box edge can land exactly on a dyadic root; widen
        // until both edges are strictly off the root set (the Cauchy cap is
        // strict by construction, so this terminates).
        while (int_sign_at(p, -bound) == 0 || int_sign_at(p, bound) == 0)
            bound *= 2;
        std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
        while (!work.empty() && !restart) {
            auto [lo, hi] = work.back();
            work.pop_back();
            int count = sturm_count_interval(chain, lo, hi);
            if (count == 0) continue;
            if (count == 1) {
                out.intervals.emplace_back(lo, hi);
                continue;
            }
            Rational mid = (lo + hi) / 2;
            if (int_poly_eval(p, mid) == 0) {
                // Exact root: record, deflate by (den*x - num), start over.
                out.exact_roots.push_back(mid);
                PolyQ lin{-mid, Rational(1)};
                p = q_primitivize(poly_div_exact(int_to_polyq(p), lin));
                restart = true;
                break;
            }
            work.emplace_back(lo, mid);
            work.emplace_back(mid, hi);
        }
    }
    out.deflated = std::move(p);
    return out;
}

// All integer roots of an integer polynomial (not necessarily squarefree),
// without factoring any coefficients: isolate the real roots of the
// squarefree part, narrow each interval below width 1, and test the at most
// one integer candidate inside.
inline std::vector<BigInt> integer_roots(const IntPoly& g) {
    std::vector<BigInt> roots;
    if (int_poly_degree(g) <= 0) return roots;
    IntPoly sf = q_primitivize(squarefree_part(int_to_polyq(g)));
    RealIsolation iso = isolate_real_roots(sf);
    for (const auto& r : iso.exact_roots)
        if (den(r) == 1) roots.push_back(num(r));
    for (auto [lo, hi] : iso.intervals) {
        RefineOutcome ref = refine_interval(iso.deflated, lo, hi, Rational(1, 2));
        if (ref.exact) {
            if (den(*ref.exact) == 1) roots.push_back(num(*ref.exact));
            continue;
        }
        BigInt cand = rat_ceil(ref.lo);
        if (Rational(cand) < ref.hi && int_poly_eval(g, cand) == 0) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

// Exact rational roots with multiplicities, found by reducing to integer
// roots of the monic transform a_d^(d-1) p(s / a_d) and never factoring an
// integer.  Sorted ascending.
inline std::vector<std::pair<Rational, int>> rational_roots(const PolyQ& p) {
    std::vector<std::pair<Rational, int>> out;
    int d = poly_degree(p);
    if (d <= 0) return out;
    IntPoly f = q_primitivize(p);
    BigInt a = f[d];
    // Up to one harmless extra factor of a, this is the monic transform
    // a^(d-1) f(s/a), whose rational roots are the integers a*(roots of f).
    IntPoly g(d + 1);
    BigInt pw = 1;
    for (int k = d; k >= 0; --k) {
        g[k] = f[k] * pw;
        if (k > 0) pw *= a;
    }
    for (const BigInt& n : detail::integer_roots(g)) {
        Rational root(n, a);
        PolyQ lin{-root, Rational(1)};
        PolyQ rest = int_to_polyq(f);
        int mult = 0;
        while (true) {
            auto [q, r] = poly_divrem(rest, lin);
            if (!poly_is_zero(r)) break;
            ++mult;
            rest = std::move(q);
        }
        out.emplace_back(root, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Complex Horner evaluation with a running first-order rounding bound.
// err is an upper bound (modulo last-ulp noise, absorbed by the caller's
// safety factor) on |computed - true|.
struct EvalWithError {
    CFloat value;
    BigFloat err;
};

inline EvalWithError eval_int_poly(const IntPoly& p, const CFloat& z, unsigned prec_bits) {
    BigFloat eps = pow2(-static_cast<long>(prec_bits) + 3);
    BigFloat az = z.abs();
    CFloat v(BigFloat(0), BigFloat(0));
    BigFloat magnitude(0);  // Horner on |p| at |z|, scaled by eps as we go
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        v = v * z;
        CFloat c{BigFloat(*it), BigFloat(0)};
        v = v + c;
        magnitude = magnitude * az + abs(BigFloat(*it));
    }
    BigFloat err = magnitude * eps * BigFloat(4 * static_cast<int>(p.size()) + 4);
    return {v, err};
}

struct CertifiedDisk {
    CFloat center;
    BigFloat radius;  // upper bound; the disk contains exactly one root
};

// Lagrange-style inclusion radii: for pairwise distinct points z_i and a
// degree-n polynomial p, every disk D(z_i, n |p(z_i)| / (|lc| prod |z_i-z_j|))
// meets a root, and a connected component formed by k of the disks contains
// exactly k roots counted with multiplicity.  With disjoint disks and a
// squarefree p this certifies one simple root per disk.
inline std::vector<CertifiedDisk> inclusion_disks(const IntPoly& p,
                                                  const std::vector<CFloat>& pts,
                                                  unsigned prec_bits) {
    int n = int_poly_degree(p);
    BigFloat lc = abs(BigFloat(p[n]));
    BigFloat fudge = 1 + pow2(-30);
    std::vector<CertifiedDisk> disks;
    disks.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EvalWithError ev = eval_int_poly(p, pts[i], prec_bits);
        BigFloat numer = BigFloat(n) * (ev.value.abs() + ev.err);
        BigFloat denom = lc;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            BigFloat d = (pts[i] - pts[j]).abs();
            denom *= d / fudge;  // lower bound on the true distance
        }
        disks.push_back({pts[i], numer / denom * fudge});
    }
    return disks;
}

// Aberth-Ehrlich simultaneous iteration on a squarefree integer polynomial.
// Deterministic start: points staggered on circles inside the root bound,
// rotated off the real axis so conjugate symmetry cannot stall the updates.
// Fujiwara bound 2 max_k (|a_{n-k}| / |a_n|)^(1/k): within a factor 2 of the
// largest root magnitude, which matters when the coefficients span thousands
// of bits and the Cauchy bound would start the iteration absurdly far out.
inline BigFloat fujiwara_bound(const IntPoly& p) {
    int n = int_poly_degree(p);
    BigFloat lead = abs(BigFloat(p[n]));
    BigFloat best(0);
    for (int k = 1; k <= n; ++k) {
        if (p[n - k] == 0) continue;
        BigFloat t = pow(abs(BigFloat(p[n - k])) / lead, BigFloat(1) / k);
        if (t > best) best = t;
    }
    if (best == 0) best = 1;
    return 2 * best;
}

inline std::vector<CFloat> aberth(const IntPoly& p, unsigned prec_bits) {
    int n = int_poly_degree(p);
    std::vector<CFloat> z(n);
    BigFloat bound = fujiwara_bound(p);
    BigFloat pi(0);
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    for (int k = 0; k < n; ++k) {
        BigFloat r = bound * (BigFloat(1) / 2 + BigFloat(2 * k + 1) / (4 * n));
        BigFloat theta = 2 * pi * BigFloat(k) / n + BigFloat(2) / 5;
        z[k] = CFloat(r * cos(theta), r * sin(theta));
    }
    IntPoly dp = int_poly_derivative(p);
    BigFloat tol = pow2(-static_cast<long>(prec_bits) + 8);
    int max_iter = 60 + 10 * n;
    for (int iter = 0; iter < max_iter; ++iter) {
        BigFloat worst(0);
        for (int i = 0; i < n; ++i) {
            EvalWithError pv = eval_int_poly(p, z[i], prec_bits);
            EvalWithError dv = eval_int_poly(dp, z[i], prec_bits);
            if (dv.value.abs2() == 0) {
                // Degenerate point; nudge and keep going.
                z[i] = z[i] + CFloat(pow2(-static_cast<long>(iter) - 2), pow2(-static_cast<long>(iter) - 3));
                worst = bound;
                continue;
            }
            CFloat w = pv.value / dv.value;  // Newton step
            CFloat s(BigFloat(0), BigFloat(0));
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                s = s + CFloat(BigFloat(1), BigFloat(0)) / (z[i] - z[j]);
            }
            CFloat denom = CFloat(BigFloat(1), BigFloat(0)) - w * s;
            CFloat step = denom.abs2() == 0 ? w : w / denom;
            z[i] = z[i] - step;
            BigFloat sz = step.abs();
            if (sz > worst) worst = sz;
        }
        if (worst < tol) break;
    }
    return z;
}

}  // namespace detail

struct RootConfig {
    unsigned precision_bits = 256;  // target radius is 2^-(precision/2)
    unsigned escalation_cap = 1024;
};

// All complex roots of p with multiplicities, certified: rational roots are
// exact, irrational real roots come from sign-change bisection, nonreal roots
// from Aberth iteration with Lagrange inclusion disks, symmetrized so
// conjugate pairs are exact mirror images.  Roots of the same polynomial are
// certified pairwise distinct (disjoint disks); failure to certify within the
// precision cap raises IsolationError.
inline std::vector<ApproxRoot> complex_roots(const PolyQ& poly, RootConfig cfg = {}) {
    int deg = poly_degree(poly);
    if (deg < 0) throw Error("roots of the zero polynomial");
    std::vector<ApproxRoot> out;
    if (deg == 0) return out;

    // Near a root the Horner sum cancels down from coefficient scale, so the
    // working precision has to clear the coefficient size before escalation
    // can help.  The cap limits escalation beyond that inherent floor.
    unsigned coeff_bits = 0;
    for (const auto& c : q_primitivize(poly))
        coeff_bits = std::max(coeff_bits, static_cast<unsigned>(bit_length(c)));
    unsigned start = std::max({cfg.precision_bits, 64u, coeff_bits + 64u});
    unsigned cap = std::max(cfg.escalation_cap, start);
    for (unsigned prec = start;; prec *= 2) {
        if (prec > cap)
            throw IsolationError("root certification failed below " +
                                 std::to_string(cap) + " bits");
        PrecisionScope scope(prec + 64);
        BigFloat target = pow2(-static_cast<long>(cfg.precision_bits) / 2);
        out.clear();
        bool ok = true;

        for (const auto& sf : yun_squarefree(poly)) {
            // Exact rational roots first; deflate them away.
            IntPoly f = q_primitivize(sf.factor);
            for (const auto& [root, mult] : rational_roots(sf.factor)) {
                (void)mult;  // factor is squarefree, mult is 1 by construction
                ApproxRoot r;
                r.value = CFloat(root);
                r.radius = 0;
                r.multiplicity = sf.multiplicity;
                r.is_real = true;
                r.exact = root;
                out.push_back(std::move(r));
                f = q_primitivize(poly_div_exact(int_to_polyq(f), PolyQ{-root, Rational(1)}));
            }
            int df = int_poly_degree(f);
            if (df == 0) continue;

            // Irrational real roots by exact bisection.
            detail::RealIsolation iso = detail::isolate_real_roots(f);
            if (!iso.exact_roots.empty())
                throw Error("rational root survived deflation");  // cannot happen
            Rational width(1, 1);
            for (unsigned b = 0; b < prec / 2 + 4; ++b) width /= 2;
            int n_real = static_cast<int>(iso.intervals.size());
            for (auto [lo, hi] : iso.intervals) {
                detail::RefineOutcome ref =
                    detail::refine_interval(iso.deflated, lo, hi, width);
                if (ref.exact) throw Error("rational root survived deflation");
                ApproxRoot r;
                Rational mid = (ref.lo + ref.hi) / 2;
                r.value = CFloat(mid);
                // Full interval width: covers the half-width bound plus the
                // rounding of mid to working precision.
                r.radius = to_float(ref.hi - ref.lo);
                r.multiplicity = sf.multiplicity;
                r.is_real = true;
                out.push_back(std::move(r));
            }

            // Nonreal roots via Aberth, then certify.
            int n_nonreal = df - n_real;
            if (n_nonreal == 0) continue;
            std::vector<CFloat> pts = detail::aberth(f, prec);
            auto disks = detail::inclusion_disks(f, pts, prec);
            // The counting arguments below need one simple root per disk,
            // which holds only once the disks are pairwise disjoint.
            for (std::size_t i = 0; i < disks.size() && ok; ++i)
                for (std::size_t j = i + 1; j < disks.size(); ++j) {
                    BigFloat d = (disks[i].center - disks[j].center).abs();
                    if (d <= disks[i].radius + disks[j].radius) { ok = false; break; }
                }
            if (!ok) break;
            // Split claimed-real from claimed-nonreal by |Im| vs radius.
            std::vector<detail::CertifiedDisk> nonreal;
            int claimed_real = 0;
            for (const auto& d : disks) {
                if (abs(d.center.im) > d.radius)
                    nonreal.push_back(d);
                else
                    ++claimed_real;
            }
            if (claimed_real != n_real ||
                static_cast<int>(nonreal.size()) != n_nonreal) {
                ok = false;
                break;
            }
            // Pair conjugates: match each upper root with its mirror image.
            std::vector<bool> used(nonreal.size(), false);
            std::vector<detail::CertifiedDisk> uppers;
            for (std::size_t i = 0; i < nonreal.size() && ok; ++i) {
                if (used[i] || nonreal[i].center.im < 0) continue;
                bool matched = false;
                for (std::size_t j = 0; j < nonreal.size(); ++j) {
                    if (j == i || used[j] || nonreal[j].center.im > 0) continue;
                    BigFloat d = (nonreal[i].center.conj() - nonreal[j].center).abs();
                    if (d <= nonreal[i].radius + nonreal[j].radius) {
                        used[i] = used[j] = true;
                        uppers.push_back(nonreal[i]);
                        matched = true;
                        break;
                    }
                }
                if (!matched) ok = false;
            }
            if (!ok || 2 * uppers.size() != nonreal.size()) {
                ok = false;
                break;
            }
            for (const auto& u : uppers) {
                if (u.radius > target) { ok = false; break; }
                ApproxRoot r;
                r.value = u.center;
                r.radius = u.radius;
                r.multiplicity = sf.multiplicity;
                r.is_real = false;
                out.push_back(r);
                r.value = u.center.conj();
                out.push_back(r);
            }
            if (!ok) break;
        }
        if (!ok) continue;

        // Global distinctness: roots of coprime squarefree factors are
        // distinct, but their disks must also separate numerically.
        bool disjoint = true;
        for (std::size_t i = 0; i < out.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                BigFloat d = (out[i].value - out[j].value).abs();
                if (d <= out[i].radius + out[j].radius) { disjoint = false; break; }
            }
        if (!disjoint) continue;

        // Real roots first (ascending), then nonreal by (re, im).  Certified
        // separation makes the float comparisons unambiguous; keeping the two
        // groups apart avoids order flips from the tiny imaginary residue an
        // axis-adjacent computed root may carry.
        std::sort(out.begin(), out.end(), [](const ApproxRoot& a, const ApproxRoot& b) {
            if (a.is_real != b.is_real) return a.is_real;
            if (a.value.re != b.value.re) return a.value.re < b.value.re;
            return a.value.im < b.value.im;
        });
        return out;
    }
}

}  // namespace lieact
