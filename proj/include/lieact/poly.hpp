#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lieact/rational.hpp"

namespace lieact {

// Univariate polynomials, coefficient vectors stored low degree first.
// PolyQ is the general-purpose form; IntPoly (primitive integer
// coefficients) is what the root machinery works on.
using PolyQ = std::vector<Rational>;
using IntPoly = std::vector<BigInt>;

inline void poly_trim(PolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline PolyQ poly_trimmed(PolyQ p) {
    poly_trim(p);
    return p;
}

inline int poly_degree(const PolyQ& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
}

inline bool poly_is_zero(const PolyQ& p) { return poly_degree(p) < 0; }

inline PolyQ poly_make(std::initializer_list<long> coeffs) {
    PolyQ p;
    for (long c : coeffs) p.emplace_back(c);
    poly_trim(p);
    return p;
}

inline PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

inline PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

inline PolyQ poly_scale(const Rational& s, const PolyQ& a) {
    if (s == 0) return {};
    PolyQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    PolyQ r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Euclidean division a = q b + r with deg r < deg b.
inline std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& a, const PolyQ& b) {
    int db = poly_degree(b);
    if (db < 0) throw Error("polynomial division by zero");
    PolyQ r = poly_trimmed(a);
    int da = poly_degree(r);
    if (da < db) return {{}, r};
    PolyQ q(da - db + 1, Rational(0));
    Rational lb_inv = Rational(1) / b[db];
    for (int k = da - db; k >= 0; --k) {
        int dr = poly_degree(r);
        if (dr != db + k) continue;
        Rational c = r[dr] * lb_inv;
        q[k] = c;
        for (int j = 0; j <= db; ++j) r[k + j] -= c * b[j];
        poly_trim(r);
    }
    return {q, r};
}

inline PolyQ poly_div_exact(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!poly_is_zero(r)) throw Error("inexact polynomial division");
    return q;
}

inline PolyQ poly_derivative(const PolyQ& p) {
    if (p.size() <= 1) return {};
    PolyQ d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p[i];
    poly_trim(d);
    return d;
}

inline Rational poly_eval(const PolyQ& p, const Rational& x) {
    Rational v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

inline int poly_sign_at(const PolyQ& p, const Rational& x) {
    return sign_of(poly_eval(p, x));
}

inline PolyQ poly_monic(const PolyQ& p) {
    int d = poly_degree(p);
    if (d < 0) return {};
    return poly_scale(Rational(1) / p[d], poly_trimmed(p));
}

inline std::string poly_str(const PolyQ& p, const std::string& var = "t") {
    int d = poly_degree(p);
    if (d < 0) return "0";
    std::string s;
    for (int k = d; k >= 0; --k) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        bool neg = c < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rational a = rat_abs(c);
        if (k == 0) {
            s += rat_str(a);
        } else {
            if (a != 1) s += rat_str(a) + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

// Scales a rational polynomial by the unique positive rational that makes it
// primitive integer.  Positive scaling preserves signs everywhere, which the
// Sturm machinery depends on.
inline IntPoly q_primitivize(const PolyQ& p) {
    PolyQ t = poly_trimmed(p);
    if (t.empty()) return {};
    BigInt l = 1;
    for (const auto& c : t) l = int_lcm(l, den(c));
    IntPoly z(t.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        z[i] = num(t[i]) * (l / den(t[i]));
        g = int_gcd(g, z[i]);
    }
    for (auto& c : z) c /= g;
    return z;
}

inline PolyQ int_to_polyq(const IntPoly& p) {
    PolyQ q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i];
    return q;
}

inline int int_poly_degree(const IntPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
}

inline Rational int_poly_eval(const IntPoly& p, const Rational& x) {
    Rational v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

inline BigInt int_poly_eval(const IntPoly& p, const BigInt& x) {
    BigInt v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

inline int int_sign_at(const IntPoly& p, const Rational& x) {
    return sign_of(int_poly_eval(p, x));
}

inline IntPoly int_poly_derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = BigInt(static_cast<long>(i)) * p[i];
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

namespace detail_poly {

inline IntPoly int_primitive_part(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    BigInt g = 0;
    for (const auto& c : p) g = int_gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
    return p;
}

// Pseudo-remainder scaled by an even power of the divisor's leading
// coefficient, so the result is a POSITIVE integer multiple of the true
// rational remainder.  That keeps it usable inside sign-sensitive chains.
inline IntPoly int_pseudo_rem_pos(IntPoly r, const IntPoly& b) {
    int db = int_poly_degree(b);
    if (db < 0) throw Error("pseudo-remainder by zero");
    const BigInt& lb = b[db];
    long scalings = 0;
    while (int_poly_degree(r) >= db) {
        int dr = int_poly_degree(r);
        BigInt lead = r[dr];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= lead * b[j];
        r.resize(dr);  // leading term cancels exactly
        while (!r.empty() && r.back() == 0) r.pop_back();
        ++scalings;
    }
    if (scalings % 2 != 0)
        for (auto& c : r) c *= lb;
    return r;
}

}  // namespace detail_poly

// Primitive PRS gcd over the integers, positive leading coefficient.
inline IntPoly int_poly_gcd(IntPoly a, IntPoly b) {
    a = detail_poly::int_primitive_part(std::move(a));
    b = detail_poly::int_primitive_part(std::move(b));
    if (int_poly_degree(a) < int_poly_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = detail_poly::int_primitive_part(
            detail_poly::int_pseudo_rem_pos(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Monic gcd over Q, computed through the primitive integer PRS to keep the
// intermediate coefficients integral.
inline PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ ta = poly_trimmed(a), tb = poly_trimmed(b);
    if (poly_is_zero(ta)) return poly_monic(tb);
    if (poly_is_zero(tb)) return poly_monic(ta);
    IntPoly g = int_poly_gcd(q_primitivize(ta), q_primitivize(tb));
    return poly_monic(int_to_polyq(g));
}

inline PolyQ squarefree_part(const PolyQ& p) {
    if (poly_degree(p) <= 0) return poly_monic(p);
    return poly_div_exact(poly_monic(p), poly_gcd(p, poly_derivative(p)));
}

// Yun's algorithm: p = const * prod factor_i ^ mult_i with the factors
// squarefree and pairwise coprime.  Factors come back primitive integer with
// positive leading coefficient, sorted by multiplicity.
struct SquarefreeFactor {
    PolyQ factor;
    int multiplicity = 0;
};

inline std::vector<SquarefreeFactor> yun_squarefree(const PolyQ& p) {
    int d = poly_degree(p);
    if (d < 0) throw Error("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (d == 0) return out;
    PolyQ f = poly_monic(p);
    PolyQ fp = poly_derivative(f);
    PolyQ g = poly_gcd(f, fp);
    PolyQ b = poly_div_exact(f, g);
    PolyQ c = poly_div_exact(fp, g);
    PolyQ z = poly_sub(c, poly_derivative(b));
    int i = 1;
    while (poly_degree(b) > 0) {
        PolyQ a = poly_gcd(b, z);
        if (poly_degree(a) > 0) {
            IntPoly prim = q_primitivize(a);
            if (prim.back() < 0)
                for (auto& x : prim) x = -x;
            out.push_back({int_to_polyq(prim), i});
        }
        b = poly_div_exact(b, a);
        z = poly_sub(poly_div_exact(z, a), poly_derivative(b));
        ++i;
    }
    return out;
}

// Sturm chain with primitive integer entries.  Each step takes a positive
// integer multiple of the exact remainder (pseudo-remainder with an even
// leading-coefficient power), negates it, and strips the content; the sign
// sequence agrees with the textbook chain at every point.
inline std::vector<IntPoly> sturm_chain(const PolyQ& p) {
    std::vector<IntPoly> chain;
    PolyQ f = poly_trimmed(p);
    if (poly_is_zero(f)) throw Error("Sturm chain of the zero polynomial");
    chain.push_back(q_primitivize(f));
    PolyQ fp = poly_derivative(f);
    if (poly_is_zero(fp)) return chain;
    chain.push_back(q_primitivize(fp));
    while (true) {
        IntPoly r = detail_poly::int_pseudo_rem_pos(chain[chain.size() - 2],
                                                    chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(detail_poly::int_primitive_part(std::move(r)));
    }
    return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int sturm_variations_at(const std::vector<IntPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(int_sign_at(f, x));
    return sign_variations(signs);
}

// dir > 0 for +infinity, dir < 0 for -infinity.
inline int sturm_variations_at_inf(const std::vector<IntPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) {
        int d = int_poly_degree(f);
        int s = sign_of(f[d]);
        if (dir < 0 && d % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

// Number of distinct real roots in the half-open interval (a, b].
inline int sturm_count_interval(const std::vector<IntPoly>& chain, const Rational& a,
                                const Rational& b) {
    if (a >= b) throw Error("empty Sturm interval");
    return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

inline int count_distinct_real_roots(const PolyQ& p) {
    if (poly_degree(p) <= 0) return 0;
    auto chain = sturm_chain(p);
    return sturm_variations_at_inf(chain, -1) - sturm_variations_at_inf(chain, +1);
}

// 1 + max |a_i| / |a_d|: every complex root has absolute value below this.
inline Rational cauchy_root_bound(const IntPoly& p) {
    int d = int_poly_degree(p);
    if (d < 0) throw Error("root bound of the zero polynomial");
    BigInt m = 0;
    for (int i = 0; i < d; ++i) m = std::max(m, int_abs(p[i]));
    return Rational(1) + Rational(m, int_abs(p[d]));
}

}  // namespace lieact
