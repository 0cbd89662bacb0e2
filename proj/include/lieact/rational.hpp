#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "lieact/errors.hpp"

namespace lieact {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const BigInt& n) { return n.sign(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline BigInt int_abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

// Largest integer <= q.  GMP's fdiv gives floor semantics for any sign.
inline BigInt rat_floor(const Rational& q) {
    BigInt f;
    mpz_fdiv_q(f.backend().data(), num(q).backend().data(), den(q).backend().data());
    return f;
}

inline BigInt rat_ceil(const Rational& q) {
    BigInt c;
    mpz_cdiv_q(c.backend().data(), num(q).backend().data(), den(q).backend().data());
    return c;
}

// Nearest integer, ties away from zero, needed when rounding scaled floats
// and inside lattice reduction.
inline BigInt rat_round(const Rational& q) {
    if (q >= 0) return rat_floor(q + Rational(1, 2));
    return rat_ceil(q - Rational(1, 2));
}

inline BigInt int_gcd(const BigInt& a, const BigInt& b) { return gcd(a, b); }
inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return int_abs(a / gcd(a, b) * b);
}

// Parses "p", "-p", or "p/q".  Whitespace is not accepted; callers tokenize
// first.  The result is canonical (lowest terms, positive denominator).
inline Rational rat_parse(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        if (q == 0) throw Error("zero denominator in rational literal '" + text + "'");
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        throw Error("bad rational literal '" + text + "'");
    }
}

inline std::string rat_str(const Rational& q) { return q.str(); }
inline std::string int_str(const BigInt& n) { return n.str(); }

// ceil(log2(|n|)) for n != 0; 0 for n == 0.  Used for coefficient size
// bookkeeping when choosing float precision.
inline unsigned bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return static_cast<unsigned>(mpz_sizeinbase(n.backend().data(), 2));
}

inline std::vector<Rational> rat_row(std::initializer_list<long> xs) {
    std::vector<Rational> r;
    r.reserve(xs.size());
    for (long x : xs) r.emplace_back(x);
    return r;
}

}  // namespace lieact
