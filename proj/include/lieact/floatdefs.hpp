#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

#include "lieact/rational.hpp"

namespace lieact {

using BigFloat = boost::multiprecision::mpfr_float;

// boost's mpfr wrapper counts precision in decimal digits; the numeric code
// here reasons in bits throughout, so convert with a little headroom.
inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 4;
}

// RAII bump of the thread default precision.  Every BigFloat constructed
// inside the scope carries at least `bits` of mantissa.
class PrecisionScope {
  public:
    explicit PrecisionScope(unsigned bits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

inline BigFloat to_float(const Rational& q) {
    return BigFloat(num(q)) / BigFloat(den(q));
}

inline BigFloat pow2(long e) {
    BigFloat r(1);
    if (e >= 0) {
        mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    } else {
        mpfr_div_2si(r.backend().data(), r.backend().data(), -e, MPFR_RNDN);
    }
    return r;
}

inline BigInt float_round(const BigFloat& x) {
    BigFloat r = round(x);
    BigInt n;
    mpfr_get_z(n.backend().data(), r.backend().data(), MPFR_RNDN);
    return n;
}

// Minimal complex number over BigFloat.  boost has no mpfr complex adaptor
// in this installation, and the root finder only needs ring operations,
// absolute values and division.
struct CFloat {
    BigFloat re, im;

    CFloat() : re(0), im(0) {}
    CFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit CFloat(const Rational& q) : re(to_float(q)), im(0) {}

    CFloat operator+(const CFloat& o) const { return {re + o.re, im + o.im}; }
    CFloat operator-(const CFloat& o) const { return {re - o.re, im - o.im}; }
    CFloat operator*(const CFloat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CFloat operator/(const CFloat& o) const {
        BigFloat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    CFloat operator-() const { return {-re, -im}; }
    CFloat conj() const { return {re, -im}; }

    BigFloat abs2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(abs2()); }
};

inline CFloat operator*(const BigFloat& s, const CFloat& z) {
    return {s * z.re, s * z.im};
}

inline std::string float_str(const BigFloat& x, unsigned digits = 17) {
    return x.str(digits);
}

}  // namespace lieact
