#pragma once

#include "logtan/rational.hpp"

#include <mpfr.h>

namespace logtan {

/// Owning wrapper over an MPFR float with a fixed per-object precision.
/// Binary operations take the larger precision of their operands.
class WideReal {
public:
    explicit WideReal(mpfr_prec_t bits);
    WideReal(long value, mpfr_prec_t bits);
    WideReal(const Rational& value, mpfr_prec_t bits);
    WideReal(const WideReal& other);
    WideReal(WideReal&& other) noexcept;
    WideReal& operator=(const WideReal& other);
    WideReal& operator=(WideReal&& other) noexcept;
    ~WideReal();

    static WideReal pi(mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Binary exponent e with 2^(e-1) <= |x| < 2^e; LONG_MIN for zero.
    long exponent2() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    WideReal abs() const;
    /// x^n for an integer n (negative allowed).
    WideReal pow(long n) const;

    WideReal& operator+=(const WideReal& rhs);
    WideReal& operator-=(const WideReal& rhs);
    WideReal& operator*=(const WideReal& rhs);
    WideReal& operator/=(const WideReal& rhs);
    WideReal operator-() const;

    friend WideReal operator+(WideReal a, const WideReal& b) { return a += b; }
    friend WideReal operator-(WideReal a, const WideReal& b) { return a -= b; }
    friend WideReal operator*(WideReal a, const WideReal& b) { return a *= b; }
    friend WideReal operator/(WideReal a, const WideReal& b) { return a /= b; }
    friend bool operator<(const WideReal& a, const WideReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

private:
    void widen_to(mpfr_prec_t bits);

    mpfr_t v_;
};

}  // namespace logtan
