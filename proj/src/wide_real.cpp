#include "logtan/wide_real.hpp"

#include <climits>
#include <utility>

namespace logtan {

WideReal::WideReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

WideReal::WideReal(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

WideReal::WideReal(const Rational& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

WideReal::WideReal(const WideReal& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

WideReal::WideReal(WideReal&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

WideReal& WideReal::operator=(const WideReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

WideReal& WideReal::operator=(WideReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

WideReal::~WideReal() { mpfr_clear(v_); }

WideReal WideReal::pi(mpfr_prec_t bits) {
    WideReal r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

long WideReal::exponent2() const {
    if (mpfr_zero_p(v_)) return LONG_MIN;
    return mpfr_get_exp(v_);
}

WideReal WideReal::abs() const {
    WideReal r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

WideReal WideReal::pow(long n) const {
    WideReal r(precision());
    mpfr_pow_si(r.v_, v_, n, MPFR_RNDN);
    return r;
}

void WideReal::widen_to(mpfr_prec_t bits) {
    if (bits > precision()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

WideReal& WideReal::operator+=(const WideReal& rhs) {
    widen_to(rhs.precision());
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

WideReal& WideReal::operator-=(const WideReal& rhs) {
    widen_to(rhs.precision());
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

WideReal& WideReal::operator*=(const WideReal& rhs) {
    widen_to(rhs.precision());
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

WideReal& WideReal::operator/=(const WideReal& rhs) {
    widen_to(rhs.precision());
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

WideReal WideReal::operator-() const {
    WideReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

}  // namespace logtan
