#pragma once

#include "logtan/pi_expr.hpp"
#include "logtan/wide_real.hpp"
#include "logtan/zeta_expr.hpp"

namespace logtan {

/// Native-precision value with an a priori truncation bound (not an interval).
struct NumericValue {
    long double value = 0.0L;
    long double err_bound = 0.0L;
};

inline constexpr long double kEulerGamma = 0.57721566490153286060651209008240243104215933593992L;

/// zeta(s) for integer s >= 2. Throws std::domain_error for s < 2.
NumericValue zeta_int(int s);

/// zeta(2n) = (-1)^(n-1) 2^(2n) B_(2n) / (2 (2n)!) * pi^(2n), exactly.
PiExpr zeta_even_exact(int n);

/// Catalan's constant by Cohen-Villegas-Zagier acceleration of sum (-1)^k/(2k+1)^2.
NumericValue catalan();

/// psi(x) for x > 0 via upward recurrence and the Bernoulli asymptotic series.
NumericValue digamma(long double x);

NumericValue eval_pi_expr(const PiExpr& e);
NumericValue eval_zeta_expr(const ZetaExpr& e);

// Wide-precision layer used where exact coefficients cancel heavily.

/// zeta(s) by direct summation plus Euler-Maclaurin correction at `bits` precision.
WideReal zeta_wide(int s, mpfr_prec_t bits);

/// Precision (bits) that leaves at least 64 good bits after the worst-case
/// cancellation among the terms of `e`.
mpfr_prec_t working_precision(const ZetaExpr& e);
mpfr_prec_t working_precision(const PiExpr& e);

WideReal eval_wide(const PiExpr& e, mpfr_prec_t bits);
WideReal eval_wide(const ZetaExpr& e, mpfr_prec_t bits);

}  // namespace logtan
