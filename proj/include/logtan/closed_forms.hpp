#pragma once

#include "logtan/exact_core.hpp"

namespace logtan {

enum class Parity { even, odd };

/// L(x^n) as produced by the floor-indexed moment formula.
struct MomentResult {
    ZetaExpr value;
    int degree = 0;
};

/// Exact L(P) = int_0^{pi/2} P(x) log(tan x) dx:
///   sum_{k=1}^{floor((m+1)/2)} (-1)^(k-1)/2^(2k-1) [P^(2k-1)(pi/2) + P^(2k-1)(0)]
///                                (1 - 2^-(2k+1)) zeta(2k+1)
/// Constant polynomials give the zero expression.
ZetaExpr exact_L(const Polynomial& p);

/// L(x^n) from the moment formula with the delta(n) odd-degree term.
/// Computed independently of exact_L(); the two must agree structurally.
MomentResult moment(int n);

/// int_0^{pi/2} E_{2n}(2x/pi) log tan (parity even, always 0) or
/// E_{2n-1}(2x/pi) log tan (parity odd).
ZetaExpr euler_integral(int n, Parity parity);

/// int_0^{pi/4} E_{2n-1}(2x/pi) log tan, half of the odd full-interval value.
ZetaExpr euler_integral_half(int n);

/// int_0^{pi/2} E_{2n}(2x/pi + y) log tan (even) or E_{2n-1}(2x/pi + y) log tan (odd).
ZetaExpr euler_translated(int n, Parity parity, const Rational& y);

/// int_0^{pi/2} cos(2kx) log tan: 0 for even k, -pi/(2k) for odd k.
PiExpr cos_lemma(int k);

/// L of the shifted Legendre polynomial with the given index (>= 1).
/// Even indices vanish; odd index 2n-1 uses the binomial closed form.
/// Throws std::domain_error for index < 1.
ZetaExpr legendre_L_coeff(int index);

/// (-1)^(n-1) C(2n-2, n-1) / (2^(2n) n) = -(2/pi) int_0^{pi/4} P~_{2n-1}(x) dx.
Rational byerly_coeff(int n);

}  // namespace logtan
