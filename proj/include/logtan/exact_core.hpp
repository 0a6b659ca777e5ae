#pragma once

#include "logtan/pi_expr.hpp"
#include "logtan/polynomial.hpp"
#include "logtan/rational.hpp"
#include "logtan/zeta_expr.hpp"

namespace logtan {

/// Exact Bernoulli number B_n with B_1 = -1/2. Backed by a process-wide
/// memo table that is extended under a lock and never shrinks.
Rational bernoulli(int n);

/// Euler polynomial E_n(x), from E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x).
Polynomial euler_poly(int n);

/// E_n(2x/pi) as a polynomial in x; the x^k coefficient carries pi^-k.
Polynomial euler_poly_scaled(int n);

/// Shifted Legendre polynomial on [0, pi/2] from the explicit binomial sum
/// (-1)^n sum_k C(n,k) C(n+k,k) (-2/pi)^k x^k.
Polynomial shifted_legendre(int n);

/// Same polynomial built from the Rodrigues formula
/// (-1)^n/n! (2/pi)^n d^n/dx^n [x^n (pi/2 - x)^n]. Kept as an independent route.
Polynomial shifted_legendre_rodrigues(int n);

/// m-th derivative of the shifted Legendre polynomial of index n at x = 0.
/// Throws std::domain_error unless 0 <= m <= n.
PiExpr shifted_legendre_deriv_at_zero(int n, int m);

PiExpr poly_derivative_at(const Polynomial& p, int order, const PiExpr& point);

/// pi/2 as a PiExpr.
inline PiExpr half_pi() { return PiExpr::pi_power(1, Rational(1, 2)); }

}  // namespace logtan
