#pragma once

#include "logtan/function_spec.hpp"

#include <utility>

namespace logtan {

struct SeriesPartialSum {
    int N = 0;
    double value = 0.0;
    /// Last term added; a truncation heuristic for geometric tails.
    double last_term = 0.0;
};

/// -sum_{n=0}^{N} sin(2(2n+1)x) / (2n+1)^2, which tends to int_0^x log tan.
double bradley_primitive(double x, int N);

/// log x + 2 sum_{k=1}^{K} (2^(2k-1) - 1)/k zeta(2k) (x/pi)^(2k), for 0 < x < pi/2.
double logtan_power_series(double x, int K);

/// (e^(pi z) + 1) sum_{n=1}^{N} (-1)^(n-1) (1 - 2^-(2n+1)) zeta(2n+1) z^(2n-1)
/// = int_0^{pi/2} e^(2zx) log tan as N grows. Requires |z| < 1.
double exp_integral_series(double z, int N);

/// (quadrature of sinh(2zx - pi z/2) log tan,
///  2 cosh(pi z/2) sum_{n=1}^{N} (-1)^(n-1) (1 - 2^-(2n+1)) zeta(2n+1) z^(2n-1)).
/// Requires |z| < 1.
std::pair<double, double> sinh_identity_check(double z, int N, double tol = 1e-12);

/// (sin(pi z)/(4z)) [psi((1+z)/2) + psi((1-z)/2) - 2 psi(1/2)]
/// = int_0^{pi/2} cos(2zx) log tan. Returns the limit 0 at z = 0; requires |z| < 1.
double cos_integral_F(double z);

/// S_N(z) = sum_{n=1}^{N} (1 - 2^-(2n+1)) zeta(2n+1) z^(2n-1).
SeriesPartialSum partial_sum_S(double z, int N);

/// int_0^{pi/2} f(zx) log tan x dx through the odd-derivative series
///   sum_{k=1}^{K} (-1)^(k-1)/2^(2k-1) [f^(2k-1)(0) + f^(2k-1)(pi z/2)]
///                 (1 - 2^-(2k+1)) zeta(2k+1) z^(2k-1).
/// Accepts exp2z, cos2z, sinh_shift and polynomial kinds; |z| <= 1.
double smooth_L_series(const FunctionSpec& f, double z, int K);

/// (pi^2/7) (1 - 2 sum_{n=1}^{N} zeta(2n) / (2^(2n) (2n+1)(n+1))).
double euler_zeta3_series(int N);

}  // namespace logtan
