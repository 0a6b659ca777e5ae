#pragma once

#include "logtan/function_spec.hpp"

#include <vector>

namespace logtan {

/// Shifted-Legendre coefficients c_n = (2n+1) <f, P~n>, n = 0..N.
struct LegendreCoeffs {
    FunctionSpec source;
    int N = 0;
    std::vector<double> coeffs;

    /// <f, P~n> = c_n / (2n+1)
    double inner(int n) const { return coeffs.at(static_cast<std::size_t>(n)) / (2 * n + 1); }
    /// sum_{n<=N} c_n P~n(x)
    double reconstruct(double x) const;
};

/// Coefficients of f up to degree N, each by quadrature at tol 1e-12.
LegendreCoeffs expand(const FunctionSpec& f, int N);

/// Truncated representation of L(f) through the first N odd basis elements
/// P~1, P~3, ..., P~(2N-1).
struct ApproxL {
    int N = 0;
    /// c_table[k-1] = c_{N,k}, k = 1..N
    std::vector<long double> c_table;
    /// sum_k c_{N,k} (-1)^(k-1) pi^-(2k-1) (1 - 2^-(2k+1)) zeta(2k+1)
    double value = 0.0;
    /// sum_j (4j-1) <f, P~(2j-1)> L(P~(2j-1)), the same sum taken in j order.
    double value_by_index = 0.0;
    /// <f, P~(2j-1)>, j = 1..N
    std::vector<double> odd_inner;
};

/// Throws std::invalid_argument for N < 1.
ApproxL approx_L(const FunctionSpec& f, int N);

/// (pi/2)^4 - sum_{n<=N} (4n-1) L(P~(2n-1))^2.
double parseval_defect(int N);

/// sum_{n<=N} (4n-1) byerly_coeff(n) L(P~(2n-1)).
double catalan_series(int N);

/// 41 equispaced points on [0.2, pi/2 - 0.2].
std::vector<double> default_reconstruction_grid();

/// max |log tan x - (2/pi) sum_{n<=N} (4n-1) L(P~(2n-1)) P~(2n-1)(x)| over the samples.
/// Throws std::invalid_argument for samples outside (0, pi/2).
double logtan_reconstruction_error(int N, const std::vector<double>& samples = default_reconstruction_grid());

}  // namespace logtan
