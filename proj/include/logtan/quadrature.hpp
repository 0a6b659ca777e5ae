#pragma once

#include "logtan/function_spec.hpp"

#include <functional>
#include <stdexcept>

namespace logtan {

struct QuadratureResult {
    double value = 0.0;
    /// |S_level - S_(level-1)| summed over sub-intervals; heuristic only.
    double est_error = 0.0;
    int levels_used = 0;
    bool converged = false;
};

/// Raised when an interior node produces a non-finite sample.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxLevels = 12;
inline constexpr double kMinTolerance = 1e-13;

/// Refinement depth: LOGTAN_MAX_LEVELS when set to a positive integer, else 12.
int default_max_levels();

/// Tanh-sinh rule on [a, b]. Nodes are formed as a + d and b - d with d
/// computed directly, so an endpoint at 0 is resolved down to ~1e-300;
/// nodes that round onto an endpoint are skipped, never sampled. Each level
/// halves the step; convergence is declared once two successive levels
/// (from level 3 on) differ by < tol.
QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                           int max_levels = default_max_levels());

/// int_a^b f(x) log(tan x) dx for 0 <= a < b <= pi/2. The range is split at
/// pi/4 and the upper part is integrated in u = pi/2 - x, so both
/// logarithmic endpoint singularities sit at u = 0.
QuadratureResult integrate_logtan(const FunctionSpec& f, double a, double b, double tol,
                                  int max_levels = default_max_levels());

/// int_a^b f(x) dx, same splitting.
QuadratureResult integrate_plain(const FunctionSpec& f, double a, double b, double tol,
                                 int max_levels = default_max_levels());

/// <f, g> = (2/pi) int_0^{pi/2} f g dx.
QuadratureResult inner_product(const FunctionSpec& f, const FunctionSpec& g, double tol,
                               int max_levels = default_max_levels());

/// ||f||_2 = sqrt(<f, f>).
double norm2(const FunctionSpec& f, double tol = 1e-12);

}  // namespace logtan
