#include "logtan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

namespace logtan {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kQuarterPi = std::numbers::pi / 4;
constexpr int kMinLevels = 3;
// Beyond this q = exp(-pi sinh t) the node distance is below ~1e-300.
constexpr double kMinQ = 1e-300;

double sample(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << "non-finite integrand value " << v << " at interior node x = " << x;
        throw QuadratureError(os.str());
    }
    return v;
}

struct PieceIntegrand {
    std::function<double(double)> left;   // x in [a, pi/4]
    std::function<double(double)> right;  // u = pi/2 - x in [0, pi/4]
};

void check_range(double a, double b, double tol) {
    if (!(a >= 0.0) || !(b > a) || b > kHalfPi + 1e-15)
        throw std::invalid_argument("integration range must satisfy 0 <= a < b <= pi/2");
    if (!(tol >= kMinTolerance)) throw std::invalid_argument("tolerance must be >= 1e-13");
}

QuadratureResult integrate_split(const PieceIntegrand& g, double a, double b, double tol, int max_levels) {
    check_range(a, b, tol);
    b = std::min(b, kHalfPi);
    QuadratureResult total;
    total.converged = true;
    auto accumulate = [&total](const QuadratureResult& r) {
        total.value += r.value;
        total.est_error += r.est_error;
        total.levels_used = std::max(total.levels_used, r.levels_used);
        total.converged = total.converged && r.converged;
    };
    const bool has_left = a < kQuarterPi;
    const bool has_right = b > kQuarterPi;
    const double piece_tol = (has_left && has_right) ? tol / 2 : tol;
    if (has_left) accumulate(tanh_sinh(g.left, a, std::min(b, kQuarterPi), piece_tol, max_levels));
    if (has_right)
        accumulate(tanh_sinh(g.right, kHalfPi - b, kHalfPi - std::max(a, kQuarterPi), piece_tol, max_levels));
    return total;
}

}  // namespace

int default_max_levels() {
    if (const char* env = std::getenv("LOGTAN_MAX_LEVELS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 24) return static_cast<int>(v);
    }
    return kDefaultMaxLevels;
}

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                           int max_levels) {
    const double width = b - a;
    const double half_width = width / 2;

    // Contribution of the node pair at +-t (t > 0) to the weighted sum.
    auto pair = [&](double t, bool& exhausted) {
        const double q = std::exp(-std::numbers::pi * std::sinh(t));
        if (q < kMinQ) {
            exhausted = true;
            return 0.0;
        }
        const double d = width * q / (1 + q);
        const double w = half_width * std::numbers::pi / 2 * std::cosh(t) * 4 * q / ((1 + q) * (1 + q));
        // A node that rounds onto an endpoint is dropped; its weight is below
        // ulp(endpoint) relative to the interval.
        const double left = a + d;
        const double right = b - d;
        double acc = 0.0;
        if (left > a) acc += sample(f, left);
        if (right < b) acc += sample(f, right);
        return w * acc;
    };

    double h = 1.0;
    double sum = half_width * std::numbers::pi / 2 * sample(f, a + half_width);
    for (int k = 1;; ++k) {
        bool exhausted = false;
        sum += pair(k * h, exhausted);
        if (exhausted) break;
    }
    QuadratureResult r;
    r.value = h * sum;
    r.est_error = std::fabs(r.value);

    for (int level = 1; level <= max_levels; ++level) {
        h /= 2;
        for (int k = 1;; k += 2) {
            bool exhausted = false;
            sum += pair(k * h, exhausted);
            if (exhausted) break;
        }
        const double next = h * sum;
        r.est_error = std::fabs(next - r.value);
        r.value = next;
        r.levels_used = level;
        if (level >= kMinLevels && r.est_error < tol) {
            r.converged = true;
            break;
        }
    }
    return r;
}

QuadratureResult integrate_logtan(const FunctionSpec& f, double a, double b, double tol, int max_levels) {
    const PieceIntegrand g{
        [&f](double x) { return f.value(x) * std::log(std::tan(x)); },
        [&f](double u) { return -f.value_reflected(u) * std::log(std::tan(u)); },
    };
    return integrate_split(g, a, b, tol, max_levels);
}

QuadratureResult integrate_plain(const FunctionSpec& f, double a, double b, double tol, int max_levels) {
    const PieceIntegrand g{
        [&f](double x) { return f.value(x); },
        [&f](double u) { return f.value_reflected(u); },
    };
    return integrate_split(g, a, b, tol, max_levels);
}

QuadratureResult inner_product(const FunctionSpec& f, const FunctionSpec& g, double tol, int max_levels) {
    const double scale = 2 / std::numbers::pi;
    const PieceIntegrand fg{
        [&](double x) { return f.value(x) * g.value(x); },
        [&](double u) { return f.value_reflected(u) * g.value_reflected(u); },
    };
    QuadratureResult r = integrate_split(fg, 0.0, kHalfPi, std::max(tol / scale, kMinTolerance), max_levels);
    r.value *= scale;
    r.est_error *= scale;
    return r;
}

double norm2(const FunctionSpec& f, double tol) { return std::sqrt(inner_product(f, f, tol).value); }

}  // namespace logtan
