#include "logtan/series.hpp"

#include "logtan/constants.hpp"
#include "logtan/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

namespace logtan {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

void require_terms(int N, const char* what) {
    if (N < 1) throw std::invalid_argument(std::string(what) + ": term count must be >= 1");
}

void require_unit_disc(double z, const char* what) {
    if (!(std::fabs(z) < 1.0)) throw std::domain_error(std::string(what) + ": need |z| < 1");
}

// (1 - 2^-(2n+1)) zeta(2n+1)
long double odd_zeta_weight(int n) {
    return (1.0L - std::ldexp(1.0L, -(2 * n + 1))) * zeta_int(2 * n + 1).value;
}

// sum_{n=1}^{N} (-1)^(n-1) (1 - 2^-(2n+1)) zeta(2n+1) z^(2n-1)
long double alternating_odd_sum(long double z, int N) {
    long double acc = 0.0L;
    long double power = z;
    for (int n = 1; n <= N; ++n) {
        acc += ((n % 2 == 1) ? 1.0L : -1.0L) * odd_zeta_weight(n) * power;
        power *= z * z;
    }
    return acc;
}

}  // namespace

double bradley_primitive(double x, int N) {
    require_terms(N, "bradley_primitive");
    long double acc = 0.0L;
    for (int n = N; n >= 0; --n) {
        const long double m = 2.0L * n + 1;
        acc += std::sin(2 * m * static_cast<long double>(x)) / (m * m);
    }
    return static_cast<double>(-acc);
}

double logtan_power_series(double x, int K) {
    require_terms(K, "logtan_power_series");
    if (!(x > 0.0 && x < std::numbers::pi / 2)) throw std::domain_error("logtan_power_series: need 0 < x < pi/2");
    const long double r = static_cast<long double>(x) / kPi;
    long double small = 1.0L;  // (x/pi)^(2k)
    long double big = 1.0L;    // (2x/pi)^(2k)
    long double acc = 0.0L;
    for (int k = 1; k <= K; ++k) {
        small *= r * r;
        big *= 4 * r * r;
        // (2^(2k-1) - 1)(x/pi)^(2k) without forming 2^(2k-1)
        acc += (big / 2 - small) / k * zeta_int(2 * k).value;
    }
    return static_cast<double>(std::log(static_cast<long double>(x)) + 2 * acc);
}

double exp_integral_series(double z, int N) {
    require_unit_disc(z, "exp_integral_series");
    require_terms(N, "exp_integral_series");
    const long double zl = z;
    return static_cast<double>((std::exp(kPi * zl) + 1) * alternating_odd_sum(zl, N));
}

std::pair<double, double> sinh_identity_check(double z, int N, double tol) {
    require_unit_disc(z, "sinh_identity_check");
    require_terms(N, "sinh_identity_check");
    const double lhs = integrate_logtan(FunctionSpec::sinh_shift(z), 0.0, std::numbers::pi / 2, tol).value;
    const long double zl = z;
    const long double rhs = 2 * std::cosh(kPi * zl / 2) * alternating_odd_sum(zl, N);
    return {lhs, static_cast<double>(rhs)};
}

double cos_integral_F(double z) {
    require_unit_disc(z, "cos_integral_F");
    if (z == 0.0) return 0.0;
    const long double zl = z;
    const long double bracket =
        digamma((1 + zl) / 2).value + digamma((1 - zl) / 2).value - 2 * digamma(0.5L).value;
    return static_cast<double>(std::sin(kPi * zl) / (4 * zl) * bracket);
}

SeriesPartialSum partial_sum_S(double z, int N) {
    require_unit_disc(z, "partial_sum_S");
    require_terms(N, "partial_sum_S");
    const long double zl = z;
    long double acc = 0.0L;
    long double term = 0.0L;
    long double power = zl;
    for (int n = 1; n <= N; ++n) {
        term = odd_zeta_weight(n) * power;
        acc += term;
        power *= zl * zl;
    }
    return {N, static_cast<double>(acc), static_cast<double>(term)};
}

double smooth_L_series(const FunctionSpec& f, double z, int K) {
    require_terms(K, "smooth_L_series");
    if (!(std::fabs(z) <= 1.0)) throw std::domain_error("smooth_L_series: need |z| <= 1");
    const auto& kind = f.kind();
    const bool supported = std::holds_alternative<FunctionSpec::Exp2z>(kind) ||
                           std::holds_alternative<FunctionSpec::Cos2z>(kind) ||
                           std::holds_alternative<FunctionSpec::SinhShift>(kind) ||
                           std::holds_alternative<FunctionSpec::PolynomialFn>(kind) ||
                           std::holds_alternative<FunctionSpec::Monomial>(kind);
    if (!supported) throw std::domain_error("smooth_L_series: unsupported function '" + f.name() + "'");

    const double right = std::numbers::pi / 2 * z;
    long double acc = 0.0L;
    long double zpow = z;  // z^(2k-1)
    for (int k = 1; k <= K; ++k) {
        const int order = 2 * k - 1;
        const long double ends = static_cast<long double>(f.derivative(order, 0.0)) + f.derivative(order, right);
        const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
        acc += sign * std::ldexp(ends, -order) * odd_zeta_weight(k) * zpow;
        zpow *= static_cast<long double>(z) * z;
    }
    return static_cast<double>(acc);
}

double euler_zeta3_series(int N) {
    require_terms(N, "euler_zeta3_series");
    long double acc = 0.0L;
    for (int n = N; n >= 1; --n)
        acc += std::ldexp(zeta_int(2 * n).value, -2 * n) / ((2.0L * n + 1) * (n + 1));
    return static_cast<double>(kPi * kPi / 7 * (1 - 2 * acc));
}

}  // namespace logtan
