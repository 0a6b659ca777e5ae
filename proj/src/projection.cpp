#include "logtan/projection.hpp"

#include "logtan/closed_forms.hpp"
#include "logtan/constants.hpp"
#include "logtan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace logtan {

namespace {

constexpr double kCoeffTol = 1e-12;
constexpr double kHalfPi = std::numbers::pi / 2;

void require_positive(int N, const char* what) {
    if (N < 1) throw std::invalid_argument(std::string(what) + ": N must be >= 1, got " + std::to_string(N));
}

// L(P~(2n-1)) at wide precision, n = 1..N.
std::vector<WideReal> odd_legendre_L(int N, mpfr_prec_t min_bits) {
    std::vector<WideReal> out;
    out.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        const ZetaExpr e = legendre_L_coeff(2 * n - 1);
        out.push_back(eval_wide(e, std::max(min_bits, working_precision(e))));
    }
    return out;
}

// (2j+2k-2)! / ((2k-1)! (2j-2k)!)
Rational legendre_weight(int j, int k) {
    const auto f = [](int m) { return factorial(static_cast<unsigned long>(m)); };
    return Rational(f(2 * j + 2 * k - 2), BigInt(f(2 * k - 1) * f(2 * j - 2 * k)));
}

WideReal exact_double(double v, mpfr_prec_t bits) {
    WideReal w(bits);
    mpfr_set_d(w.get(), v, MPFR_RNDN);
    return w;
}

}  // namespace

double LegendreCoeffs::reconstruct(double x) const {
    double acc = 0.0;
    for (int n = 0; n <= N; ++n) acc += coeffs[static_cast<std::size_t>(n)] * legendre_value(n, 4 * x / std::numbers::pi - 1);
    return acc;
}

LegendreCoeffs expand(const FunctionSpec& f, int N) {
    if (N < 0) throw std::invalid_argument("expand: N must be >= 0");
    LegendreCoeffs out{f, N, {}};
    out.coeffs.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        out.coeffs.push_back((2 * n + 1) * inner_product(f, FunctionSpec::shifted_legendre(n), kCoeffTol).value);
    return out;
}

ApproxL approx_L(const FunctionSpec& f, int N) {
    require_positive(N, "approx_L");
    ApproxL out;
    out.N = N;
    for (int j = 1; j <= N; ++j)
        out.odd_inner.push_back(inner_product(f, FunctionSpec::shifted_legendre(2 * j - 1), kCoeffTol).value);

    // The k-order terms reach ~ (4N)!/(2N)! pi^-(2N) and cancel, so the
    // table is summed with enough bits to absorb the largest weight.
    const long top = static_cast<long>(std::lgamma(4.0 * N) / std::log(2.0)) + 1;
    const mpfr_prec_t bits = static_cast<mpfr_prec_t>(((std::max(top, 0L) + 128 + 63) / 64) * 64);

    std::vector<WideReal> inner;
    for (double v : out.odd_inner) inner.push_back(exact_double(v, bits));

    const WideReal pi = WideReal::pi(bits);
    WideReal total(bits);
    for (int k = 1; k <= N; ++k) {
        WideReal c(bits);
        for (int j = k; j <= N; ++j)
            c += WideReal(Rational(2 * (4 * j - 1)) * legendre_weight(j, k), bits) * inner[static_cast<std::size_t>(j - 1)];
        out.c_table.push_back(c.to_long_double());
        const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
        const WideReal factor = WideReal(sign * (Rational(1) - pow2(-(2 * k + 1))), bits) * pi.pow(-(2 * k - 1)) *
                                zeta_wide(2 * k + 1, bits);
        total += c * factor;
    }
    out.value = total.to_double();

    const auto L = odd_legendre_L(N, bits);
    WideReal by_index(bits);
    for (int j = 1; j <= N; ++j)
        by_index += WideReal(4 * j - 1, bits) * inner[static_cast<std::size_t>(j - 1)] * L[static_cast<std::size_t>(j - 1)];
    out.value_by_index = by_index.to_double();
    return out;
}

double parseval_defect(int N) {
    require_positive(N, "parseval_defect");
    constexpr mpfr_prec_t bits = 192;
    const WideReal half_pi = WideReal::pi(bits) / WideReal(2, bits);
    WideReal acc(bits);
    const auto L = odd_legendre_L(N, bits);
    for (int n = 1; n <= N; ++n) {
        const WideReal& v = L[static_cast<std::size_t>(n - 1)];
        acc += WideReal(4 * n - 1, bits) * v * v;
    }
    return (half_pi.pow(4) - acc).to_double();
}

double catalan_series(int N) {
    require_positive(N, "catalan_series");
    constexpr mpfr_prec_t bits = 192;
    const auto L = odd_legendre_L(N, bits);
    WideReal acc(bits);
    for (int n = 1; n <= N; ++n)
        acc += WideReal(Rational(4 * n - 1) * byerly_coeff(n), bits) * L[static_cast<std::size_t>(n - 1)];
    return acc.to_double();
}

std::vector<double> default_reconstruction_grid() {
    constexpr int kPoints = 41;
    constexpr double lo = 0.2;
    constexpr double hi = kHalfPi - 0.2;
    std::vector<double> grid;
    grid.reserve(kPoints);
    for (int i = 0; i < kPoints; ++i) grid.push_back(lo + (hi - lo) * i / (kPoints - 1));
    return grid;
}

double logtan_reconstruction_error(int N, const std::vector<double>& samples) {
    require_positive(N, "logtan_reconstruction_error");
    std::vector<double> weight;
    for (const auto& v : odd_legendre_L(N, 128)) weight.push_back(v.to_double());
    double worst = 0.0;
    for (double x : samples) {
        if (!(x > 0.0 && x < kHalfPi)) throw std::invalid_argument("sample points must lie in (0, pi/2)");
        const double t = 4 * x / std::numbers::pi - 1;
        double series = 0.0;
        for (int n = 1; n <= N; ++n)
            series += (4 * n - 1) * weight[static_cast<std::size_t>(n - 1)] * legendre_value(2 * n - 1, t);
        series *= 2 / std::numbers::pi;
        worst = std::max(worst, std::fabs(std::log(std::tan(x)) - series));
    }
    return worst;
}

}  // namespace logtan
