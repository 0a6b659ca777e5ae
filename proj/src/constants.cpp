#include "logtan/constants.hpp"

#include "logtan/exact_core.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace logtan {

namespace {

constexpr int kMemoMaxS = 256;
constexpr mpfr_prec_t kNativeBits = 128;

struct ZetaWithBound {
    WideReal value;
    WideReal tail;  // magnitude of the last Euler-Maclaurin term used
};

// zeta(s) = sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
//         + sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)
ZetaWithBound zeta_euler_maclaurin(int s, mpfr_prec_t bits) {
    const long n_direct = std::max<long>(16, bits / 4);
    WideReal sum(bits);
    for (long k = n_direct - 1; k >= 1; --k) sum += WideReal(k, bits).pow(-s);

    const WideReal n(n_direct, bits);
    const WideReal n_pow_s = n.pow(-s);  // N^-s
    sum += n_pow_s * n / WideReal(s - 1, bits);
    sum += n_pow_s / WideReal(2, bits);

    WideReal threshold(1, bits);
    mpfr_mul_2si(threshold.get(), threshold.get(), -static_cast<long>(bits) - 8, MPFR_RNDN);

    // rising = s(s+1)...(s+2j-2); n_factor = N^(-s-2j+1)
    WideReal rising(s, bits);
    WideReal n_factor = n_pow_s / n;
    const WideReal inv_n2 = WideReal(1, bits) / (n * n);
    WideReal last(bits);
    const int max_j = static_cast<int>(2 * n_direct);
    for (int j = 1; j <= max_j; ++j) {
        const Rational b = bernoulli(2 * j) / Rational(factorial(static_cast<unsigned long>(2 * j)));
        WideReal term = WideReal(b, bits) * rising * n_factor;
        sum += term;
        last = term.abs();
        if (last < threshold) break;
        rising *= WideReal(static_cast<long>(s) + 2 * j - 1, bits);
        rising *= WideReal(static_cast<long>(s) + 2 * j, bits);
        n_factor *= inv_n2;
    }
    return {std::move(sum), std::move(last)};
}

mpfr_prec_t round_bits(long bits) {
    const long rounded = ((std::max<long>(bits, 128) + 63) / 64) * 64;
    return static_cast<mpfr_prec_t>(rounded);
}

long log2_magnitude(const Rational& c) {
    return static_cast<long>(mpz_sizeinbase(c.numerator().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(c.denominator().get_mpz_t(), 2)) + 1;
}

long log2_magnitude(int pi_exp, const Rational& c) {
    // log2(pi) < 1.66
    return log2_magnitude(c) + static_cast<long>(std::ceil(1.66 * pi_exp));
}

const std::array<NumericValue, kMemoMaxS + 1>& zeta_table() {
    static const auto table = [] {
        std::array<NumericValue, kMemoMaxS + 1> t{};
        for (int s = 2; s <= kMemoMaxS; ++s) {
            const auto z = zeta_euler_maclaurin(s, kNativeBits);
            const long double v = z.value.to_long_double();
            t[static_cast<std::size_t>(s)] = {v, v * LDBL_EPSILON / 2 + z.tail.to_long_double()};
        }
        return t;
    }();
    return table;
}

}  // namespace

NumericValue zeta_int(int s) {
    if (s < 2) throw std::domain_error("zeta_int: s must be >= 2, got " + std::to_string(s));
    if (s <= kMemoMaxS) return zeta_table()[static_cast<std::size_t>(s)];
    const auto z = zeta_euler_maclaurin(s, kNativeBits);
    const long double v = z.value.to_long_double();
    return {v, v * LDBL_EPSILON / 2 + z.tail.to_long_double()};
}

PiExpr zeta_even_exact(int n) {
    if (n < 1) throw std::domain_error("zeta_even_exact: n must be >= 1");
    const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
    const Rational c = sign * pow2(2 * n) * bernoulli(2 * n) /
                       (Rational(2) * Rational(factorial(static_cast<unsigned long>(2 * n))));
    return PiExpr::pi_power(2 * n, c);
}

NumericValue catalan() {
    using Real = long double;
    // Algorithm 1 of Cohen, Rodriguez Villegas and Zagier; relative error ~ 2 * 5.828^-n.
    const int n = static_cast<int>(std::ceil(std::log(4 / LDBL_EPSILON) * 0.5672963285532555)) + 2;
    Real d = std::pow(3 + std::sqrt(Real(8)), n);
    d = (d + 1 / d) / 2;
    Real b = -1;
    Real c = -d;
    Real s = 0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        const Real a = Real(1) / ((2 * Real(k) + 1) * (2 * Real(k) + 1));
        s += c * a;
        b = (Real(k) + n) * (Real(k) - n) * b / ((Real(k) + Real(0.5)) * (Real(k) + 1));
    }
    const Real g = s / d;
    return {g, 2 * std::pow(Real(5.828), -n) * g + 4 * LDBL_EPSILON};
}

NumericValue digamma(long double x) {
    if (!(x > 0) || !std::isfinite(x))
        throw std::domain_error("digamma: argument must be positive and finite");
    constexpr long double kShift = 20.0L;
    long double acc = 0.0L;
    long double shift_abs = 0.0L;
    while (x < kShift) {
        acc -= 1 / x;
        shift_abs += 1 / x;
        x += 1;
    }
    const long double inv2 = 1 / (x * x);
    long double series = std::log(x) - 1 / (2 * x);
    long double power = inv2;
    long double last = 0.0L;
    for (int k = 1; k <= 9; ++k) {
        const long double b = static_cast<long double>(bernoulli(2 * k).to_double());
        last = b / (2 * k) * power;
        series -= last;
        power *= inv2;
    }
    const long double value = acc + series;
    return {value, std::fabs(last) + 4 * LDBL_EPSILON * (shift_abs + std::fabs(series))};
}

WideReal zeta_wide(int s, mpfr_prec_t bits) {
    if (s < 2) throw std::domain_error("zeta_wide: s must be >= 2");
    static std::mutex mutex;
    static std::map<std::pair<int, mpfr_prec_t>, WideReal> cache;
    {
        std::lock_guard lock(mutex);
        const auto it = cache.find({s, bits});
        if (it != cache.end()) return it->second;
    }
    WideReal value = zeta_euler_maclaurin(s, bits).value;
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(s, bits), value);
    return value;
}

mpfr_prec_t working_precision(const PiExpr& e) {
    long worst = 0;
    for (const auto& [j, c] : e.terms()) worst = std::max(worst, log2_magnitude(j, c));
    return round_bits(worst + 64 + 32 + static_cast<long>(e.terms().size()));
}

mpfr_prec_t working_precision(const ZetaExpr& e) {
    long worst = 0;
    std::size_t count = 0;
    for (const auto& [m, c] : e.terms())
        for (const auto& [j, r] : c.terms()) {
            worst = std::max(worst, log2_magnitude(j, r) + 1);  // zeta(m) < 2
            ++count;
        }
    return round_bits(worst + 64 + 32 + static_cast<long>(count));
}

WideReal eval_wide(const PiExpr& e, mpfr_prec_t bits) {
    const WideReal pi = WideReal::pi(bits);
    WideReal sum(bits);
    for (const auto& [j, c] : e.terms()) sum += WideReal(c, bits) * pi.pow(j);
    return sum;
}

WideReal eval_wide(const ZetaExpr& e, mpfr_prec_t bits) {
    WideReal sum(bits);
    for (const auto& [m, c] : e.terms()) sum += eval_wide(c, bits) * zeta_wide(m, bits);
    return sum;
}

NumericValue eval_pi_expr(const PiExpr& e) {
    const mpfr_prec_t bits = working_precision(e);
    const long double v = eval_wide(e, bits).to_long_double();
    return {v, std::fabs(v) * LDBL_EPSILON / 2};
}

NumericValue eval_zeta_expr(const ZetaExpr& e) {
    if (e.is_zero()) return {0.0L, 0.0L};
    const mpfr_prec_t bits = working_precision(e);
    const WideReal sum = eval_wide(e, bits);
    // Each term carries at most a few ulps at `bits`; bound the propagated error linearly.
    long worst = 0;
    for (const auto& [m, c] : e.terms())
        for (const auto& [j, r] : c.terms()) worst = std::max(worst, log2_magnitude(j, r) + 1);
    const long double propagated = std::ldexp(1.0L, static_cast<int>(worst - bits + 4));
    const long double v = sum.to_long_double();
    return {v, std::fabs(v) * LDBL_EPSILON / 2 + propagated};
}

}  // namespace logtan
