#include "logtan/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace logtan {

namespace {

unsigned long ul(int n) { return static_cast<unsigned long>(n); }

Rational sign_of(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

/// 1 - 2^-(m), the odd-part factor sum_{n>=0} (2n+1)^-m = (1 - 2^-m) zeta(m).
Rational odd_part(int m) { return Rational(1) - pow2(-m); }

Rational fact(int n) { return Rational(factorial(ul(n))); }

void require_positive(int n, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
}

}  // namespace

ZetaExpr exact_L(const Polynomial& p) {
    ZetaExpr result;
    const int m = p.degree();
    const PiExpr right = half_pi();
    const PiExpr left;
    for (int k = 1; k <= (m + 1) / 2; ++k) {
        const Polynomial d = p.derivative(2 * k - 1);
        const PiExpr boundary = d.evaluate(right) + d.evaluate(left);
        const Rational scale = sign_of(k - 1) * pow2(-(2 * k - 1)) * odd_part(2 * k + 1);
        result += ZetaExpr::zeta(2 * k + 1, boundary * scale);
    }
    return result;
}

MomentResult moment(int n) {
    require_positive(n, "moment");
    ZetaExpr value;
    if (n % 2 == 1) {
        const Rational c = sign_of((n - 1) / 2) * fact(n) * pow2(-(n - 1)) * odd_part(n + 2);
        value += ZetaExpr::zeta(n + 2, PiExpr(c));
    }
    const Rational lead = fact(n) * pow2(-n);
    for (int k = 1; k <= n / 2; ++k) {
        const Rational c = lead * sign_of(k - 1) / fact(n - 2 * k + 1) * odd_part(2 * k + 1);
        value += ZetaExpr::zeta(2 * k + 1, PiExpr::pi_power(n - 2 * k + 1, c));
    }
    return {value, n};
}

ZetaExpr euler_integral(int n, Parity parity) {
    require_positive(n, "euler_integral");
    if (parity == Parity::even) return {};
    const Rational c = sign_of(n - 1) * fact(2 * n - 1) * (Rational(2) - pow2(-2 * n));
    return ZetaExpr::zeta(2 * n + 1, PiExpr::pi_power(-(2 * n - 1), c));
}

ZetaExpr euler_integral_half(int n) {
    require_positive(n, "euler_integral_half");
    const Rational c = sign_of(n - 1) * fact(2 * n - 1) * odd_part(2 * n + 1);
    return ZetaExpr::zeta(2 * n + 1, PiExpr::pi_power(-(2 * n - 1), c));
}

ZetaExpr euler_translated(int n, Parity parity, const Rational& y) {
    require_positive(n, "euler_translated");
    // Only the odd-index Euler polynomials in the translation expansion survive L.
    const int degree = parity == Parity::even ? 2 * n : 2 * n - 1;
    ZetaExpr result;
    for (int k = 1; k <= n; ++k) {
        const int y_power = degree - (2 * k - 1);
        const Rational c =
            Rational(2) * fact(degree) * sign_of(k - 1) * odd_part(2 * k + 1) * y.pow(y_power) / fact(y_power);
        result += ZetaExpr::zeta(2 * k + 1, PiExpr::pi_power(-(2 * k - 1), c));
    }
    return result;
}

PiExpr cos_lemma(int k) {
    require_positive(k, "cos_lemma");
    if (k % 2 == 0) return {};
    return PiExpr::pi_power(1, Rational(-1, 2L * k));
}

ZetaExpr legendre_L_coeff(int index) {
    if (index < 1) throw std::domain_error("legendre_L_coeff: index must be >= 1");
    if (index % 2 == 0) return {};
    const int n = (index + 1) / 2;
    ZetaExpr result;
    for (int k = 1; k <= n; ++k) {
        const Rational ratio = fact(2 * (n + k - 1)) / (fact(2 * k - 1) * fact(2 * (n - k)));
        const Rational c = Rational(2) * sign_of(k - 1) * ratio * odd_part(2 * k + 1);
        result += ZetaExpr::zeta(2 * k + 1, PiExpr::pi_power(-(2 * k - 1), c));
    }
    return result;
}

Rational byerly_coeff(int n) {
    require_positive(n, "byerly_coeff");
    return sign_of(n - 1) * Rational(binomial(ul(2 * n - 2), ul(n - 1))) / (pow2(2 * n) * Rational(n));
}

}  // namespace logtan
