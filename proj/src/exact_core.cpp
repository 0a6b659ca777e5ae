#include "logtan/exact_core.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace logtan {

namespace {

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + ": index must be >= 0, got " + std::to_string(n));
}

unsigned long as_ulong(int n) { return static_cast<unsigned long>(n); }

}  // namespace

Rational bernoulli(int n) {
    require_nonnegative(n, "bernoulli");
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};

    std::lock_guard lock(mutex);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (static_cast<int>(table.size()) <= n) {
        const auto m = static_cast<unsigned long>(table.size());
        if (m > 1 && m % 2 == 1) {
            table.emplace_back(0);
            continue;
        }
        Rational acc;
        for (unsigned long k = 0; k < m; ++k) {
            if (k > 1 && k % 2 == 1) continue;
            acc += Rational(binomial(m + 1, k)) * table[k];
        }
        table.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return table[static_cast<std::size_t>(n)];
}

Polynomial euler_poly(int n) {
    require_nonnegative(n, "euler_poly");
    std::vector<Polynomial> e;
    e.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Polynomial sum;
        for (int k = 0; k < m; ++k)
            sum += e[static_cast<std::size_t>(k)] * PiExpr(Rational(binomial(as_ulong(m), as_ulong(k))));
        e.push_back(Polynomial::monomial(static_cast<unsigned>(m)) - sum * PiExpr(Rational(1, 2)));
    }
    return e.back();
}

Polynomial euler_poly_scaled(int n) {
    return euler_poly(n).compose_linear(PiExpr::pi_power(-1, Rational(2)), PiExpr());
}

Polynomial shifted_legendre(int n) {
    require_nonnegative(n, "shifted_legendre");
    std::vector<PiExpr> c(static_cast<std::size_t>(n) + 1);
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    for (int k = 0; k <= n; ++k) {
        const Rational b(BigInt(binomial(as_ulong(n), as_ulong(k)) * binomial(as_ulong(n + k), as_ulong(k))));
        const Rational s = (k % 2 == 0) ? Rational(1) : Rational(-1);
        c[static_cast<std::size_t>(k)] = PiExpr::pi_power(-k, sign * b * s * pow2(k));
    }
    return Polynomial(std::move(c));
}

Polynomial shifted_legendre_rodrigues(int n) {
    require_nonnegative(n, "shifted_legendre_rodrigues");
    const Polynomial x = Polynomial::monomial(1);
    const Polynomial reflected = Polynomial::linear(PiExpr(-1), half_pi());
    const Polynomial base = x.pow(static_cast<unsigned>(n)) * reflected.pow(static_cast<unsigned>(n));
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    const PiExpr scale = PiExpr::pi_power(-n, sign * pow2(n) / Rational(factorial(as_ulong(n))));
    return base.derivative(n) * scale;
}

PiExpr shifted_legendre_deriv_at_zero(int n, int m) {
    if (n < 0 || m < 0 || m > n)
        throw std::domain_error("shifted_legendre_deriv_at_zero: need 0 <= m <= n, got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m));
    const Rational sign = ((n + m) % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational ratio(factorial(as_ulong(n + m)), BigInt(factorial(as_ulong(m)) * factorial(as_ulong(n - m))));
    return PiExpr::pi_power(-m, sign * pow2(m) * ratio);
}

PiExpr poly_derivative_at(const Polynomial& p, int order, const PiExpr& point) {
    return p.derivative(order).evaluate(point);
}

}  // namespace logtan
