#pragma once

#include "logtan/rational.hpp"

#include <map>

namespace logtan {

/// Finite sum of rational multiples of integer powers of pi.
///
/// Negative exponents are allowed so that polynomials in 2x/pi stay closed
/// under the type. Zero coefficients are never stored.
class PiExpr {
public:
    using Terms = std::map<int, Rational>;

    PiExpr() = default;
    PiExpr(const Rational& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
    PiExpr(long c) : PiExpr(Rational(c)) {}        // NOLINT(google-explicit-constructor)

    /// c * pi^exponent
    static PiExpr pi_power(int exponent, const Rational& c = Rational(1));
    static PiExpr pi() { return pi_power(1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the value is a plain rational (no pi factor).
    bool is_rational() const;
    /// Coefficient of pi^exponent (zero when absent).
    Rational coefficient(int exponent) const;

    /// Naive long double evaluation; use eval_pi_expr() when terms may cancel.
    long double approx() const;

    PiExpr operator-() const;
    PiExpr& operator+=(const PiExpr& rhs);
    PiExpr& operator-=(const PiExpr& rhs);
    PiExpr& operator*=(const PiExpr& rhs);
    PiExpr& operator*=(const Rational& rhs);

    friend PiExpr operator+(PiExpr a, const PiExpr& b) { return a += b; }
    friend PiExpr operator-(PiExpr a, const PiExpr& b) { return a -= b; }
    friend PiExpr operator*(const PiExpr& a, const PiExpr& b);
    friend PiExpr operator*(PiExpr a, const Rational& b) { return a *= b; }
    friend PiExpr operator*(const Rational& a, PiExpr b) { return b *= a; }
    friend bool operator==(const PiExpr&, const PiExpr&) = default;

    PiExpr pow(unsigned exponent) const;

private:
    void add_term(int exponent, const Rational& c);

    Terms terms_;
};

}  // namespace logtan
