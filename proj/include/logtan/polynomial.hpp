#pragma once

#include "logtan/pi_expr.hpp"

#include <vector>

namespace logtan {

/// Dense polynomial in x with PiExpr coefficients; coeffs()[k] multiplies x^k.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// stored coefficients and reports degree 0.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<PiExpr> coeffs);

    static Polynomial constant(const PiExpr& c);
    static Polynomial monomial(unsigned degree, const PiExpr& c = PiExpr(1));
    /// a*x + b
    static Polynomial linear(const PiExpr& a, const PiExpr& b);

    const std::vector<PiExpr>& coeffs() const { return coeffs_; }
    int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    PiExpr coefficient(int k) const;

    Polynomial derivative() const;
    Polynomial derivative(int order) const;
    /// Exact antiderivative vanishing at 0.
    Polynomial antiderivative() const;

    PiExpr evaluate(const PiExpr& x) const;
    /// Exact definite integral over [a, b].
    PiExpr integrate(const PiExpr& a, const PiExpr& b) const;
    /// P(a*x + b)
    Polynomial compose_linear(const PiExpr& a, const PiExpr& b) const;

    /// Horner evaluation with long double coefficients.
    long double approx(long double x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const PiExpr& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const PiExpr& b) { return a *= b; }
    friend Polynomial operator*(const PiExpr& a, Polynomial b) { return b *= a; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned exponent) const;

private:
    void trim();

    std::vector<PiExpr> coeffs_;
};

}  // namespace logtan
