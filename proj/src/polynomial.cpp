#include "logtan/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace logtan {

Polynomial::Polynomial(std::vector<PiExpr> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const PiExpr& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned degree, const PiExpr& c) {
    std::vector<PiExpr> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const PiExpr& a, const PiExpr& b) { return Polynomial({b, a}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PiExpr Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<PiExpr> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::derivative(int order) const {
    if (order < 0) throw std::invalid_argument("Polynomial::derivative: negative order");
    Polynomial p = *this;
    for (int i = 0; i < order && !p.is_zero(); ++i) p = p.derivative();
    return p;
}

Polynomial Polynomial::antiderivative() const {
    std::vector<PiExpr> a(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        a[k + 1] = coeffs_[k] * Rational(1, static_cast<long>(k + 1));
    return Polynomial(std::move(a));
}

PiExpr Polynomial::evaluate(const PiExpr& x) const {
    PiExpr acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PiExpr Polynomial::integrate(const PiExpr& a, const PiExpr& b) const {
    const Polynomial prim = antiderivative();
    return prim.evaluate(b) - prim.evaluate(a);
}

Polynomial Polynomial::compose_linear(const PiExpr& a, const PiExpr& b) const {
    const Polynomial inner = linear(a, b);
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

long double Polynomial::approx(long double x) const {
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->approx();
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<PiExpr> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const PiExpr& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<PiExpr> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(PiExpr(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

}  // namespace logtan
