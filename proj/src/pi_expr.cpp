#include "logtan/pi_expr.hpp"

#include <cmath>
#include <numbers>

namespace logtan {

PiExpr PiExpr::pi_power(int exponent, const Rational& c) {
    PiExpr e;
    e.add_term(exponent, c);
    return e;
}

bool PiExpr::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiExpr::coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

long double PiExpr::approx() const {
    long double sum = 0.0L;
    for (const auto& [j, c] : terms_)
        sum += static_cast<long double>(c.to_double()) * std::pow(std::numbers::pi_v<long double>, j);
    return sum;
}

void PiExpr::add_term(int exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PiExpr PiExpr::operator-() const {
    PiExpr r;
    for (const auto& [j, c] : terms_) r.terms_.emplace(j, -c);
    return r;
}

PiExpr& PiExpr::operator+=(const PiExpr& rhs) {
    for (const auto& [j, c] : rhs.terms_) add_term(j, c);
    return *this;
}

PiExpr& PiExpr::operator-=(const PiExpr& rhs) {
    for (const auto& [j, c] : rhs.terms_) add_term(j, -c);
    return *this;
}

PiExpr operator*(const PiExpr& a, const PiExpr& b) {
    PiExpr r;
    for (const auto& [ja, ca] : a.terms_)
        for (const auto& [jb, cb] : b.terms_) r.add_term(ja + jb, ca * cb);
    return r;
}

PiExpr& PiExpr::operator*=(const PiExpr& rhs) {
    *this = *this * rhs;
    return *this;
}

PiExpr& PiExpr::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [j, c] : terms_) c *= rhs;
    return *this;
}

PiExpr PiExpr::pow(unsigned exponent) const {
    PiExpr result(1);
    PiExpr base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

}  // namespace logtan
