#include "logtan/zeta_expr.hpp"

#include <stdexcept>
#include <string>

namespace logtan {

ZetaExpr ZetaExpr::zeta(int m, const PiExpr& c) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("ZetaExpr: zeta index must be odd and >= 3, got " + std::to_string(m));
    ZetaExpr e;
    e.add_term(m, c);
    return e;
}

PiExpr ZetaExpr::coefficient(int m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? PiExpr{} : it->second;
}

void ZetaExpr::add_term(int m, const PiExpr& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ZetaExpr ZetaExpr::operator-() const {
    ZetaExpr r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

ZetaExpr& ZetaExpr::operator*=(const PiExpr& rhs) {
    Terms out;
    for (const auto& [m, c] : terms_) {
        PiExpr p = c * rhs;
        if (!p.is_zero()) out.emplace(m, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

}  // namespace logtan
