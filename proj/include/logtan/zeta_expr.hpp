#pragma once

#include "logtan/pi_expr.hpp"

#include <map>

namespace logtan {

/// Exact value of the form sum_m c_m * zeta(m), with m odd and >= 3 and each
/// c_m a PiExpr. Equality is structural on reduced coefficients.
class ZetaExpr {
public:
    using Terms = std::map<int, PiExpr>;

    ZetaExpr() = default;

    /// c * zeta(m). Throws std::invalid_argument unless m is odd and >= 3.
    static ZetaExpr zeta(int m, const PiExpr& c = PiExpr(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    PiExpr coefficient(int m) const;
    int max_zeta_index() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    ZetaExpr operator-() const;
    ZetaExpr& operator+=(const ZetaExpr& rhs);
    ZetaExpr& operator-=(const ZetaExpr& rhs);
    ZetaExpr& operator*=(const PiExpr& rhs);

    friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
    friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }
    friend ZetaExpr operator*(ZetaExpr a, const PiExpr& b) { return a *= b; }
    friend ZetaExpr operator*(const PiExpr& a, ZetaExpr b) { return b *= a; }
    friend bool operator==(const ZetaExpr&, const ZetaExpr&) = default;

private:
    void add_term(int m, const PiExpr& c);

    Terms terms_;
};

}  // namespace logtan
