#pragma once

#include "logtan/pi_expr.hpp"
#include "logtan/polynomial.hpp"
#include "logtan/zeta_expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logtan {

/// Parse failure carrying the 0-based character offset of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Renders `7/8 * zeta(3)`, `7/16 * pi * zeta(3)`, `21/64 * pi^2 * zeta(3) - 93/64 * zeta(5)`.
/// Terms are ordered by zeta index, then by descending pi exponent. Zero renders as `0`.
std::string render(const ZetaExpr& e);
std::string render(const PiExpr& e);

/// Inverse of render(); accepts the same grammar with free spacing.
ZetaExpr parse_zeta_expr(std::string_view text);

/// Comma-separated rational coefficients in ascending degree, e.g. "0,1/2,-3".
Polynomial parse_polynomial_spec(std::string_view text);

}  // namespace logtan
