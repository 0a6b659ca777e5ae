#include "logtan/text_io.hpp"

#include <cctype>
#include <vector>

namespace logtan {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

struct Monomial {
    Rational coeff;
    int pi_exp = 0;
    int zeta = 0;  // 0 for a PiExpr term
};

std::string render_terms(const std::vector<Monomial>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (first) {
            if (t.coeff.sign() < 0) out += "-";
        } else {
            out += t.coeff.sign() < 0 ? " - " : " + ";
        }
        first = false;

        std::vector<std::string> factors;
        const Rational mag = t.coeff.abs();
        if (!mag.is_one() || (t.pi_exp == 0 && t.zeta == 0)) factors.push_back(mag.to_string());
        if (t.pi_exp == 1)
            factors.emplace_back("pi");
        else if (t.pi_exp != 0)
            factors.push_back("pi^" + std::to_string(t.pi_exp));
        if (t.zeta != 0) factors.push_back("zeta(" + std::to_string(t.zeta) + ")");

        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out += " * ";
            out += factors[i];
        }
    }
    return out;
}

void append_pi_terms(std::vector<Monomial>& out, const PiExpr& c, int zeta) {
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) out.push_back({it->second, it->first, zeta});
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ZetaExpr parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        ZetaExpr result;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
            skip_ws();
        }
        const std::size_t first_term_pos = pos_;
        auto [coeff, zeta] = term();
        if (zeta == 0) {
            if (!at_end_after_ws()) throw ParseError("expected '*', '+' or '-'", pos_);
            if (!coeff.is_zero()) throw ParseError("term without a zeta(m) factor", first_term_pos);
            return result;
        }
        result += ZetaExpr::zeta(zeta, negate ? -coeff : coeff);

        while (true) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw ParseError("expected '*', '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            const std::size_t term_pos = pos_;
            auto [c, m] = term();
            if (m == 0) throw ParseError("term without a zeta(m) factor", term_pos);
            result += ZetaExpr::zeta(m, op == '-' ? -c : c);
        }
        return result;
    }

private:
    std::pair<PiExpr, int> term() {
        Rational coeff(1);
        int pi_exp = 0;
        int zeta = 0;
        factor(coeff, pi_exp, zeta);
        while (true) {
            const std::size_t save = pos_;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                factor(coeff, pi_exp, zeta);
            } else {
                pos_ = save;
                break;
            }
        }
        return {PiExpr::pi_power(pi_exp, coeff), zeta};
    }

    void factor(Rational& coeff, int& pi_exp, int& zeta) {
        if (at_end()) throw ParseError("expected a factor", pos_);
        if (consume("pi")) {
            int e = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                e = signed_int();
            }
            pi_exp += e;
            return;
        }
        if (consume("zeta(")) {
            skip_ws();
            const std::size_t at = pos_;
            if (zeta != 0) throw ParseError("more than one zeta factor in a term", at);
            const int m = signed_int();
            if (m < 3 || m % 2 == 0) throw ParseError("zeta index must be odd and >= 3", at);
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            zeta = m;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            try {
                coeff *= Rational::parse(s_.substr(start, pos_ - start));
            } catch (const std::exception&) {
                throw ParseError("malformed rational", start);
            }
            return;
        }
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }

    int signed_int() {
        const std::size_t start = pos_;
        if (!at_end() && peek() == '-') ++pos_;
        const std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits) throw ParseError("expected an integer", start);
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    bool consume(std::string_view word) {
        if (s_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    bool at_end_after_ws() {
        skip_ws();
        return at_end();
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string render(const ZetaExpr& e) {
    std::vector<Monomial> terms;
    for (const auto& [m, c] : e.terms()) append_pi_terms(terms, c, m);
    return render_terms(terms);
}

std::string render(const PiExpr& e) {
    std::vector<Monomial> terms;
    append_pi_terms(terms, e, 0);
    return render_terms(terms);
}

ZetaExpr parse_zeta_expr(std::string_view text) { return Parser(text).parse(); }

Polynomial parse_polynomial_spec(std::string_view text) {
    std::vector<PiExpr> coeffs;
    std::size_t start = 0;
    bool any_content = false;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) any_content = true;
    if (!any_content) throw ParseError("empty polynomial spec", 0);

    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::size_t a = start;
        std::size_t b = end;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        if (a == b) throw ParseError("empty coefficient", a);
        try {
            coeffs.emplace_back(Rational::parse(text.substr(a, b - a)));
        } catch (const std::exception&) {
            throw ParseError("malformed coefficient '" + std::string(text.substr(a, b - a)) + "'", a);
        }
        start = end + 1;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace logtan
