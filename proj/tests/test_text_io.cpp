#include "logtan/closed_forms.hpp"
#include "logtan/text_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace logtan;

TEST_CASE("render") {
    CHECK(render(ZetaExpr()) == "0");
    CHECK(render(ZetaExpr::zeta(3, PiExpr(Rational(7, 8)))) == "7/8 * zeta(3)");
    CHECK(render(ZetaExpr::zeta(3, PiExpr::pi_power(1, Rational(7, 16)))) == "7/16 * pi * zeta(3)");
    CHECK(render(exact_L(Polynomial::monomial(3))) == "21/64 * pi^2 * zeta(3) - 93/64 * zeta(5)");
    CHECK(render(ZetaExpr::zeta(5, PiExpr::pi_power(-3, Rational(-1))) + ZetaExpr::zeta(3)) ==
          "zeta(3) - pi^-3 * zeta(5)");
    CHECK(render(ZetaExpr::zeta(3, PiExpr::pi_power(-1, Rational(-7, 2)))) == "-7/2 * pi^-1 * zeta(3)");
    CHECK(render(PiExpr::pi_power(1, Rational(-1, 2))) == "-1/2 * pi");
    CHECK(render(PiExpr()) == "0");
    CHECK(render(PiExpr(Rational(3))) == "3");
}

TEST_CASE("parse accepts the rendered grammar with free spacing") {
    CHECK(parse_zeta_expr("7/8*zeta(3)") == ZetaExpr::zeta(3, PiExpr(Rational(7, 8))));
    CHECK(parse_zeta_expr("  -  pi^-2 * zeta( 5 ) + 3 * zeta(3)") ==
          ZetaExpr::zeta(5, PiExpr::pi_power(-2, Rational(-1))) + ZetaExpr::zeta(3, PiExpr(Rational(3))));
    CHECK(parse_zeta_expr("0").is_zero());
    CHECK(parse_zeta_expr("zeta(3) - zeta(3)").is_zero());
}

TEST_CASE("rendered exact values round-trip") {
    std::mt19937 rng(3);
    for (int i = 0; i < 60; ++i) {
        const ZetaExpr e = exact_L(oracle::random_polynomial(rng, 14));
        CHECK(parse_zeta_expr(render(e)) == e);
    }
    for (int n = 1; n <= 25; ++n) {
        const ZetaExpr e = legendre_L_coeff(n);
        CHECK(parse_zeta_expr(render(e)) == e);
    }
}

TEST_CASE("zeta expression parse errors carry positions") {
    auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_zeta_expr(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("no error for " << text);
        return 0;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("7/8 * zeta(4)") == 11);
    CHECK(position_of("7/8 *") == 5);
    CHECK(position_of("7/8 zeta(3)") == 4);
    CHECK(position_of("zeta(3) +") == 9);
    CHECK_THROWS_AS(parse_zeta_expr("7/8 * pi"), ParseError);
    CHECK_THROWS_AS(parse_zeta_expr("zeta(3) * zeta(5)"), ParseError);
    CHECK_THROWS_AS(parse_zeta_expr("1/0 * zeta(3)"), ParseError);
}

TEST_CASE("polynomial specs") {
    CHECK(parse_polynomial_spec("0,1") == Polynomial::monomial(1));
    CHECK(parse_polynomial_spec(" 1/2 , -3 ") ==
          Polynomial(std::vector<PiExpr>{PiExpr(Rational(1, 2)), PiExpr(Rational(-3))}));
    CHECK(parse_polynomial_spec("5,0,0") == Polynomial::constant(PiExpr(Rational(5))));
    CHECK(parse_polynomial_spec("0").is_zero());

    auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_polynomial_spec(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("no error for " << text);
        return 0;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("0,1/0") == 2);
    CHECK(position_of("1,,2") == 2);
    CHECK(position_of("1,x") == 2);
}
