#include "logtan/exact_core.hpp"
#include "logtan/quadrature.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace logtan;

namespace {

Polynomial poly(std::initializer_list<Rational> c) {
    std::vector<PiExpr> v;
    for (const auto& r : c) v.emplace_back(r);
    return Polynomial(std::move(v));
}

// p(x) with x replaced by a rational point, exact.
Rational at(const Polynomial& p, const Rational& x) {
    const PiExpr v = p.evaluate(PiExpr(x));
    REQUIRE(v.is_rational());
    return v.coefficient(0);
}

}  // namespace

TEST_CASE("rational normalizes and parses") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 999999);
    for (int i = 0; i < 200; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("pi expressions keep no zero terms") {
    const PiExpr a = PiExpr::pi_power(2, Rational(1, 3));
    CHECK((a - a).is_zero());
    CHECK((a - a).terms().empty());
    const PiExpr p = PiExpr::pi() * PiExpr::pi_power(-3, Rational(2));
    CHECK(p == PiExpr::pi_power(-2, Rational(2)));
    CHECK(PiExpr(Rational(5)).is_rational());
    CHECK(doctest::Approx(static_cast<double>(PiExpr::pi_power(1, Rational(1, 2)).approx())).epsilon(1e-15) ==
          1.5707963267948966);
}

TEST_CASE("polynomial calculus") {
    const Polynomial p = poly({1, -2, 0, 3});  // 3x^3 - 2x + 1
    CHECK(p.degree() == 3);
    CHECK(p.derivative() == poly({-2, 0, 9}));
    CHECK(p.derivative().degree() == p.degree() - 1);
    CHECK(p.derivative(4).is_zero());
    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.integrate(PiExpr(0), PiExpr(2)) == PiExpr(Rational(10)));  // 12 - 4 + 2
    CHECK(poly({0, 1}).compose_linear(PiExpr(2), PiExpr(1)) == poly({1, 2}));
    CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
    CHECK((p - p).is_zero());
    CHECK(Polynomial().degree() == 0);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (int n = 0; n <= 40; ++n) CHECK(bernoulli(n) == oracle::bernoulli(n));
    CHECK_THROWS_AS(bernoulli(-1), std::domain_error);
}

TEST_CASE("euler polynomials: values and identities") {
    CHECK(euler_poly(0) == poly({1}));
    CHECK(euler_poly(1) == poly({Rational(-1, 2), 1}));
    CHECK(euler_poly(2) == poly({0, -1, 1}));
    CHECK(euler_poly(3) == poly({Rational(1, 4), 0, Rational(-3, 2), 1}));
    // x = E_1(x) + E_0(x)/2
    CHECK(euler_poly(1) + euler_poly(0) * PiExpr(Rational(1, 2)) == poly({0, 1}));

    SUBCASE("defining relation E_n(x+1) + E_n(x) = 2x^n") {
        for (int n = 0; n <= 12; ++n) {
            const Polynomial e = euler_poly(n);
            CHECK(e.compose_linear(PiExpr(1), PiExpr(1)) + e == Polynomial::monomial(n, PiExpr(2)));
        }
    }
    SUBCASE("symmetry E_n(1-x) = (-1)^n E_n(x) at random rationals") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<long> num(0, 997);
        for (int n = 0; n <= 12; ++n) {
            const Polynomial e = euler_poly(n);
            const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
            for (int i = 0; i < 50; ++i) {
                const Rational x(num(rng), 997);
                CHECK(at(e, Rational(1) - x) == sign * at(e, x));
            }
        }
    }
    SUBCASE("inversion x^n = E_n + 1/2 sum_{k<n} C(n,k) E_k") {
        for (int n = 0; n <= 10; ++n) {
            Polynomial sum = euler_poly(n);
            for (int k = 0; k < n; ++k)
                sum += euler_poly(k) * PiExpr(Rational(binomial(n, k)) * Rational(1, 2));
            CHECK(sum == Polynomial::monomial(n));
        }
    }
    SUBCASE("translation E_n(x+y) = sum C(n,k) E_k(x) y^(n-k)") {
        for (const Rational& y : {Rational(1), Rational(-2, 3), Rational(5, 7)}) {
            for (int n = 0; n <= 8; ++n) {
                Polynomial rhs;
                for (int k = 0; k <= n; ++k)
                    rhs += euler_poly(k) * PiExpr(Rational(binomial(n, k)) * y.pow(n - k));
                CHECK(euler_poly(n).compose_linear(PiExpr(1), PiExpr(y)) == rhs);
            }
        }
    }
    SUBCASE("Appell property E_n' = n E_(n-1)") {
        for (int n = 1; n <= 12; ++n) CHECK(euler_poly(n).derivative() == euler_poly(n - 1) * PiExpr(Rational(n)));
    }
}

TEST_CASE("scaled euler polynomials") {
    CHECK(euler_poly_scaled(0) == poly({1}));
    CHECK(euler_poly_scaled(1) ==
          Polynomial(std::vector<PiExpr>{PiExpr(Rational(-1, 2)), PiExpr::pi_power(-1, Rational(2))}));
    // symmetry about pi/4: E_2(2(pi/2 - x)/pi) = E_2(2x/pi)
    const Polynomial e2 = euler_poly_scaled(2);
    CHECK(e2.compose_linear(PiExpr(-1), half_pi()) == e2);
    const Polynomial e3 = euler_poly_scaled(3);
    CHECK(e3.compose_linear(PiExpr(-1), half_pi()) == -e3);
}

TEST_CASE("shifted legendre polynomials") {
    CHECK(shifted_legendre(0) == poly({1}));
    CHECK(shifted_legendre(1) ==
          Polynomial(std::vector<PiExpr>{PiExpr(Rational(-1)), PiExpr::pi_power(-1, Rational(4))}));
    for (int n = 0; n <= 20; ++n) CHECK(shifted_legendre(n) == oracle::shifted_legendre(n));
    for (int n = 0; n <= 10; ++n) CHECK(shifted_legendre_rodrigues(n) == shifted_legendre(n));

    SUBCASE("reflection P~n(pi/2 - x) = (-1)^n P~n(x)") {
        for (int n = 0; n <= 8; ++n) {
            const Polynomial p = shifted_legendre(n);
            CHECK(p.compose_linear(PiExpr(-1), half_pi()) == p * PiExpr(Rational(n % 2 == 0 ? 1 : -1)));
        }
    }
    SUBCASE("exact orthogonality") {
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m) {
                const PiExpr ip =
                    (shifted_legendre(n) * shifted_legendre(m)).integrate(PiExpr(), half_pi()) * PiExpr::pi_power(-1, Rational(2));
                CHECK(ip == PiExpr(n == m ? Rational(1, 2 * n + 1) : Rational(0)));
            }
    }
    SUBCASE("numeric orthogonality by quadrature") {
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m) {
                const double ip =
                    inner_product(FunctionSpec::shifted_legendre(n), FunctionSpec::shifted_legendre(m), 1e-13).value;
                CHECK(std::fabs(ip - (n == m ? 1.0 / (2 * n + 1) : 0.0)) <= 1e-12);
            }
    }
}

TEST_CASE("shifted legendre derivatives at zero") {
    CHECK(shifted_legendre_deriv_at_zero(1, 0) == PiExpr(Rational(-1)));
    CHECK(shifted_legendre_deriv_at_zero(1, 1) == PiExpr::pi_power(-1, Rational(4)));
    CHECK(shifted_legendre_deriv_at_zero(2, 0) == PiExpr(Rational(1)));
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(shifted_legendre_deriv_at_zero(n, m) == poly_derivative_at(shifted_legendre(n), m, PiExpr()));
    CHECK_THROWS_AS(shifted_legendre_deriv_at_zero(1, 2), std::domain_error);
    CHECK_THROWS_AS(shifted_legendre_deriv_at_zero(2, -1), std::domain_error);
}

TEST_CASE("derivative at a point") {
    const Polynomial x3 = Polynomial::monomial(3);
    CHECK(poly_derivative_at(x3, 1, half_pi()) == PiExpr::pi_power(2, Rational(3, 4)));
    CHECK(poly_derivative_at(x3, 3, PiExpr()) == PiExpr(Rational(6)));
    CHECK(poly_derivative_at(x3, 5, PiExpr()).is_zero());
}
