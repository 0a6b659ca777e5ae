#include "logtan/closed_forms.hpp"
#include "logtan/constants.hpp"
#include "logtan/quadrature.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

using namespace logtan;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

double L(const FunctionSpec& f, double a = 0.0, double b = kHalfPi, double tol = 1e-13) {
    return integrate_logtan(f, a, b, tol).value;
}

double exact(const Polynomial& p) { return static_cast<double>(eval_zeta_expr(exact_L(p)).value); }

}  // namespace

TEST_CASE("log-tangent integrals with known values") {
    const QuadratureResult r = integrate_logtan(FunctionSpec::monomial(1), 0.0, kHalfPi, 1e-13);
    CHECK(std::fabs(r.value - 7.0 / 8 * static_cast<double>(oracle::zeta(3))) <= 1e-12);
    CHECK(r.converged);
    CHECK(r.levels_used <= default_max_levels());
    CHECK(r.est_error <= 1e-13);

    CHECK(std::fabs(L(FunctionSpec::logtan_power(1)) - kPi * kPi * kPi / 8) <= 1e-11);
    CHECK(std::fabs(2 / kPi * L(FunctionSpec::logtan_power(1)) - kPi * kPi / 4) <= 1e-10);
    CHECK(std::fabs(L(FunctionSpec::monomial(0), 0.0, kPi / 4) + static_cast<double>(oracle::catalan())) <= 1e-12);
    CHECK(std::fabs(L(FunctionSpec::sqrt()) - 0.689247) <= 5e-6);
    CHECK(std::fabs(L(FunctionSpec::logtan_power(2))) <= 1e-10);
}

TEST_CASE("oracle agrees with closed forms") {
    std::vector<Polynomial> polys;
    for (unsigned n = 1; n <= 4; ++n) polys.push_back(Polynomial::monomial(n));
    polys.push_back(euler_poly_scaled(1));
    polys.push_back(euler_poly_scaled(3));
    for (int n : {1, 3, 5}) polys.push_back(shifted_legendre(n));
    for (const auto& p : polys) CHECK(std::fabs(L(FunctionSpec::polynomial(p)) - exact(p)) <= 1e-9);
}

TEST_CASE("additivity and antisymmetry") {
    for (const auto& f : {FunctionSpec::monomial(3), FunctionSpec::sqrt(), FunctionSpec::exp2z(0.4)}) {
        const double tol = 1e-12;
        const double whole = L(f, 0.0, kHalfPi, tol);
        const double parts = L(f, 0.0, kPi / 4, tol) + L(f, kPi / 4, kHalfPi, tol);
        CHECK(std::fabs(whole - parts) <= 2 * tol);
        const double uneven = L(f, 0.0, 0.3, tol) + L(f, 0.3, 1.2, tol) + L(f, 1.2, kHalfPi, tol);
        CHECK(std::fabs(whole - uneven) <= 3 * tol);
    }
    CHECK(std::fabs(L(FunctionSpec::monomial(0))) <= 1e-13);
}

TEST_CASE("plain integrals") {
    auto plain = [](const FunctionSpec& f, double a, double b) { return integrate_plain(f, a, b, 1e-13).value; };
    CHECK(std::fabs(plain(FunctionSpec::monomial(0), 0.0, kHalfPi) - kHalfPi) <= 1e-14);
    const double q = plain(FunctionSpec::shifted_legendre(1), 0.0, kPi / 4);
    CHECK(std::fabs(q + kPi / 8) <= 1e-14);
    CHECK(std::fabs(-2 / kPi * q - byerly_coeff(1).to_double()) <= 1e-14);
    const double euler_log_sine = static_cast<double>(7.0L / 16 * oracle::zeta(3) -
                                                      std::numbers::pi_v<long double> * std::numbers::pi_v<long double> /
                                                          8 * std::numbers::ln2_v<long double>);
    CHECK(std::fabs(plain(FunctionSpec::logsine_x(), 0.0, kHalfPi) - euler_log_sine) <= 1e-12);
}

TEST_CASE("inner products") {
    auto ip = [](const FunctionSpec& f, const FunctionSpec& g) { return inner_product(f, g, 1e-13).value; };
    const auto p0 = FunctionSpec::shifted_legendre(0);
    CHECK(std::fabs(ip(p0, p0) - 1) <= 1e-14);
    CHECK(std::fabs(ip(FunctionSpec::shifted_legendre(1), FunctionSpec::shifted_legendre(2))) <= 1e-14);
    const double root_two_pi = std::sqrt(2 * kPi);
    CHECK(std::fabs(ip(FunctionSpec::sqrt(), p0) - root_two_pi / 3) <= 1e-13);
    for (int n = 0; n <= 12; ++n) {
        const double expected = root_two_pi * oracle::sqrt_inner_ratio(n).to_double();
        CHECK(std::fabs(ip(FunctionSpec::sqrt(), FunctionSpec::shifted_legendre(n)) - expected) <= 1e-13);
    }
    CHECK(std::fabs(norm2(p0) - 1) <= 1e-13);
    CHECK(std::fabs(norm2(FunctionSpec::shifted_legendre(3)) - 1 / std::sqrt(7.0)) <= 1e-13);
}

TEST_CASE("integrand failures and bad arguments") {
    const auto bad = [](double x) { return x < 0.5 ? 1.0 : std::numeric_limits<double>::quiet_NaN(); };
    try {
        tanh_sinh(bad, 0.0, 1.0, 1e-10);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::string(e.what()).find("x = ") != std::string::npos);
    }
    CHECK_THROWS_AS(integrate_logtan(FunctionSpec::monomial(1), 0.5, 0.2, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(integrate_logtan(FunctionSpec::monomial(1), -0.1, 1.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(integrate_logtan(FunctionSpec::monomial(1), 0.0, 2.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(integrate_logtan(FunctionSpec::monomial(1), 0.0, 1.0, 1e-15), std::invalid_argument);
}

TEST_CASE("nodes never touch the endpoints") {
    double lo = 1.0;
    double hi = 0.0;
    tanh_sinh(
        [&](double x) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
            return std::log(x) + std::log(1 - x);
        },
        0.0, 1.0, 1e-13);
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
}

TEST_CASE("refinement depth from the environment") {
    ::setenv("LOGTAN_MAX_LEVELS", "3", 1);
    CHECK(default_max_levels() == 3);
    const QuadratureResult r = integrate_logtan(FunctionSpec::sqrt(), 0.0, kHalfPi, 1e-13);
    CHECK(r.levels_used <= 3);
    ::setenv("LOGTAN_MAX_LEVELS", "garbage", 1);
    CHECK(default_max_levels() == kDefaultMaxLevels);
    ::unsetenv("LOGTAN_MAX_LEVELS");
    CHECK(default_max_levels() == kDefaultMaxLevels);
}

TEST_CASE("function catalog") {
    for (const char* name : {"x", "x4", "sqrt", "exp2z:0.3", "cos2z:-0.5", "sinh_shift:0.2", "logtan", "logtan2",
                             "logsine_x", "legendre7", "euler3", "poly:1,-1/2,3"}) {
        const FunctionSpec f = parse_function_spec(name);
        for (double u : {1e-8, 0.1, 0.7}) {
            CHECK(std::fabs(f.value(kHalfPi - u) - f.value_reflected(u)) <= 1e-7 * std::max(1.0, std::fabs(f.value(kHalfPi - u))));
        }
    }
    CHECK(parse_function_spec("x").name() == "x");
    CHECK(parse_function_spec("x3").name() == "x3");
    CHECK_THROWS_AS(parse_function_spec("cosh"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec("exp2z:abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec("legendre-1"), std::invalid_argument);
    CHECK(parse_function_spec("euler3").exact_polynomial() == euler_poly_scaled(3));
    CHECK(parse_function_spec("legendre4").exact_polynomial() == shifted_legendre(4));
    CHECK_FALSE(parse_function_spec("sqrt").exact_polynomial().has_value());
    CHECK_FALSE(parse_function_spec("logtan").sup_norm().has_value());
    CHECK_THROWS_AS(parse_function_spec("sqrt").derivative(1, 0.5), std::domain_error);
    const FunctionSpec c = FunctionSpec::cos2z(0.7);
    const double h = 1e-5;
    CHECK(std::fabs((c.value(0.3 + h) - c.value(0.3 - h)) / (2 * h) - c.derivative(1, 0.3)) <= 1e-8);
    CHECK(std::fabs(c.derivative(3, 0.3) - std::pow(1.4, 3) * std::sin(1.4 * 0.3)) <= 1e-12);
}

TEST_CASE("Cauchy-Schwarz and sup-norm bounds hold over the catalog") {
    const double G = static_cast<double>(oracle::catalan());
    for (const char* name : {"x", "x2", "x7", "sqrt", "exp2z:0.5", "exp2z:-0.9", "cos2z:0.3", "cos2z:3",
                             "sinh_shift:0.8", "logtan", "logtan2", "logsine_x", "legendre1", "legendre6", "euler5",
                             "poly:1,2,-3/2"}) {
        const FunctionSpec f = parse_function_spec(name);
        const double value = std::fabs(L(f, 0.0, kHalfPi, 1e-12));
        CHECK_MESSAGE(value <= kPi * kPi / 4 * norm2(f) + 1e-12, name);
        if (auto sup = f.sup_norm()) CHECK_MESSAGE(value <= 2 * G * *sup + 1e-12, name);
    }
}
