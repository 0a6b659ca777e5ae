#include "logtan/closed_forms.hpp"
#include "logtan/constants.hpp"
#include "logtan/quadrature.hpp"
#include "logtan/series.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

using namespace logtan;

TEST_CASE("zeta at integers") {
    CHECK(std::fabs(zeta_int(3).value - 1.202056903159594285399738161511449990764986292L) < 1e-18L);
    CHECK(std::fabs(zeta_int(5).value - 1.0369277551433699263L) < 1e-18L);
    for (int s = 2; s <= 80; ++s) {
        const NumericValue v = zeta_int(s);
        const long double ref = oracle::zeta(static_cast<unsigned long>(s));
        CHECK(std::fabs(v.value - ref) <= 1e-15L * ref);
        CHECK(v.err_bound >= 0);
        CHECK(std::fabs(v.value - ref) <= v.err_bound + 1e-19L);
    }
    CHECK(std::fabs(zeta_int(300).value - 1) < 1e-60L);
    CHECK_THROWS_AS(zeta_int(1), std::domain_error);
    CHECK_THROWS_AS(zeta_int(-4), std::domain_error);
}

TEST_CASE("zeta is decreasing towards 1") {
    // beyond s ~ 60, zeta(s) - 1 is below long double resolution
    for (int s = 2; s < 60; ++s) CHECK(zeta_int(s + 1).value < zeta_int(s).value);
    CHECK(zeta_int(15).value - 1 < 1e-4L);
    CHECK(zeta_int(64).value > 1);
}

TEST_CASE("even zeta values") {
    CHECK(zeta_even_exact(1) == PiExpr::pi_power(2, Rational(1, 6)));
    CHECK(zeta_even_exact(2) == PiExpr::pi_power(4, Rational(1, 90)));
    CHECK(zeta_even_exact(3) == PiExpr::pi_power(6, Rational(1, 945)));
    for (int n = 1; n <= 12; ++n) {
        const long double exact = eval_pi_expr(zeta_even_exact(n)).value;
        CHECK(std::fabs(zeta_int(2 * n).value - exact) <= 1e-17L * exact);
    }
    CHECK_THROWS_AS(zeta_even_exact(0), std::domain_error);
}

TEST_CASE("catalan's constant") {
    const NumericValue g = catalan();
    CHECK(std::fabs(g.value - oracle::catalan()) <= 1e-18L);
    CHECK(g.value > 0);
    CHECK(g.value < 1);
    const double q = integrate_logtan(FunctionSpec::monomial(0), 0.0, std::numbers::pi / 4, 1e-13).value;
    CHECK(std::fabs(-q - static_cast<double>(g.value)) <= 1e-10);
}

TEST_CASE("digamma") {
    const long double gamma = oracle::euler_gamma();
    CHECK(std::fabs(kEulerGamma - gamma) < 1e-19L);
    const long double ln2 = std::numbers::ln2_v<long double>;
    CHECK(std::fabs(digamma(0.5L).value - (-gamma - 2 * ln2)) <= 1e-17L);
    CHECK(std::fabs(digamma(1.0L).value + kEulerGamma) <= 1e-13L);
    CHECK(std::fabs(digamma(1.5L).value - (-gamma - 2 * ln2 + 2)) <= 1e-17L);
    for (long double x = 0.01L; x <= 50.0L; x += 0.37L) {
        const long double ref = oracle::digamma(x);
        CHECK(std::fabs(digamma(x).value - ref) <= 1e-13L);
    }
    CHECK(std::fabs(digamma(1e-6L).value - oracle::digamma(1e-6L)) <= 1e-9L);
    CHECK_THROWS_AS(digamma(0.0L), std::domain_error);
    CHECK_THROWS_AS(digamma(-1.5L), std::domain_error);
}

TEST_CASE("digamma closed form of the cosine integral at z = 1/2") {
    const long double z = 0.5L;
    const long double f = std::sin(std::numbers::pi_v<long double> * z) / (4 * z) *
                          (digamma(0.75L).value + digamma(0.25L).value - 2 * digamma(0.5L).value);
    const double q = integrate_logtan(FunctionSpec::cos2z(0.5), 0.0, std::numbers::pi / 2, 1e-13).value;
    CHECK(std::fabs(static_cast<double>(f) - q) <= 1e-9);
    CHECK(std::fabs(static_cast<double>(f) - cos_integral_F(0.5)) <= 1e-15);
}

TEST_CASE("evaluation of exact expressions") {
    CHECK(eval_zeta_expr(ZetaExpr()).value == 0);
    const NumericValue a = eval_zeta_expr(ZetaExpr::zeta(3, PiExpr(Rational(7, 8))));
    CHECK(std::fabs(a.value - 7.0L / 8 * oracle::zeta(3)) <= 1e-18L);
    // {3 -> (7/16) pi}: (7/16) pi zeta(3) = 1.65216...
    const NumericValue b = eval_zeta_expr(ZetaExpr::zeta(3, PiExpr::pi_power(1, Rational(7, 16))));
    CHECK(std::fabs(b.value - 1.6521632470713468L) <= 1e-15L);
    CHECK(b.err_bound >= 0);
    CHECK(std::fabs(eval_pi_expr(PiExpr::pi_power(-2, Rational(3))).value -
                    3 / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>)) <= 1e-18L);
}

TEST_CASE("cancelling coefficient expressions evaluate accurately") {
    // L(P~n) for large n: terms near 1e85 cancel down to ~1e-3.
    for (int n : {31, 45, 59}) {
        const ZetaExpr e = legendre_L_coeff(n);
        CHECK(working_precision(e) >= 256);
        const long double v = eval_zeta_expr(e).value;
        const double q = integrate_logtan(FunctionSpec::shifted_legendre(n), 0.0, std::numbers::pi / 2, 1e-13).value;
        CHECK(std::fabs(static_cast<double>(v) - q) <= 1e-11);

        // the same value at twice the working precision
        const WideReal wide = eval_wide(e, 2 * working_precision(e));
        CHECK(std::fabs(static_cast<long double>(wide.to_long_double()) - v) <= 1e-18L);
    }
}

TEST_CASE("wide zeta matches MPFR") {
    for (int s : {3, 5, 7, 41, 121}) {
        const WideReal v = zeta_wide(s, 256);
        mpfr_t ref;
        mpfr_init2(ref, 256);
        mpfr_zeta_ui(ref, static_cast<unsigned long>(s), MPFR_RNDN);
        mpfr_sub(ref, ref, v.get(), MPFR_RNDN);
        CHECK(mpfr_get_exp(ref) < -240);
        mpfr_clear(ref);
    }
}

TEST_CASE("memo tables are safe for concurrent readers") {
    std::vector<std::thread> threads;
    std::vector<long double> out(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &out] {
            long double acc = 0;
            for (int s = 2; s < 120; ++s) acc += zeta_int(s).value + zeta_wide(2 * (s % 20) + 3, 192).to_long_double();
            acc += eval_zeta_expr(legendre_L_coeff(2 * t + 21)).value;
            out[static_cast<std::size_t>(t)] = acc;
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t) CHECK(std::isfinite(static_cast<double>(out[static_cast<std::size_t>(t)])));
}
