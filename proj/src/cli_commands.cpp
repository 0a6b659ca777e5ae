#include "logtan/cli.hpp"

#include "logtan/closed_forms.hpp"
#include "logtan/constants.hpp"
#include "logtan/projection.hpp"
#include "logtan/quadrature.hpp"
#include "logtan/series.hpp"
#include "logtan/text_io.hpp"

#include <mpfr.h>

#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace logtan::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

void require_tol(double tol) {
    if (!(tol >= kMinTolerance) || !std::isfinite(tol))
        throw UsageError("--tol must be a finite value >= " + format_number(kMinTolerance));
}

FunctionSpec lookup_function(const std::string& name) {
    try {
        return parse_function_spec(name);
    } catch (const ParseError& e) {
        throw UsageError(std::string(e.what()) + " in '" + name + "'");
    } catch (const std::invalid_argument& e) {
        std::string msg = std::string(e.what()) + "; known functions:";
        for (const auto& f : function_catalog()) msg += " " + f;
        throw UsageError(msg);
    }
}

double parse_real(const std::string& text, const char* what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw UsageError(std::string(what) + ": expected a number, got '" + text + "'");
    return v;
}

int parse_int(const std::string& text, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError(std::string(what) + ": expected an integer, got '" + text + "'");
    return v;
}

long double mpfr_constant(int (*fn)(mpfr_ptr, mpfr_rnd_t)) {
    mpfr_t v;
    mpfr_init2(v, 128);
    fn(v, MPFR_RNDN);
    const long double out = mpfr_get_ld(v, MPFR_RNDN);
    mpfr_clear(v);
    return out;
}

long double mpfr_zeta(unsigned long s) {
    mpfr_t v;
    mpfr_init2(v, 128);
    mpfr_zeta_ui(v, s, MPFR_RNDN);
    const long double out = mpfr_get_ld(v, MPFR_RNDN);
    mpfr_clear(v);
    return out;
}

// Independent closed forms used as oracles over the full interval.
std::optional<double> known_value(const FunctionSpec& f, bool logtan_weight) {
    const auto& kind = f.kind();
    if (auto p = f.exact_polynomial()) {
        if (logtan_weight) return static_cast<double>(eval_zeta_expr(exact_L(*p)).value);
        return static_cast<double>(eval_pi_expr(p->integrate(PiExpr(), half_pi())).value);
    }
    if (!logtan_weight) {
        if (std::holds_alternative<FunctionSpec::LogSineX>(kind))
            return static_cast<double>(7.0L / 16 * zeta_int(3).value -
                                       std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 8 *
                                           std::numbers::ln2_v<long double>);
        return std::nullopt;
    }
    if (const auto* c = std::get_if<FunctionSpec::Cos2z>(&kind)) {
        if (std::fabs(c->z) < 1.0) return cos_integral_F(c->z);
        if (c->z == std::round(c->z) && std::fabs(c->z) < 1e6)
            return static_cast<double>(eval_pi_expr(cos_lemma(static_cast<int>(std::fabs(c->z)))).value);
    }
    if (const auto* l = std::get_if<FunctionSpec::LogTanPower>(&kind)) {
        if (l->p == 1) return kPi * kPi * kPi / 8;
        return 0.0;
    }
    return std::nullopt;
}

// --- verify suites -----------------------------------------------------------

CheckRow numeric_check(std::string name, double expected, double got, double tol) {
    CheckRow row;
    row.name = std::move(name);
    row.expected = format_number(expected);
    row.got = format_number(got);
    row.expected_value = expected;
    row.got_value = got;
    row.tolerance = tol;
    row.pass = std::isfinite(got) && std::fabs(got - expected) <= tol;
    return row;
}

CheckRow structural_check(std::string name, std::string expected, std::string got) {
    CheckRow row;
    row.name = std::move(name);
    row.pass = expected == got;
    row.expected = std::move(expected);
    row.got = std::move(got);
    return row;
}

double oracle_L(const FunctionSpec& f, double a = 0.0, double b = kHalfPi) {
    return integrate_logtan(f, a, b, 1e-13).value;
}

double value_of(const ZetaExpr& e) { return static_cast<double>(eval_zeta_expr(e).value); }

void exact_suite(std::vector<CheckRow>& rows) {
    const ZetaExpr lx = exact_L(Polynomial::monomial(1));
    rows.push_back(structural_check("L(x)=7/8 zeta(3)", "7/8 * zeta(3)", render(lx)));
    rows.push_back(numeric_check("L(x) vs quadrature", oracle_L(FunctionSpec::monomial(1)), value_of(lx), 1e-9));

    const ZetaExpr lx2 = exact_L(Polynomial::monomial(2));
    rows.push_back(structural_check("L(x^2)=7/16 pi zeta(3)", "7/16 * pi * zeta(3)", render(lx2)));
    rows.push_back(numeric_check("L(x^2) vs quadrature", oracle_L(FunctionSpec::monomial(2)), value_of(lx2), 1e-9));

    int agree = 0;
    for (int n = 1; n <= 12; ++n) agree += moment(n).value == exact_L(Polynomial::monomial(static_cast<unsigned>(n)));
    rows.push_back(structural_check("moment(n) = exact_L(x^n), n=1..12", "12", std::to_string(agree)));

    agree = 0;
    for (int n = 1; n <= 5; ++n) agree += euler_integral(n, Parity::odd) == exact_L(euler_poly_scaled(2 * n - 1));
    rows.push_back(structural_check("euler_integral(n, odd) = exact_L(E_(2n-1)(2x/pi)), n=1..5", "5",
                                    std::to_string(agree)));

    for (int k = 1; k <= 8; ++k)
        rows.push_back(numeric_check("int cos(" + std::to_string(2 * k) + "x) log tan = " + render(cos_lemma(k)),
                                     static_cast<double>(eval_pi_expr(cos_lemma(k)).value),
                                     oracle_L(FunctionSpec::cos2z(k)), 1e-9));

    rows.push_back(numeric_check("(2/pi) int log^2 tan = pi^2/4", kPi * kPi / 4,
                                 2 / kPi * oracle_L(FunctionSpec::logtan_power(1)), 1e-10));

    rows.push_back(numeric_check("L(sqrt x) = 0.689247", 0.689247, oracle_L(FunctionSpec::sqrt()), 5e-6));
    rows.push_back(numeric_check("approx_L(sqrt, 3 odd terms) = 0.688084888082269488", 0.688084888082269488,
                                 approx_L(FunctionSpec::sqrt(), 3).value, 1e-12));

    std::mt19937 rng(20241017);
    std::uniform_int_distribution<int> degree(0, 10);
    std::uniform_int_distribution<int> denom(1, 7);
    double worst = 0.0;
    constexpr int kRandom = 10;
    for (int i = 0; i < kRandom; ++i) {
        std::vector<PiExpr> c;
        const int d = degree(rng);
        for (int k = 0; k <= d; ++k) {
            const long q = denom(rng);
            std::uniform_int_distribution<long> num(-5 * q, 5 * q);
            c.emplace_back(Rational(num(rng), q));
        }
        const Polynomial p(std::move(c));
        worst = std::max(worst, std::fabs(value_of(exact_L(p)) - oracle_L(FunctionSpec::polynomial(p))));
    }
    rows.push_back(numeric_check("random polynomials: max |exact - quadrature| (10)", 0.0, worst, 1e-8));
}

void series_suite(std::vector<CheckRow>& rows) {
    // Reference value from a 250-digit evaluation; see README.
    rows.push_back(numeric_check("catalan_series N=10 = 0.915312751760083", 0.915312751760083, catalan_series(10), 1e-11));

    bool decreasing = true;
    double prev = parseval_defect(1);
    bool positive = prev > 0;
    for (int n = 2; n <= 30; ++n) {
        const double d = parseval_defect(n);
        positive = positive && d > 0;
        decreasing = decreasing && d < prev;
        prev = d;
    }
    rows.push_back(structural_check("parseval_defect positive and decreasing, N=1..30", "true",
                                    positive && decreasing ? "true" : "false"));

    for (double z : {0.1, 0.25, 0.5, 0.75}) {
        const std::string zs = format_number(z);
        const double f = cos_integral_F(z);
        rows.push_back(numeric_check("int cos(2zx) log tan = F(z), z=" + zs, oracle_L(FunctionSpec::cos2z(z)), f, 1e-9));
        rows.push_back(numeric_check("-sin(pi z) S_50(z) = F(z), z=" + zs, f,
                                     -std::sin(kPi * z) * partial_sum_S(z, 50).value, 1e-9));
    }
    for (double z : {-0.5, -0.2, 0.2, 0.5}) {
        const std::string zs = format_number(z);
        rows.push_back(numeric_check("exp_integral_series(z, 40), z=" + zs, oracle_L(FunctionSpec::exp2z(z)),
                                     exp_integral_series(z, 40), 1e-8));
        const auto [lhs, rhs] = sinh_identity_check(z, 40);
        rows.push_back(numeric_check("sinh identity, z=" + zs, lhs, rhs, 1e-8));
    }
    rows.push_back(numeric_check("smooth_L_series(exp2z:0.3, K=25)", oracle_L(FunctionSpec::exp2z(0.3)),
                                 smooth_L_series(FunctionSpec::exp2z(0.3), 1.0, 25), 1e-9));
    rows.push_back(numeric_check("F(1 - 1e-6) -> -pi/2", -kHalfPi, cos_integral_F(1 - 1e-6), 1e-4));
    rows.push_back(numeric_check("bradley_primitive(pi/8, 2000)", oracle_L(FunctionSpec::monomial(0), 0.0, kPi / 8),
                                 bradley_primitive(kPi / 8, 2000), 1e-6));
    rows.push_back(numeric_check("bradley_primitive(pi/4, 5000) = -G", -static_cast<double>(catalan().value),
                                 bradley_primitive(kPi / 4, 5000), 1.0 / (5000.0 * 5000.0)));
    rows.push_back(numeric_check("logtan_power_series(0.5, 60)", std::log(std::tan(0.5)), logtan_power_series(0.5, 60),
                                 1e-10));
    rows.push_back(numeric_check("euler_zeta3_series(40) = zeta(3)", static_cast<double>(zeta_int(3).value),
                                 euler_zeta3_series(40), 1e-12));
    rows.push_back(numeric_check("int x log sin x = 7/16 zeta(3) - pi^2/8 log 2",
                                 *known_value(FunctionSpec::logsine_x(), false),
                                 integrate_plain(FunctionSpec::logsine_x(), 0.0, kHalfPi, 1e-13).value, 1e-9));
}

void constants_suite(std::vector<CheckRow>& rows) {
    const long double gamma = mpfr_constant(mpfr_const_euler);
    rows.push_back(numeric_check("psi(1/2) = -gamma - 2 log 2",
                                 static_cast<double>(-gamma - 2 * std::numbers::ln2_v<long double>),
                                 static_cast<double>(digamma(0.5L).value), 1e-15));
    rows.push_back(numeric_check("psi(1) = -gamma", static_cast<double>(-gamma), static_cast<double>(digamma(1.0L).value),
                                 1e-15));
    rows.push_back(numeric_check("zeta(3) = 1.2020569031595942854", 1.2020569031595942854,
                                 static_cast<double>(zeta_int(3).value), 1e-15));
    rows.push_back(numeric_check("zeta(2) = pi^2/6", kPi * kPi / 6, static_cast<double>(zeta_int(2).value), 1e-15));
    for (unsigned long s : {5UL, 7UL, 9UL, 21UL})
        rows.push_back(numeric_check("zeta(" + std::to_string(s) + ") vs MPFR", static_cast<double>(mpfr_zeta(s)),
                                     static_cast<double>(zeta_int(static_cast<int>(s)).value), 1e-15));
    rows.push_back(numeric_check("catalan vs MPFR", static_cast<double>(mpfr_constant(mpfr_const_catalan)),
                                 static_cast<double>(catalan().value), 1e-15));
}

}  // namespace

void Report::finish() {
    if (numeric && oracle) delta = std::fabs(numeric->value - *oracle);
    else delta.reset();
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Report cmd_exact(const std::string& poly_spec, bool scaled, double tol) {
    require_tol(tol);
    Polynomial p;
    try {
        p = parse_polynomial_spec(poly_spec);
    } catch (const ParseError& e) {
        std::ostringstream os;
        os << e.what() << "\n  " << poly_spec << "\n  " << std::string(e.position(), ' ') << '^';
        throw UsageError(os.str());
    }
    if (scaled) p = p.compose_linear(PiExpr::pi_power(-1, Rational(2)), PiExpr());

    Report r;
    r.command = "exact";
    r.inputs = {{"poly", poly_spec}, {"var", scaled ? "scaled" : "plain"}};
    const ZetaExpr e = exact_L(p);
    r.exact = render(e);
    const NumericValue v = eval_zeta_expr(e);
    r.numeric = Numeric{static_cast<double>(v.value), static_cast<double>(v.err_bound)};
    r.oracle = integrate_logtan(FunctionSpec::polynomial(p), 0.0, kHalfPi, tol).value;
    r.finish();
    return r;
}

Report cmd_project(const std::string& function, int terms, double tol) {
    require_tol(tol);
    if (terms < 1) throw UsageError("--terms must be >= 1");
    const FunctionSpec f = lookup_function(function);
    Report r;
    r.command = "project";
    r.inputs = {{"function", function}, {"terms", std::to_string(terms)}};

    const LegendreCoeffs coeffs = expand(f, terms);
    for (int n = 0; n <= terms; ++n) r.table.emplace_back("c_" + std::to_string(n), coeffs.coeffs[static_cast<std::size_t>(n)]);

    const ApproxL a = approx_L(f, (terms + 1) / 2);
    for (std::size_t k = 0; k < a.c_table.size(); ++k)
        r.table.emplace_back("c_" + std::to_string(a.N) + "," + std::to_string(k + 1), static_cast<double>(a.c_table[k]));
    // The error field carries the disagreement between the two summation orders.
    r.numeric = Numeric{a.value, std::fabs(a.value - a.value_by_index)};
    if (auto p = f.exact_polynomial()) r.exact = render(exact_L(*p));
    r.oracle = integrate_logtan(f, 0.0, kHalfPi, tol).value;
    r.finish();
    return r;
}

Report cmd_quad(const std::string& function, double lower, double upper, bool logtan_weight, double tol) {
    require_tol(tol);
    const FunctionSpec f = lookup_function(function);
    Report r;
    r.command = "quad";
    r.inputs = {{"function", function},
                {"lower", format_number(lower)},
                {"upper", format_number(upper)},
                {"weight", logtan_weight ? "logtan" : "none"}};
    QuadratureResult q;
    try {
        q = logtan_weight ? integrate_logtan(f, lower, upper, tol) : integrate_plain(f, lower, upper, tol);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    r.numeric = Numeric{q.value, q.est_error};
    r.table = {{"levels_used", q.levels_used}, {"converged", q.converged ? 1.0 : 0.0}};
    if (lower == 0.0 && upper >= kHalfPi) {
        r.oracle = known_value(f, logtan_weight);
        if (logtan_weight)
            if (auto p = f.exact_polynomial()) r.exact = render(exact_L(*p));
    }
    r.finish();
    return r;
}

Report cmd_constants(const std::string& name, const std::vector<std::string>& args) {
    Report r;
    r.command = "constants";
    r.inputs = {{"name", name}};
    auto want_args = [&](std::size_t n) {
        if (args.size() != n)
            throw UsageError("constants " + name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    };
    NumericValue v;
    if (name == "zeta") {
        want_args(1);
        r.inputs.emplace_back("s", args[0]);
        const int s = parse_int(args[0], "zeta");
        if (s < 2) throw UsageError("zeta: s must be an integer >= 2");
        v = zeta_int(s);
        if (s % 2 == 0) {
            const PiExpr closed = zeta_even_exact(s / 2);
            r.exact = render(closed);
            r.oracle = static_cast<double>(eval_pi_expr(closed).value);
        }
    } else if (name == "catalan") {
        want_args(0);
        v = catalan();
    } else if (name == "digamma") {
        want_args(1);
        r.inputs.emplace_back("x", args[0]);
        const double x = parse_real(args[0], "digamma");
        if (!(x > 0)) throw UsageError("digamma: x must be > 0");
        v = digamma(x);
        const long double gamma = kEulerGamma;
        if (x == 0.5) r.oracle = static_cast<double>(-gamma - 2 * std::numbers::ln2_v<long double>);
        if (x == 1.0) r.oracle = static_cast<double>(-gamma);
    } else {
        throw UsageError("unknown constant '" + name + "'; expected zeta, catalan or digamma");
    }
    r.numeric = Numeric{static_cast<double>(v.value), static_cast<double>(v.err_bound)};
    r.finish();
    return r;
}

Report cmd_verify(const std::string& suite) {
    Report r;
    r.command = "verify";
    r.inputs = {{"suite", suite}};
    const bool all = suite == "all";
    if (!all && suite != "exact" && suite != "series" && suite != "constants")
        throw UsageError("unknown suite '" + suite + "'; expected all, exact, series or constants");
    if (all || suite == "exact") exact_suite(r.checks);
    if (all || suite == "series") series_suite(r.checks);
    if (all || suite == "constants") constants_suite(r.checks);
    r.finish();
    return r;
}

}  // namespace logtan::cli
