#include "logtan/cli.hpp"

#include "logtan/quadrature.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <numbers>
#include <ostream>

namespace logtan::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Log-tangent integrals: exact closed forms, projections and quadrature checks", "logtan"};
    app.require_subcommand(1);

    OutputFormat format = OutputFormat::text;
    double tol = 1e-10;
    std::string out_path;
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    app.add_option("--format", format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--tol", tol, "oracle quadrature tolerance (>= 1e-13)")->capture_default_str();
    app.add_option("--out", out_path, "write the report here instead of stdout");

    std::string poly_spec;
    std::string var = "plain";
    auto* exact = app.add_subcommand("exact", "exact L(P) for a polynomial given by ascending coefficients");
    exact->add_option("poly", poly_spec, "e.g. \"0,1/2,-3\"")->required();
    exact->add_option("--var", var, "plain: P(x); scaled: P(2x/pi)")->check(CLI::IsMember({"plain", "scaled"}));

    std::string function;
    int terms = 5;
    auto* project = app.add_subcommand("project", "shifted-Legendre approximation of L(f)");
    project->add_option("function", function, "catalog name, e.g. sqrt, exp2z:0.3")->required();
    project->add_option("--terms", terms, "highest Legendre degree")->capture_default_str();

    double lower = 0.0;
    double upper = std::numbers::pi / 2;
    std::string weight = "logtan";
    auto* quad = app.add_subcommand("quad", "tanh-sinh quadrature of f(x) log tan x");
    quad->add_option("function", function, "catalog name")->required();
    quad->add_option("--lower", lower, "lower limit")->capture_default_str();
    quad->add_option("--upper", upper, "upper limit (default pi/2)");
    quad->add_option("--weight", weight, "logtan or none")->check(CLI::IsMember({"logtan", "none"}));

    std::string constant;
    std::vector<std::string> constant_args;
    auto* constants = app.add_subcommand("constants", "zeta <s>, catalan, digamma <x>");
    constants->add_option("name", constant, "zeta, catalan or digamma")->required();
    constants->add_option("args", constant_args, "arguments");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("suite", suite, "all, exact, series or constants")->capture_default_str();

    for (auto* sub : {exact, project, quad, constants, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Report r;
        if (*exact) r = cmd_exact(poly_spec, var == "scaled", tol);
        else if (*project) r = cmd_project(function, terms, tol);
        else if (*quad) r = cmd_quad(function, lower, upper, weight == "logtan", tol);
        else if (*constants) r = cmd_constants(constant, constant_args);
        else r = cmd_verify(suite);

        const std::string text = format_report(r, format);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(out_path);
            if (!file) {
                err << "error: cannot open '" << out_path << "' for writing\n";
                return 2;
            }
            file << text;
        }
        return r.all_pass() ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace logtan::cli
