#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logtan::cli {

enum class OutputFormat { text, json, csv };

/// Bad arguments or unparsable input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Numeric {
    double value = 0.0;
    double error = 0.0;
};

struct CheckRow {
    std::string name;
    std::string expected;
    std::string got;
    std::optional<double> expected_value;
    std::optional<double> got_value;
    double tolerance = 0.0;  // 0 for structural checks
    bool pass = false;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::optional<std::string> exact;
    std::optional<Numeric> numeric;
    std::optional<double> oracle;
    /// Set by finish(): |numeric - oracle| when both are present.
    std::optional<double> delta;
    /// Extra named values, e.g. projection coefficients.
    std::vector<std::pair<std::string, double>> table;
    std::vector<CheckRow> checks;

    void finish();
    bool all_pass() const;
};

Report cmd_exact(const std::string& poly_spec, bool scaled, double tol);
Report cmd_project(const std::string& function, int terms, double tol);
Report cmd_quad(const std::string& function, double lower, double upper, bool logtan_weight, double tol);
Report cmd_constants(const std::string& name, const std::vector<std::string>& args);
/// suite: all, exact, series or constants.
Report cmd_verify(const std::string& suite);

std::string format_report(const Report& r, OutputFormat format);

/// 15 significant digits.
std::string format_number(double v);

/// Full command-line entry point; returns the process exit code
/// (0 success, 1 verification or computation failure, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logtan::cli
