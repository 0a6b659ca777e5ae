#include "logtan/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace logtan::cli {

namespace {

using nlohmann::ordered_json;

// Round-trips through 15 digits so JSON carries the same precision as text.
double rounded(double v) { return std::stod(format_number(v)); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string to_json(const Report& r) {
    ordered_json j;
    j["command"] = r.command;
    j["inputs"] = ordered_json::object();
    for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
    j["exact"] = r.exact ? ordered_json(*r.exact) : ordered_json(nullptr);
    if (r.numeric) {
        ordered_json n{{"value", rounded(r.numeric->value)}, {"error", rounded(r.numeric->error)}};
        if (!r.table.empty()) {
            n["table"] = ordered_json::array();
            for (const auto& [k, v] : r.table) n["table"].push_back({{"name", k}, {"value", rounded(v)}});
        }
        j["numeric"] = n;
    } else {
        j["numeric"] = nullptr;
    }
    j["oracle"] = r.oracle ? ordered_json(rounded(*r.oracle)) : ordered_json(nullptr);
    j["delta"] = r.delta ? ordered_json(rounded(*r.delta)) : ordered_json(nullptr);
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json row{{"name", c.name}};
        row["expected"] = c.expected_value ? ordered_json(rounded(*c.expected_value)) : ordered_json(c.expected);
        row["got"] = c.got_value ? ordered_json(rounded(*c.got_value)) : ordered_json(c.got);
        row["tolerance"] = c.tolerance;
        row["pass"] = c.pass;
        j["checks"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "command,item,value,error,oracle,delta,status\n";
    auto line = [&](const std::string& item, const std::string& value, const std::string& error,
                    const std::string& oracle, const std::string& delta, const std::string& status) {
        os << csv_field(r.command) << ',' << csv_field(item) << ',' << csv_field(value) << ',' << csv_field(error) << ','
           << csv_field(oracle) << ',' << csv_field(delta) << ',' << status << '\n';
    };
    if (r.exact) line("exact", *r.exact, "", "", "", "");
    if (r.numeric)
        line("value", format_number(r.numeric->value), format_number(r.numeric->error), opt_number(r.oracle),
             opt_number(r.delta), "");
    for (const auto& [k, v] : r.table) line(k, format_number(v), "", "", "", "");
    for (const auto& c : r.checks) {
        const std::string delta =
            (c.expected_value && c.got_value) ? format_number(std::fabs(*c.got_value - *c.expected_value)) : "";
        line(c.name, c.got, format_number(c.tolerance), c.expected, delta, c.pass ? "PASS" : "FAIL");
    }
    return os.str();
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << r.command;
    for (const auto& [k, v] : r.inputs) os << "  " << k << '=' << v;
    os << '\n';
    if (r.exact) os << "exact:   " << *r.exact << '\n';
    if (r.numeric) os << "numeric: " << format_number(r.numeric->value) << "  (+- " << format_number(r.numeric->error) << ")\n";
    if (r.oracle) os << "oracle:  " << format_number(*r.oracle) << '\n';
    if (r.delta) os << "delta:   " << format_number(*r.delta) << '\n';
    if (!r.table.empty()) {
        os << '\n';
        for (const auto& [k, v] : r.table) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "  %-10s ", k.c_str());
            os << buf << format_number(v) << '\n';
        }
    }
    if (!r.checks.empty()) {
        int passed = 0;
        for (const auto& c : r.checks) {
            passed += c.pass;
            os << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n      expected " << c.expected << ", got " << c.got;
            if (c.tolerance > 0) os << ", tol " << format_number(c.tolerance);
            os << '\n';
        }
        os << passed << '/' << r.checks.size() << " checks passed\n";
    }
    return os.str();
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string format_report(const Report& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return to_json(r);
        case OutputFormat::csv: return to_csv(r);
        case OutputFormat::text: break;
    }
    return to_text(r);
}

}  // namespace logtan::cli
