#include "qrice/report_json.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace qrice {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_fragment(const std::string& fragment) {
    return fragment.empty() ? ordered_json(nullptr) : ordered_json::parse(fragment);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

} // namespace

std::string check_json_line(const CheckResult& check) {
    ordered_json j;
    j["suite"] = check.suite;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : check.params) params[name] = value;
    j["params"] = params;
    j["point"] = parse_fragment(check.point_json);
    j["lhs"] = parse_fragment(check.lhs_json);
    j["rhs"] = parse_fragment(check.rhs_json);
    if (!check.extra_json.empty()) j["extra"] = parse_fragment(check.extra_json);
    j["equal"] = check.equal;
    if (!check.note.empty()) j["note"] = check.note;
    j["elapsed_us"] = check.elapsed_us;
    return j.dump();
}

std::string summary_json_line(const Report& report) {
    ordered_json j;
    j["summary"] = true;
    j["suite"] = report.suite;
    j["config"] = ordered_json{{"seed", report.config.seed},
                               {"trials", report.config.trials},
                               {"n_max", report.config.n_max},
                               {"m_max", report.config.m_max},
                               {"trunc", report.config.q_order},
                               {"denominator_bound", report.config.denominator_bound},
                               {"mode", mode_name(report.config.mode)}};
    j["checks"] = report.checks.size();
    j["pass"] = report.pass_count();
    j["fail"] = report.fail_count();
    j["overall"] = report.overall();
    return j.dump();
}

void write_report(std::ostream& os, const Report& report) {
    for (const CheckResult& check : report.checks)
        os << check_json_line(check) << '\n';
    os << summary_json_line(report) << '\n';
}

std::string report_to_string(const Report& report) {
    std::ostringstream out;
    write_report(out, report);
    return out.str();
}

bool reports_equal_ignoring_elapsed(const std::string& report_a,
                                    const std::string& report_b) {
    const std::vector<std::string> lines_a = split_lines(report_a);
    const std::vector<std::string> lines_b = split_lines(report_b);
    if (lines_a.size() != lines_b.size()) return false;
    for (std::size_t i = 0; i < lines_a.size(); ++i) {
        ordered_json a, b;
        try {
            a = ordered_json::parse(lines_a[i]);
            b = ordered_json::parse(lines_b[i]);
        } catch (const ordered_json::parse_error&) {
            return false;
        }
        a.erase("elapsed_us");
        b.erase("elapsed_us");
        if (a != b) return false;
    }
    return true;
}

} // namespace qrice
