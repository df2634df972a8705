#pragma once

#include <iosfwd>
#include <string>

#include "qrice/verifier.hpp"

namespace qrice {

/// One newline-delimited-JSON line for a check (no trailing newline).
std::string check_json_line(const CheckResult& check);

/// The trailing summary object line (config echo, counts, overall flag).
std::string summary_json_line(const Report& report);

/// Writes the full report: one line per check, then the summary line.
void write_report(std::ostream& os, const Report& report);

std::string report_to_string(const Report& report);

/// Structural comparison of two rendered reports with elapsed-time fields
/// ignored; used by the determinism checks.
bool reports_equal_ignoring_elapsed(const std::string& report_a,
                                    const std::string& report_b);

} // namespace qrice
