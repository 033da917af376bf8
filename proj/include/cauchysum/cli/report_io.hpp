#ifndef CAUCHYSUM_CLI_REPORT_IO_HPP
#define CAUCHYSUM_CLI_REPORT_IO_HPP

#include "cauchysum/identities/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cauchysum::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, markdown, plain };

std::string to_string(Format f);
std::optional<Format> parse_format(std::string_view text);

std::optional<identities::Status> parse_status(std::string_view text);

/// Floats as "%.17g"; non-finite values as "nan", "inf", "-inf".
std::string format_double(double v);

// Exact reports carry rationals as "p/q" strings in lhs, rhs, abs_err and
// rel_err; series reports carry numbers. Non-finite numbers become null.
Json to_json(const identities::VerificationReport& r);
identities::VerificationReport report_from_json(const Json& j);

std::string csv_header();
std::string to_csv_row(const identities::VerificationReport& r);
std::string csv_escape(std::string_view field);

std::string markdown_header();
std::string to_markdown_row(const identities::VerificationReport& r);

/// One line plus indented check and note lines.
std::string to_plain(const identities::VerificationReport& r);

struct Summary {
    std::size_t total = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t flagged = 0;
    std::size_t not_converged = 0;
    std::size_t error = 0;
};

Summary summarize(const std::vector<identities::VerificationReport>& reports);
std::string summary_line(const Summary& s);
Json to_json(const Summary& s);
/// 0 when every report is PASS or FLAGGED, 1 otherwise.
int exit_code(const Summary& s);

/// Renders a report list in the given format; CSV and markdown include headers.
std::string render_reports(const std::vector<identities::VerificationReport>& reports, Format f);

}  // namespace cauchysum::cli

#endif
