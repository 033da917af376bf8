#include "cauchysum/cli/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace cauchysum::cli {

using identities::Status;
using identities::VerificationReport;

std::string to_string(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::markdown: return "markdown";
        case Format::plain: return "plain";
    }
    return "plain";
}

std::optional<Format> parse_format(std::string_view text) {
    for (auto f : {Format::json, Format::csv, Format::markdown, Format::plain}) {
        if (text == to_string(f)) return f;
    }
    return std::nullopt;
}

std::optional<Status> parse_status(std::string_view text) {
    for (auto s : {Status::pass, Status::fail, Status::flagged, Status::not_converged, Status::error}) {
        if (text == identities::to_string(s)) return s;
    }
    return std::nullopt;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double read_number(const Json& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    return j.get<double>();
}

bool is_exact(const VerificationReport& r) { return !r.lhs_text.empty(); }

std::string value_text(double v, const std::string& exact) { return exact.empty() ? format_double(v) : exact; }

}  // namespace

Json to_json(const VerificationReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v.to_string();
    Json j;
    j["id"] = r.id;
    j["kind"] = identities::to_string(r.kind);
    j["params"] = params;
    if (is_exact(r)) {
        j["lhs"] = r.lhs_text;
        j["rhs"] = r.rhs_text;
        j["abs_err"] = r.abs_err_text;
        j["rel_err"] = r.rel_err_text;
    } else {
        j["lhs"] = number(r.lhs);
        j["rhs"] = number(r.rhs);
        j["abs_err"] = number(r.abs_err);
        j["rel_err"] = number(r.rel_err);
    }
    j["tol"] = number(r.tol);
    j["status"] = identities::to_string(r.status);
    j["terms_used"] = r.terms_used;
    j["elapsed_ms"] = number(r.elapsed_ms);
    j["paper_ref"] = r.paper_ref;
    j["method"] = r.method;
    j["error_estimate"] = number(r.error_estimate);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"label", c.label},
                              {"value", number(c.value)},
                              {"target", number(c.target)},
                              {"tol", number(c.tol)},
                              {"passed", c.passed()}});
    }
    j["checks"] = checks;
    j["note"] = r.note;
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    const auto kind = identities::parse_kind(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown kind in report");
    r.kind = *kind;
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = BigRational::parse(v.get<std::string>());
    if (j.at("lhs").is_string()) {
        r.lhs_text = j.at("lhs").get<std::string>();
        r.rhs_text = j.at("rhs").get<std::string>();
        r.abs_err_text = j.at("abs_err").get<std::string>();
        r.rel_err_text = j.at("rel_err").get<std::string>();
        r.lhs = BigRational::parse(r.lhs_text).to_double();
        r.rhs = BigRational::parse(r.rhs_text).to_double();
        r.abs_err = BigRational::parse(r.abs_err_text).to_double();
        r.rel_err = BigRational::parse(r.rel_err_text).to_double();
    } else {
        r.lhs = read_number(j.at("lhs"));
        r.rhs = read_number(j.at("rhs"));
        r.abs_err = read_number(j.at("abs_err"));
        r.rel_err = read_number(j.at("rel_err"));
    }
    r.tol = read_number(j.at("tol"));
    const auto status = parse_status(j.at("status").get<std::string>());
    if (!status) throw std::invalid_argument("unknown status in report");
    r.status = *status;
    r.terms_used = j.at("terms_used").get<long>();
    r.elapsed_ms = read_number(j.at("elapsed_ms"));
    r.paper_ref = j.at("paper_ref").get<std::string>();
    r.method = j.value("method", std::string{});
    r.error_estimate = j.contains("error_estimate") ? read_number(j.at("error_estimate")) : 0.0;
    if (j.contains("checks")) {
        for (const auto& c : j.at("checks")) {
            r.checks.push_back({c.at("label").get<std::string>(), read_number(c.at("value")),
                                read_number(c.at("target")), read_number(c.at("tol"))});
        }
    }
    r.note = j.value("note", std::string{});
    return r;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_header() {
    return "id,kind,params,lhs,rhs,abs_err,rel_err,tol,status,terms_used,elapsed_ms,paper_ref";
}

std::string to_csv_row(const VerificationReport& r) {
    const std::string fields[] = {
        r.id,
        identities::to_string(r.kind),
        identities::format_params(r.params),
        value_text(r.lhs, r.lhs_text),
        value_text(r.rhs, r.rhs_text),
        value_text(r.abs_err, r.abs_err_text),
        value_text(r.rel_err, r.rel_err_text),
        format_double(r.tol),
        identities::to_string(r.status),
        std::to_string(r.terms_used),
        format_double(r.elapsed_ms),
        r.paper_ref,
    };
    std::string out = csv_escape(fields[0]);
    for (std::size_t i = 1; i < std::size(fields); ++i) out += ',' + csv_escape(fields[i]);
    return out;
}

namespace {

std::string md_cell(std::string text) {
    std::string out;
    for (char c : text) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string markdown_header() {
    return "| id | params | status | lhs | rhs | abs_err | tol | terms |\n|---|---|---|---|---|---|---|---|";
}

std::string to_markdown_row(const VerificationReport& r) {
    std::ostringstream os;
    os << "| " << md_cell(r.id) << " | " << md_cell(identities::format_params(r.params)) << " | "
       << identities::to_string(r.status) << " | " << md_cell(value_text(r.lhs, r.lhs_text)) << " | "
       << md_cell(value_text(r.rhs, r.rhs_text)) << " | " << md_cell(value_text(r.abs_err, r.abs_err_text)) << " | "
       << format_double(r.tol) << " | " << r.terms_used << " |";
    return os.str();
}

std::string to_plain(const VerificationReport& r) {
    std::ostringstream os;
    os << r.id;
    const std::string params = identities::format_params(r.params);
    if (!params.empty()) os << " [" << params << "]";
    os << ' ' << identities::to_string(r.status);
    if (r.status == Status::flagged) {
        os << " computed " << value_text(r.lhs, r.lhs_text) << " vs claimed " << value_text(r.rhs, r.rhs_text);
    } else {
        os << " lhs=" << value_text(r.lhs, r.lhs_text) << " rhs=" << value_text(r.rhs, r.rhs_text);
    }
    os << " abs_err=" << value_text(r.abs_err, r.abs_err_text);
    if (!is_exact(r)) os << " tol=" << format_double(r.tol) << " terms=" << r.terms_used << " method=" << r.method;
    for (const auto& c : r.checks) {
        os << "\n  check " << c.label << ": " << format_double(c.value) << " vs " << format_double(c.target)
           << (c.passed() ? " ok" : " FAILED");
    }
    if (!r.note.empty()) os << "\n  note: " << r.note;
    return os.str();
}

Summary summarize(const std::vector<VerificationReport>& reports) {
    Summary s;
    s.total = reports.size();
    for (const auto& r : reports) {
        switch (r.status) {
            case Status::pass: ++s.pass; break;
            case Status::fail: ++s.fail; break;
            case Status::flagged: ++s.flagged; break;
            case Status::not_converged: ++s.not_converged; break;
            case Status::error: ++s.error; break;
        }
    }
    return s;
}

std::string summary_line(const Summary& s) {
    std::ostringstream os;
    os << "summary: total=" << s.total << " PASS=" << s.pass << " FAIL=" << s.fail << " FLAGGED=" << s.flagged
       << " NOT_CONVERGED=" << s.not_converged << " ERROR=" << s.error;
    return os.str();
}

Json to_json(const Summary& s) {
    return Json{{"total", s.total},
                {"PASS", s.pass},
                {"FAIL", s.fail},
                {"FLAGGED", s.flagged},
                {"NOT_CONVERGED", s.not_converged},
                {"ERROR", s.error}};
}

int exit_code(const Summary& s) { return (s.fail + s.not_converged + s.error) == 0 ? 0 : 1; }

std::string render_reports(const std::vector<VerificationReport>& reports, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            os << arr.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << csv_header() << '\n';
            for (const auto& r : reports) os << to_csv_row(r) << '\n';
            break;
        case Format::markdown:
            os << markdown_header() << '\n';
            for (const auto& r : reports) os << to_markdown_row(r) << '\n';
            break;
        case Format::plain:
            for (const auto& r : reports) os << to_plain(r) << '\n';
            break;
    }
    return os.str();
}

}  // namespace cauchysum::cli
