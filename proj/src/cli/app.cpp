#include "cauchysum/cli/app.hpp"

#include "cauchysum/analytic/quadrature.hpp"
#include "cauchysum/analytic/special_functions.hpp"
#include "cauchysum/cli/report_io.hpp"
#include "cauchysum/cli/tables.hpp"
#include "cauchysum/exact/kernel.hpp"
#include "cauchysum/identities/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace cauchysum::cli {

namespace {

using identities::IdentityRecord;
using identities::ParamSet;
using identities::VerificationReport;

// Raised for anything that must end with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    Format format = Format::plain;
    std::optional<double> tol;
    std::vector<std::pair<std::string, double>> tol_overrides;
    long max_terms = 200000;
    transform::AccelMethod accel = transform::AccelMethod::automatic;
    unsigned jobs = 0;
    std::string filter;
    bool timing = true;
};

double parse_positive(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(v > 0.0) || !std::isfinite(v)) {
        throw UsageError(key + ": expected a positive number, got '" + text + "'");
    }
    return v;
}

long parse_count(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 0) throw UsageError(key + ": expected a non-negative integer, got '" + text + "'");
    return v;
}

transform::AccelMethod parse_accel(const std::string& text) {
    const auto a = transform::parse_accel_method(text);
    if (!a) throw UsageError("unknown acceleration method '" + text + "'");
    return *a;
}

Format parse_format_or_throw(const std::string& text) {
    const auto f = parse_format(text);
    if (!f) throw UsageError("unknown format '" + text + "'");
    return *f;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// key=value lines; '#' starts a comment. "tol.<glob>" sets a per-id tolerance.
void load_config_file(const std::string& path, CliConfig& c) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "format") {
            c.format = parse_format_or_throw(value);
        } else if (key == "tol") {
            c.tol = parse_positive(key, value);
        } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
            c.tol_overrides.emplace_back(key.substr(4), parse_positive(key, value));
        } else if (key == "max-terms" || key == "max_terms") {
            c.max_terms = parse_count(key, value);
        } else if (key == "accel") {
            c.accel = parse_accel(value);
        } else if (key == "jobs") {
            c.jobs = static_cast<unsigned>(parse_count(key, value));
        } else if (key == "filter") {
            c.filter = value;
        } else if (key == "timing") {
            if (value != "true" && value != "false") throw UsageError("timing: expected true or false");
            c.timing = value == "true";
        } else {
            throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
}

std::set<std::string> grid_keys(const IdentityRecord& rec) {
    std::set<std::string> keys;
    if (!rec.grid.empty()) {
        for (const auto& [k, v] : rec.grid.front()) keys.insert(k);
    }
    return keys;
}

const IdentityRecord& lookup(const std::string& id) {
    const IdentityRecord* rec = identities::find_identity(id);
    if (!rec) throw UsageError("unknown identity id '" + id + "'");
    return *rec;
}

ParamSet parse_point(const IdentityRecord& rec, const std::string& text) {
    ParamSet p;
    try {
        p = identities::parse_params(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--params: ") + e.what());
    }
    const auto keys = grid_keys(rec);
    for (const auto& [k, v] : p) {
        if (!keys.count(k)) throw UsageError(rec.id + " has no parameter '" + k + "'");
    }
    for (const auto& k : keys) {
        if (!p.count(k)) throw UsageError(rec.id + " needs parameter '" + k + "'");
    }
    return p;
}

std::vector<ParamSet> points_for(const IdentityRecord& rec, const std::string& params) {
    if (!params.empty()) return {parse_point(rec, params)};
    if (rec.grid.empty()) return {ParamSet{}};
    return rec.grid;
}

// ---- subcommands -----------------------------------------------------------------

int cmd_list(const CliConfig& c, const std::string& kind_text, std::ostream& out) {
    std::optional<identities::IdentityKind> kind;
    if (!kind_text.empty()) {
        kind = identities::parse_kind(kind_text);
        if (!kind) throw UsageError("unknown kind '" + kind_text + "'");
    }
    std::vector<const IdentityRecord*> sel;
    for (const auto& r : identities::registry()) {
        if (!kind || r.kind == *kind) sel.push_back(&r);
    }
    auto points = [](const IdentityRecord& r) { return r.grid.empty() ? std::size_t{1} : r.grid.size(); };
    switch (c.format) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto* r : sel) {
                arr.push_back(Json{{"id", r->id},
                                   {"kind", identities::to_string(r->kind)},
                                   {"grid_points", points(*r)},
                                   {"paper_ref", r->paper_ref},
                                   {"statement", r->statement}});
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "id,kind,grid_points,paper_ref,statement\n";
            for (const auto* r : sel) {
                out << csv_escape(r->id) << ',' << identities::to_string(r->kind) << ',' << points(*r) << ','
                    << csv_escape(r->paper_ref) << ',' << csv_escape(r->statement) << '\n';
            }
            break;
        case Format::markdown:
            out << "| id | kind | points | reference |\n|---|---|---|---|\n";
            for (const auto* r : sel) {
                out << "| " << r->id << " | " << identities::to_string(r->kind) << " | " << points(*r) << " | "
                    << r->paper_ref << " |\n";
            }
            break;
        case Format::plain:
            for (const auto* r : sel) {
                out << r->id << "  " << identities::to_string(r->kind) << "  points=" << points(*r) << "  "
                    << r->paper_ref << '\n';
            }
            break;
    }
    return 0;
}

int cmd_verify(const CliConfig& c, const std::string& id, const std::string& params, std::ostream& out) {
    const IdentityRecord& rec = lookup(id);
    const auto pts = points_for(rec, params);
    identities::VerifyOptions vo;
    vo.tol = c.tol;
    for (const auto& [glob, tol] : c.tol_overrides) {
        if (identities::glob_match(glob, rec.id)) {
            vo.tol = tol;
            break;
        }
    }
    vo.accel = c.accel;
    vo.max_terms = c.max_terms;
    std::vector<VerificationReport> reports;
    for (const auto& p : pts) {
        try {
            reports.push_back(identities::verify(rec, p, vo));
        } catch (const exact::IndexBoundError& e) {
            throw UsageError(std::string("parameters beyond kernel bounds: ") + e.what());
        }
        if (!c.timing) reports.back().elapsed_ms = 0.0;
    }
    out << render_reports(reports, c.format);
    return exit_code(summarize(reports));
}

int cmd_run_all(const CliConfig& c, std::ostream& out, std::ostream& err) {
    identities::RunConfig rc;
    rc.filter = c.filter;
    rc.tol = c.tol;
    rc.tol_overrides = c.tol_overrides;
    rc.accel = c.accel;
    rc.max_terms = c.max_terms;
    rc.jobs = c.jobs;
    rc.timing = c.timing;
    const auto reports = identities::run_all(rc);
    const Summary s = summarize(reports);
    switch (c.format) {
        case Format::json: {
            Json doc;
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            doc["reports"] = arr;
            doc["summary"] = to_json(s);
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << render_reports(reports, c.format);
            err << summary_line(s) << '\n';
            break;
        case Format::markdown:
        case Format::plain:
            out << render_reports(reports, c.format) << summary_line(s) << '\n';
            break;
    }
    return exit_code(s);
}

int cmd_table(const CliConfig& c, const std::string& family, const TableBounds& b, std::ostream& out) {
    Table t;
    try {
        t = make_table(family, b);
    } catch (const exact::IndexBoundError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    switch (c.format) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& row : t.rows) {
                Json j;
                for (std::size_t i = 0; i < t.index_names.size(); ++i) j[t.index_names[i]] = row.index[i];
                j["value"] = row.value.to_string();
                arr.push_back(j);
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::csv:
        case Format::markdown:
        case Format::plain: {
            const bool md = c.format == Format::markdown;
            const std::string sep = c.format == Format::csv ? "," : md ? " | " : "  ";
            std::string header = md ? "| " : "";
            for (const auto& name : t.index_names) header += name + sep;
            header += "value";
            if (md) {
                header += " |\n|";
                for (std::size_t i = 0; i <= t.index_names.size(); ++i) header += "---|";
            }
            out << header << '\n';
            for (const auto& row : t.rows) {
                if (md) out << "| ";
                for (long v : row.index) out << v << sep;
                out << row.value.to_string() << (md ? " |" : "") << '\n';
            }
            break;
        }
    }
    return 0;
}

// ---- eval ----------------------------------------------------------------------

struct IntegrandSpec {
    std::string description;
    std::vector<std::string> params;
    std::function<analytic::Integrand(const ParamSet&)> make;
};

double param_d(const ParamSet& p, const std::string& k) { return p.at(k).to_double(); }

long param_i(const ParamSet& p, const std::string& k, long lo) {
    const auto& v = p.at(k);
    if (!v.is_integer() || v.numerator() < lo || !v.numerator().fits_slong_p()) {
        throw UsageError("parameter '" + k + "' must be an integer >= " + std::to_string(lo));
    }
    return v.numerator().get_si();
}

double psi_shift(double x) { return analytic::digamma(x + 1.0) + analytic::kEulerGamma; }

const std::map<std::string, IntegrandSpec>& integrands() {
    static const std::map<std::string, IntegrandSpec> table = {
        {"psi-over-x-plus-1",
         {"(psi(x+1)+gamma)/(x+1)", {}, [](const ParamSet&) { return [](double x) { return psi_shift(x) / (x + 1); }; }}},
        {"psi-over-rising",
         {"(psi(x+1)+gamma)/((x+1)...(x+r))", {"r"},
          [](const ParamSet& p) {
              const long r = param_i(p, "r", 1);
              return [r](double x) {
                  double d = 1.0;
                  for (long i = 1; i <= r; ++i) d *= x + i;
                  return psi_shift(x) / d;
              };
          }}},
        {"psi-over-rising-squared",
         {"(psi(x+1)+gamma)/((x+1)^2(x+2)...(x+r))", {"r"},
          [](const ParamSet& p) {
              const long r = param_i(p, "r", 1);
              return [r](double x) {
                  double d = x + 1.0;
                  for (long i = 1; i <= r; ++i) d *= x + i;
                  return psi_shift(x) / d;
              };
          }}},
        {"central-binomial",
         {"C(2x,x)/4^x", {}, [](const ParamSet&) { return [](double x) { return analytic::central_binomial_real(x); }; }}},
        {"skew-harmonic-kernel",
         {"(1-2^x)/x", {},
          [](const ParamSet&) {
              return [](double x) { return x == 0.0 ? -analytic::kLn2 : -std::expm1(x * analytic::kLn2) / x; };
          }}},
        {"binomial-power",
         {"C(x,q)(1-z)^x", {"q", "z"},
          [](const ParamSet& p) {
              const int q = static_cast<int>(param_i(p, "q", 0));
              const double z = param_d(p, "z");
              return [q, z](double x) { return analytic::binom_real(x, q) * std::pow(1.0 - z, x); };
          }}},
        {"power-over-two-to-x",
         {"x^k/2^x", {"k"},
          [](const ParamSet& p) {
              const int k = static_cast<int>(param_i(p, "k", 0));
              return [k](double x) { return std::pow(x, k) * std::exp2(-x); };
          }}},
    };
    return table;
}

int cmd_eval(const CliConfig& c, const std::string& what, const std::string& target, const std::string& params,
             std::ostream& out) {
    Json j;
    bool ok = true;
    if (what == "integral") {
        const auto it = integrands().find(target);
        if (it == integrands().end()) {
            std::string names;
            for (const auto& [k, v] : integrands()) names += (names.empty() ? "" : ", ") + k;
            throw UsageError("unknown integrand '" + target + "' (known: " + names + ")");
        }
        ParamSet p;
        try {
            p = identities::parse_params(params);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--params: ") + e.what());
        }
        for (const auto& k : it->second.params) {
            if (!p.count(k)) throw UsageError(target + " needs parameter '" + k + "'");
        }
        for (const auto& [k, v] : p) {
            const auto& need = it->second.params;
            if (std::find(need.begin(), need.end(), k) == need.end()) {
                throw UsageError(target + " has no parameter '" + k + "'");
            }
        }
        const auto q = analytic::quadrature(it->second.make(p), c.tol.value_or(1e-13));
        ok = q.converged;
        j["target"] = target;
        j["integrand"] = it->second.description;
        j["params"] = identities::format_params(p);
        j["value"] = q.value;
        j["error_estimate"] = q.error_estimate;
        j["evaluations"] = q.evaluations;
        j["converged"] = q.converged;
    } else if (what == "series") {
        const IdentityRecord& rec = lookup(target);
        if (rec.is_exact()) throw UsageError(target + " is an exact identity, not a series");
        const auto pts = points_for(rec, params);
        if (pts.size() != 1) throw UsageError(target + " needs --params (one grid point)");
        transform::SeriesOptions so;
        so.accel = c.accel;
        so.max_terms = c.max_terms;
        so.tol = c.tol.value_or(0.1 * rec.tolerance(pts.front()));
        const auto ev = rec.series(pts.front(), so);
        ok = ev.lhs.converged;
        j["target"] = target;
        j["params"] = identities::format_params(pts.front());
        j["value"] = ev.lhs.value;
        j["error_estimate"] = ev.lhs.error_estimate;
        j["terms_used"] = ev.lhs.terms_used;
        j["method"] = ev.lhs.method;
        j["converged"] = ev.lhs.converged;
        j["heuristic_tail"] = ev.lhs.heuristic_tail;
        j["closed_form"] = ev.rhs;
    } else {
        throw UsageError("eval expects 'series' or 'integral', got '" + what + "'");
    }
    if (c.format == Format::json) {
        out << j.dump(2) << '\n';
    } else {
        for (const auto& [k, v] : j.items()) {
            out << k << ": ";
            if (v.is_number_float()) {
                out << format_double(v.get<double>());
            } else if (v.is_string()) {
                out << v.get<std::string>();
            } else {
                out << v.dump();
            }
            out << '\n';
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cauchy-number series and identity verifier", "cauchysum"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_text, tol_text, accel_text, config_path;
    long max_terms = 0;
    unsigned jobs = 0;
    auto* o_format = app.add_option("--format", format_text, "json, csv, markdown or plain (default plain)");
    auto* o_tol = app.add_option("--tol", tol_text, "tolerance override for every identity");
    auto* o_max = app.add_option("--max-terms", max_terms, "raw-summation term cap");
    auto* o_accel = app.add_option("--accel", accel_text, "auto, none, euler, wynn-epsilon or wynn-rho");
    auto* o_jobs = app.add_option("--jobs", jobs, "worker threads for run-all (0: all cores)");
    app.add_option("--config", config_path, "key=value configuration file, overridden by flags");

    auto* list = app.add_subcommand("list", "list registry identities");
    std::string list_kind;
    list->add_option("--kind", list_kind, "restrict to one kind");

    auto* verify = app.add_subcommand("verify", "verify one identity");
    std::string verify_id, verify_params;
    verify->add_option("id", verify_id, "identity id")->required();
    verify->add_option("--params", verify_params, "grid point, e.g. n=3,z=1/2 (default: whole grid)");

    auto* run_all = app.add_subcommand("run-all", "verify the whole registry");
    std::string filter;
    std::vector<std::string> overrides;
    bool no_timing = false;
    auto* o_filter = run_all->add_option("--filter", filter, "kind name, 'series', or comma-separated id globs");
    run_all->add_option("--tol-override", overrides, "GLOB=TOL per-id tolerance")->take_all();
    run_all->add_flag("--no-timing", no_timing, "report elapsed_ms as 0 for byte-identical output");

    auto* table = app.add_subcommand("table", "print a table of exact special numbers");
    std::string family;
    TableBounds bounds;
    long tn = 0, tr = 0, tm = 0;
    table->add_option("family", family, "one of: cauchy, stirling1, rstirling1, rstirling2, harmonic, skew-harmonic, "
                                        "hyperharmonic, stirling2neg, bell-at-harmonic")
        ->required();
    auto* o_n = table->add_option("--n", tn, "upper index");
    auto* o_r = table->add_option("--r", tr, "shift or order r");
    auto* o_m = table->add_option("--m", tm, "order m");

    auto* eval = app.add_subcommand("eval", "evaluate a registered series or integrand");
    std::string eval_kind, eval_target, eval_params;
    eval->add_option("kind", eval_kind, "series or integral")->required();
    eval->add_option("target", eval_target, "identity id or integrand name")->required();
    eval->add_option("--params", eval_params, "parameters, e.g. r=2");

    std::vector<const char*> argv{"cauchysum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        CliConfig c;
        if (!config_path.empty()) load_config_file(config_path, c);
        if (o_format->count()) c.format = parse_format_or_throw(format_text);
        if (o_tol->count()) c.tol = parse_positive("--tol", tol_text);
        if (o_max->count()) {
            if (max_terms <= 0) throw UsageError("--max-terms must be positive");
            c.max_terms = max_terms;
        }
        if (o_accel->count()) c.accel = parse_accel(accel_text);
        if (o_jobs->count()) c.jobs = jobs;
        if (o_filter->count()) c.filter = filter;
        if (no_timing) c.timing = false;
        for (const auto& o : overrides) {
            const auto eq = o.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError("--tol-override expects GLOB=TOL");
            c.tol_overrides.emplace_back(o.substr(0, eq), parse_positive("--tol-override", o.substr(eq + 1)));
        }
        if (o_n->count()) bounds.n = tn;
        if (o_r->count()) bounds.r = tr;
        if (o_m->count()) bounds.m = tm;

        if (*list) return cmd_list(c, list_kind, out);
        if (*verify) return cmd_verify(c, verify_id, verify_params, out);
        if (*run_all) return cmd_run_all(c, out, err);
        if (*table) return cmd_table(c, family, bounds, out);
        if (*eval) return cmd_eval(c, eval_kind, eval_target, eval_params, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace cauchysum::cli
