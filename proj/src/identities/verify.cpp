#include "cauchysum/identities/verify.hpp"

#include "cauchysum/exact/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

namespace cauchysum::identities {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::flagged: return "FLAGGED";
        case Status::not_converged: return "NOT_CONVERGED";
        case Status::error: return "ERROR";
    }
    return "ERROR";
}

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport verify_exact(const IdentityRecord& rec, VerificationReport rep) {
    const BigRational lhs = rec.exact_lhs(rep.params);
    const BigRational rhs = rec.exact_rhs(rep.params);
    rep.lhs_text = lhs.to_string();
    rep.rhs_text = rhs.to_string();
    rep.lhs = lhs.to_double();
    rep.rhs = rhs.to_double();
    const BigRational diff = abs(lhs - rhs);
    const BigRational rel = rhs.is_zero() ? diff : diff / abs(rhs);
    rep.abs_err_text = diff.to_string();
    rep.rel_err_text = rel.to_string();
    rep.abs_err = diff.to_double();
    rep.rel_err = rel.to_double();
    rep.tol = 0.0;
    rep.method = "exact";
    rep.status = diff.is_zero() ? Status::pass : Status::fail;
    return rep;
}

VerificationReport verify_series(const IdentityRecord& rec, VerificationReport rep, const VerifyOptions& o) {
    const double base_tol = o.tol.value_or(rec.tolerance(rep.params));
    // The tolerance is relative for large right sides; the closed form is
    // computed first so that the engine can be told its target.
    transform::SeriesOptions so;
    so.accel = o.accel;
    so.max_terms = o.max_terms;
    // A preliminary pass fixes the scale; rhs does not depend on options.
    so.tol = 0.1 * base_tol;
    SeriesEvaluation ev = rec.series(rep.params, so);
    const double tol_eff = base_tol * std::max(1.0, std::abs(ev.rhs));
    if (tol_eff > base_tol) {
        so.tol = 0.1 * tol_eff;
        ev = rec.series(rep.params, so);
    }
    rep.lhs = ev.lhs.value;
    rep.rhs = ev.rhs;
    rep.abs_err = std::abs(ev.lhs.value - ev.rhs);
    rep.rel_err = ev.rhs == 0.0 ? rep.abs_err : rep.abs_err / std::abs(ev.rhs);
    rep.tol = tol_eff;
    rep.terms_used = ev.lhs.terms_used;
    rep.method = ev.lhs.method;
    rep.error_estimate = ev.lhs.error_estimate;
    rep.checks = std::move(ev.checks);
    // A caller-supplied tolerance may relax, never tighten, the side checks.
    if (o.tol) {
        for (auto& c : rep.checks) c.tol = std::max(c.tol, *o.tol * std::max(1.0, std::abs(c.target)));
    }
    rep.note = std::move(ev.note);
    if (ev.lhs.heuristic_tail) {
        rep.note += rep.note.empty() ? "" : "; ";
        rep.note += "heuristic tail estimate";
    }
    const bool finite = std::isfinite(rep.lhs) && std::isfinite(rep.rhs);
    const bool checks_ok =
        std::all_of(rep.checks.begin(), rep.checks.end(), [](const ExtraCheck& c) { return c.passed(); });
    if (!ev.lhs.converged) {
        rep.status = Status::not_converged;
    } else if (finite && rep.abs_err <= tol_eff && checks_ok) {
        rep.status = Status::pass;
    } else {
        rep.status = Status::fail;
    }
    return rep;
}

}  // namespace

VerificationReport verify(const IdentityRecord& record, const ParamSet& params, const VerifyOptions& options) {
    VerificationReport rep;
    rep.id = record.id;
    rep.kind = record.kind;
    rep.params = params;
    rep.paper_ref = record.paper_ref;
    const long cap = exact::limits().max_index;
    for (const auto& [name, value] : params) {
        if (value.is_integer() && abs(value) > BigRational(cap)) {
            throw exact::IndexBoundError(record.id + ": parameter " + name + "=" + value.to_string() + " exceeds the kernel bound " +
                                         std::to_string(cap));
        }
    }
    const auto start = Clock::now();
    try {
        rep = record.is_exact() ? verify_exact(record, rep) : verify_series(record, rep, options);
    } catch (const exact::IndexBoundError&) {
        throw;
    } catch (const std::exception& e) {
        rep.status = Status::error;
        rep.note = e.what();
    }
    if (record.kind == IdentityKind::paper_claimed && rep.status != Status::pass) rep.status = Status::flagged;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rep;
}

bool glob_match(std::string_view pattern, std::string_view text) {
    std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

bool filter_match(const IdentityRecord& record, std::string_view filter) {
    if (filter.empty()) return true;
    if (filter == "series") return !record.is_exact();
    if (const auto kind = parse_kind(filter)) return record.kind == *kind;
    std::string f(filter);
    std::stringstream ss(f);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty() && glob_match(item, record.id)) return true;
    }
    return false;
}

std::vector<VerificationReport> run_all(const RunConfig& config) {
    struct Task {
        const IdentityRecord* record;
        const ParamSet* params;
    };
    std::vector<Task> tasks;
    for (const auto& rec : registry()) {
        if (!filter_match(rec, config.filter)) continue;
        if (rec.grid.empty()) {
            static const ParamSet empty;
            tasks.push_back({&rec, &empty});
        }
        for (const auto& p : rec.grid) tasks.push_back({&rec, &p});
    }

    std::vector<VerificationReport> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            VerifyOptions vo;
            vo.accel = config.accel;
            vo.max_terms = config.max_terms;
            vo.tol = config.tol;
            for (const auto& [glob, tol] : config.tol_overrides) {
                if (glob_match(glob, t.record->id)) {
                    vo.tol = tol;
                    break;
                }
            }
            try {
                out[i] = verify(*t.record, *t.params, vo);
            } catch (const std::exception& e) {
                VerificationReport rep;
                rep.id = t.record->id;
                rep.kind = t.record->kind;
                rep.params = *t.params;
                rep.paper_ref = t.record->paper_ref;
                rep.status = Status::error;
                rep.note = e.what();
                out[i] = std::move(rep);
            }
            if (!config.timing) out[i].elapsed_ms = 0.0;
        }
    };
    unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace cauchysum::identities
