#ifndef CAUCHYSUM_IDENTITIES_VERIFY_HPP
#define CAUCHYSUM_IDENTITIES_VERIFY_HPP

#include "cauchysum/identities/registry.hpp"
#include "cauchysum/transform/acceleration.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cauchysum::identities {

enum class Status { pass, fail, flagged, not_converged, error };

std::string to_string(Status s);

struct VerificationReport {
    std::string id;
    IdentityKind kind = IdentityKind::exact_finite;
    ParamSet params;
    // Exact "p/q" text for exact-finite identities; empty otherwise.
    std::string lhs_text;
    std::string rhs_text;
    std::string abs_err_text;
    std::string rel_err_text;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    // Effective tolerance: tol * max(1, |rhs|). Zero for exact identities.
    double tol = 0.0;
    Status status = Status::error;
    long terms_used = 0;
    double elapsed_ms = 0.0;
    std::string paper_ref;
    std::string method;
    double error_estimate = 0.0;
    std::vector<ExtraCheck> checks;
    std::string note;
};

struct VerifyOptions {
    std::optional<double> tol;
    transform::AccelMethod accel = transform::AccelMethod::automatic;
    long max_terms = 200000;
};

/// Evaluates one grid point. Integer parameters above the kernel index bound
/// and kernel index-bound errors raise exact::IndexBoundError; every other
/// failure inside the evaluation is reported with Status::error.
VerificationReport verify(const IdentityRecord& record, const ParamSet& params, const VerifyOptions& options = {});

struct RunConfig {
    // Empty: everything. Otherwise a kind name, "series", or comma-separated
    // id globs with '*' and '?'.
    std::string filter;
    std::optional<double> tol;
    // Per-id tolerance overrides, first matching glob wins.
    std::vector<std::pair<std::string, double>> tol_overrides;
    transform::AccelMethod accel = transform::AccelMethod::automatic;
    long max_terms = 200000;
    unsigned jobs = 0;  // 0: hardware concurrency
    bool timing = true;
};

bool glob_match(std::string_view pattern, std::string_view text);
bool filter_match(const IdentityRecord& record, std::string_view filter);

/// Every grid point of every selected record, sorted by id then grid order.
std::vector<VerificationReport> run_all(const RunConfig& config);

}  // namespace cauchysum::identities

#endif
