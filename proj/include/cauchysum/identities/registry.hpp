#ifndef CAUCHYSUM_IDENTITIES_REGISTRY_HPP
#define CAUCHYSUM_IDENTITIES_REGISTRY_HPP

#include "cauchysum/exact/big_rational.hpp"
#include "cauchysum/transform/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cauchysum::identities {

enum class IdentityKind { exact_finite, series_closed_form, series_vs_quadrature, paper_claimed };

std::string to_string(IdentityKind k);
std::optional<IdentityKind> parse_kind(std::string_view text);

using ParamSet = std::map<std::string, BigRational>;

std::string format_params(const ParamSet& p);
/// Parses "n=3,z=1/2".
ParamSet parse_params(std::string_view text);

// A side condition checked next to the main LHS/RHS comparison, e.g. the
// quadrature value against a reference decimal constant.
struct ExtraCheck {
    std::string label;
    double value = 0.0;
    double target = 0.0;
    double tol = 0.0;
    bool passed() const;
};

struct SeriesEvaluation {
    transform::SeriesResult lhs;
    double rhs = 0.0;
    std::vector<ExtraCheck> checks;
    std::string note;
};

using ExactSide = std::function<BigRational(const ParamSet&)>;
using SeriesEvaluator = std::function<SeriesEvaluation(const ParamSet&, const transform::SeriesOptions&)>;

struct IdentityRecord {
    std::string id;
    IdentityKind kind = IdentityKind::exact_finite;
    std::string paper_ref;
    std::string statement;
    std::vector<ParamSet> grid;
    double default_tol = 0.0;
    /// Per-point tolerance; falls back to default_tol when empty.
    std::function<double(const ParamSet&)> tol_for;
    // Exactly one evaluation path is set.
    ExactSide exact_lhs;
    ExactSide exact_rhs;
    SeriesEvaluator series;

    bool is_exact() const { return static_cast<bool>(exact_lhs); }
    double tolerance(const ParamSet& p) const { return tol_for ? tol_for(p) : default_tol; }
};

/// The full catalog, sorted by id. Built once; records are immutable.
const std::vector<IdentityRecord>& registry();

/// nullptr when the id is unknown.
const IdentityRecord* find_identity(std::string_view id);

}  // namespace cauchysum::identities

#endif
