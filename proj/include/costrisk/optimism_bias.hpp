#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "costrisk/types.hpp"

namespace costrisk {

enum class CostKind { capex, opex };
enum class UpliftUnit { percent_of_present_value, percent_per_annum };
enum class CostMetric { capex, works_duration };
enum class EvidenceQuality { objective, subjective };

std::string_view to_string(CostKind kind);
std::string_view to_string(UpliftUnit unit);
std::string_view to_string(CostMetric metric);
std::string_view to_string(EvidenceQuality evidence);
CostKind parse_cost_kind(std::string_view token);
CostMetric parse_cost_metric(std::string_view token);
EvidenceQuality parse_evidence_quality(std::string_view token);

// One row of the staged risk-treatment table: the uplift to apply at a given
// project development level, and whether a quantitative risk analysis is
// expected alongside it.
struct StageUplift {
    CostKind cost_kind = CostKind::capex;
    int stage = 1;  // project development level, 1..5
    double uplift = 0.0;
    UpliftUnit unit = UpliftUnit::percent_of_present_value;
    bool qra_required = false;
};

// The published staged uplift table: exactly 10 rows, (capex|opex) x stages
// 1..5. CAPEX uplifts are strictly decreasing across stages.
const std::array<StageUplift, 10>& stage_uplift_table();

// Exact table row; throws std::invalid_argument for stages outside 1..5.
const StageUplift& lookup_stage_uplift(CostKind kind, int stage);

// Published upper/lower uplift bounds per project type and metric.
struct UpliftBounds {
    ProjectCategory project_type = ProjectCategory::other;
    CostMetric metric = CostMetric::capex;
    double lower = 0.0;
    double upper = 0.0;
};

std::span<const UpliftBounds> bounds_table();
const UpliftBounds& lookup_bounds(ProjectCategory type, CostMetric metric);

// One contributing risk area and its share of the total uplift.
struct Factor {
    std::string name;
    double share = 0.0;
};

// Ordered breakdown of an uplift upper bound into contributing risk areas.
// Shares must sum to 1 within 1e-9.
class FactorBreakdown {
public:
    explicit FactorBreakdown(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool contains(const std::string& name) const;

    // The published 13-factor CAPEX breakdown for non-standard civil
    // engineering projects.
    static const FactorBreakdown& default_capex_breakdown();

private:
    std::vector<Factor> factors_;
};

struct FactorMitigation {
    double managed = 0.0;  // degree the factor's risks are managed, in [0,1]
    EvidenceQuality evidence = EvidenceQuality::subjective;
};

// Per-factor mitigation claims. Every factor of the breakdown being adjusted
// must have exactly one entry.
class MitigationAssessment {
public:
    MitigationAssessment() = default;

    void set(const std::string& factor, double managed, EvidenceQuality evidence);
    const FactorMitigation* find(const std::string& factor) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, FactorMitigation>& entries() const { return entries_; }

    // Convenience: the same (managed, evidence) claim for every factor of a
    // breakdown.
    static MitigationAssessment uniform(const FactorBreakdown& breakdown, double managed,
                                        EvidenceQuality evidence);

private:
    std::map<std::string, FactorMitigation> entries_;
};

// Reduce the upper bound by the share-weighted degree of mitigation, never
// dropping below the residual lower bound:
//   uplift = max(lower, upper * (1 - sum_i share_i * managed_i)).
// With require_objective, factors backed only by subjective evidence
// contribute no reduction.
double mitigated_uplift(const UpliftBounds& bounds, const FactorBreakdown& breakdown,
                        const MitigationAssessment& assessment, bool require_objective);

// base_cost * (1 + uplift); both inputs must be nonnegative.
double green_book_adjust(double base_cost, double uplift);

struct SensitivityScenarios {
    double low = 0.0;
    double central = 0.0;
    double high = 0.0;
};

// Adjusted costs at the lower bound, the central case and the upper bound.
// Requires lower <= central <= upper.
SensitivityScenarios sensitivity_scenarios(double base_cost, const UpliftBounds& bounds,
                                           double central);

// Tabulated uplifts by project type, metric and confidence level. Lookups at
// anchor confidences return the stored value exactly; between anchors the
// value is linearly interpolated; outside the anchor range it is an error.
class ConfidenceSchedule {
public:
    struct Anchor {
        double confidence = 0.0;
        double uplift = 0.0;
    };

    void add(ProjectCategory type, CostMetric metric, double confidence, double uplift);
    bool has(ProjectCategory type, CostMetric metric) const;
    double lookup(ProjectCategory type, CostMetric metric, double confidence) const;
    std::vector<Anchor> anchors(ProjectCategory type, CostMetric metric) const;

    // The schedule shipped with the toolkit (rail CAPEX anchors at P50, P80,
    // P90, P95). data/ob_confidence_schedule.csv mirrors this table.
    static const ConfidenceSchedule& built_in();

private:
    std::map<std::pair<ProjectCategory, CostMetric>, std::vector<Anchor>> entries_;
};

// Shorthand for ConfidenceSchedule::built_in().lookup(type, capex, confidence).
double lookup_confidence_uplift(ProjectCategory type, double confidence);

}  // namespace costrisk
