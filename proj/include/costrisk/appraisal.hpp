#pragma once

#include <map>
#include <string>

#include "costrisk/reference_class.hpp"
#include "costrisk/simulation.hpp"

namespace costrisk {

enum class ObBasis { base_only, risk_adjusted };
enum class Verdict { pass, flag, fail };

std::string_view to_string(ObBasis basis);
std::string_view to_string(Verdict verdict);
ObBasis parse_ob_basis(std::string_view token);

// Three-part estimate: base cost, mean-risk adjustment, optimism bias
// adjustment. total is the sum of the three components.
struct CostEstimate {
    double base_cost = 0.0;
    double risk_adjustment = 0.0;
    double ob_adjustment = 0.0;
    double total = 0.0;
    ObBasis ob_basis = ObBasis::base_only;
    std::string price_basis;
};

struct AppraisalInput {
    double funding_envelope = 0.0;
    double pv_costs = 0.0;
    double pv_benefits = 0.0;
};

// Result of one audit rule: inputs echoed, every intermediate reported, and a
// verdict. Each computed value is reproducible from the echoed inputs.
struct AuditFinding {
    std::string rule_id;
    std::map<std::string, double> inputs;
    std::map<std::string, double> computed;
    Verdict verdict = Verdict::pass;
    std::string message;
};

// Assemble an estimate. The uplift applies to the base cost alone
// (base_only; early development) or to base plus mean risk (risk_adjusted;
// later development). All inputs must be nonnegative.
CostEstimate compose_estimate(double base, double mean_risk, double ob_uplift, ObBasis ob_basis);

// Audits a P-level risk provision against the guidance benchmark:
//   base          = total_estimate - p_level_risk
//   risk_adjusted = base + mean_risk
//   benchmark     = mean_risk + rate * risk_adjusted
// verdict fail when p_level_risk < benchmark. Requires
// total_estimate > p_level_risk >= 0 and mean_risk >= 0.
AuditFinding mean_plus_six_check(double total_estimate, double p_level_risk, double mean_risk,
                                 double rate = 0.06);

// pv_benefits / pv_costs. Requires pv_costs > 0.
double bcr(const AppraisalInput& input);

// (funding - estimate) / estimate; negative means a shortfall. Requires
// estimate > 0.
double headroom(double funding, double estimate);

// (actual - estimated) / estimated. Requires estimated > 0.
double overrun(double actual, double estimated);

// Compares the inside-view allowance risk_allowance(result, p, base_cost)
// with the outside-view required_uplift(cls, p); verdict flag when
// inside < threshold * outside.
AuditFinding inside_outside_gap(const SimulationResult& result, double base_cost,
                                const ReferenceClass& cls, double p, double threshold = 0.5);

}  // namespace costrisk
