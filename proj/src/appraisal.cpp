#include "costrisk/appraisal.hpp"

#include <stdexcept>

#include "costrisk/io.hpp"

namespace costrisk {

std::string_view to_string(ObBasis basis) {
    switch (basis) {
        case ObBasis::base_only: return "base_only";
        case ObBasis::risk_adjusted: return "risk_adjusted";
    }
    throw std::invalid_argument("unknown uplift basis");
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass: return "pass";
        case Verdict::flag: return "flag";
        case Verdict::fail: return "fail";
    }
    throw std::invalid_argument("unknown verdict");
}

ObBasis parse_ob_basis(std::string_view token) {
    if (token == "base_only") return ObBasis::base_only;
    if (token == "risk_adjusted") return ObBasis::risk_adjusted;
    throw std::invalid_argument("unknown uplift basis: " + std::string(token));
}

CostEstimate compose_estimate(double base, double mean_risk, double ob_uplift, ObBasis ob_basis) {
    if (base < 0.0 || mean_risk < 0.0 || ob_uplift < 0.0) {
        throw std::invalid_argument("estimate components must be nonnegative");
    }
    CostEstimate estimate;
    estimate.base_cost = base;
    estimate.risk_adjustment = mean_risk;
    estimate.ob_basis = ob_basis;
    estimate.ob_adjustment =
        ob_basis == ObBasis::base_only ? ob_uplift * base : ob_uplift * (base + mean_risk);
    estimate.total = estimate.base_cost + estimate.risk_adjustment + estimate.ob_adjustment;
    return estimate;
}

AuditFinding mean_plus_six_check(double total_estimate, double p_level_risk, double mean_risk,
                                 double rate) {
    if (!(p_level_risk >= 0.0)) throw std::invalid_argument("P-level risk must be nonnegative");
    if (!(total_estimate > p_level_risk)) {
        throw std::invalid_argument("total estimate must exceed the P-level risk provision");
    }
    if (!(mean_risk >= 0.0)) throw std::invalid_argument("mean risk must be nonnegative");
    if (!(rate >= 0.0)) throw std::invalid_argument("rate must be nonnegative");

    const double base = total_estimate - p_level_risk;
    const double risk_adjusted = base + mean_risk;
    const double rate_uplift = rate * risk_adjusted;
    const double benchmark = mean_risk + rate_uplift;

    AuditFinding finding;
    finding.rule_id = "mean_plus_six";
    finding.inputs = {{"total_estimate", total_estimate},
                      {"p_level_risk", p_level_risk},
                      {"mean_risk", mean_risk},
                      {"rate", rate}};
    finding.computed = {{"base", base},
                        {"risk_adjusted", risk_adjusted},
                        {"rate_uplift", rate_uplift},
                        {"benchmark", benchmark}};
    if (p_level_risk < benchmark) {
        finding.verdict = Verdict::fail;
        finding.message = "P-level risk provision " + format_number(p_level_risk) +
                          " is below the benchmark " + format_number(benchmark) +
                          " (mean risk plus " + format_number(rate * 100.0) +
                          "% of the risk-adjusted cost)";
    } else {
        finding.verdict = Verdict::pass;
        finding.message = "P-level risk provision " + format_number(p_level_risk) +
                          " meets the benchmark " + format_number(benchmark);
    }
    return finding;
}

double bcr(const AppraisalInput& input) {
    if (!(input.pv_costs > 0.0)) throw std::invalid_argument("pv_costs must be positive");
    return input.pv_benefits / input.pv_costs;
}

double headroom(double funding, double estimate) {
    if (!(estimate > 0.0)) throw std::invalid_argument("estimate must be positive");
    return (funding - estimate) / estimate;
}

double overrun(double actual, double estimated) {
    if (!(estimated > 0.0)) throw std::invalid_argument("estimate must be positive");
    return (actual - estimated) / estimated;
}

AuditFinding inside_outside_gap(const SimulationResult& result, double base_cost,
                                const ReferenceClass& cls, double p, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
    const double inside = risk_allowance(result, p, base_cost);
    const double outside = cls.required_uplift(p);

    AuditFinding finding;
    finding.rule_id = "inside_outside_gap";
    finding.inputs = {{"base_cost", base_cost}, {"p", p}, {"threshold", threshold}};
    finding.computed = {{"inside_allowance", inside}, {"outside_uplift", outside}};
    if (outside > 0.0) finding.computed["ratio"] = inside / outside;

    if (inside < threshold * outside) {
        finding.verdict = Verdict::flag;
        finding.message = "inside-view allowance " + format_number(inside) +
                          " is below " + format_number(threshold) +
                          " of the outside-view uplift " + format_number(outside);
    } else {
        finding.verdict = Verdict::pass;
        finding.message = "inside-view allowance " + format_number(inside) +
                          " is within range of the outside-view uplift " + format_number(outside);
    }
    return finding;
}

}  // namespace costrisk
