#include "costrisk/optimism_bias.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace costrisk {

std::string_view to_string(CostKind kind) {
    switch (kind) {
        case CostKind::capex: return "capex";
        case CostKind::opex: return "opex";
    }
    throw std::invalid_argument("unknown cost kind");
}

std::string_view to_string(UpliftUnit unit) {
    switch (unit) {
        case UpliftUnit::percent_of_present_value: return "percent_of_present_value";
        case UpliftUnit::percent_per_annum: return "percent_per_annum";
    }
    throw std::invalid_argument("unknown uplift unit");
}

std::string_view to_string(CostMetric metric) {
    switch (metric) {
        case CostMetric::capex: return "capex";
        case CostMetric::works_duration: return "works_duration";
    }
    throw std::invalid_argument("unknown cost metric");
}

std::string_view to_string(EvidenceQuality evidence) {
    switch (evidence) {
        case EvidenceQuality::objective: return "objective";
        case EvidenceQuality::subjective: return "subjective";
    }
    throw std::invalid_argument("unknown evidence quality");
}

CostKind parse_cost_kind(std::string_view token) {
    if (token == "capex") return CostKind::capex;
    if (token == "opex") return CostKind::opex;
    throw std::invalid_argument("unknown cost kind: " + std::string(token));
}

CostMetric parse_cost_metric(std::string_view token) {
    if (token == "capex") return CostMetric::capex;
    if (token == "works_duration") return CostMetric::works_duration;
    throw std::invalid_argument("unknown cost metric: " + std::string(token));
}

EvidenceQuality parse_evidence_quality(std::string_view token) {
    if (token == "objective") return EvidenceQuality::objective;
    if (token == "subjective") return EvidenceQuality::subjective;
    throw std::invalid_argument("unknown evidence quality: " + std::string(token));
}

const std::array<StageUplift, 10>& stage_uplift_table() {
    static const std::array<StageUplift, 10> table = {{
        {CostKind::capex, 1, 0.66, UpliftUnit::percent_of_present_value, false},
        {CostKind::capex, 2, 0.50, UpliftUnit::percent_of_present_value, false},
        {CostKind::capex, 3, 0.40, UpliftUnit::percent_of_present_value, false},
        {CostKind::capex, 4, 0.18, UpliftUnit::percent_of_present_value, true},
        {CostKind::capex, 5, 0.06, UpliftUnit::percent_of_present_value, true},
        {CostKind::opex, 1, 0.41, UpliftUnit::percent_of_present_value, false},
        {CostKind::opex, 2, 0.016, UpliftUnit::percent_per_annum, false},
        {CostKind::opex, 3, 0.01, UpliftUnit::percent_per_annum, false},
        {CostKind::opex, 4, 0.01, UpliftUnit::percent_per_annum, true},
        {CostKind::opex, 5, 0.01, UpliftUnit::percent_per_annum, true},
    }};
    return table;
}

const StageUplift& lookup_stage_uplift(CostKind kind, int stage) {
    if (stage < 1 || stage > 5) throw std::invalid_argument("stage must be in 1..5");
    const std::size_t base = kind == CostKind::capex ? 0 : 5;
    return stage_uplift_table()[base + static_cast<std::size_t>(stage - 1)];
}

std::span<const UpliftBounds> bounds_table() {
    static const UpliftBounds table[] = {
        {ProjectCategory::nonstandard_civil, CostMetric::capex, 0.06, 0.66},
        {ProjectCategory::nonstandard_civil, CostMetric::works_duration, 0.03, 0.25},
        {ProjectCategory::standard_civil, CostMetric::capex, 0.03, 0.44},
        {ProjectCategory::rail, CostMetric::capex, 0.06, 0.66},
    };
    return table;
}

const UpliftBounds& lookup_bounds(ProjectCategory type, CostMetric metric) {
    for (const auto& row : bounds_table()) {
        if (row.project_type == type && row.metric == metric) return row;
    }
    throw std::invalid_argument("no uplift bounds for " + std::string(to_string(type)) + "/" +
                                std::string(to_string(metric)));
}

FactorBreakdown::FactorBreakdown(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("factor breakdown must not be empty");
    double sum = 0.0;
    for (const auto& f : factors_) {
        if (f.name.empty()) throw std::invalid_argument("factor name must not be empty");
        if (!(f.share >= 0.0 && f.share <= 1.0)) {
            throw std::invalid_argument("factor share out of [0,1]: " + f.name);
        }
        for (const auto& other : factors_) {
            if (&other != &f && other.name == f.name) {
                throw std::invalid_argument("duplicate factor: " + f.name);
            }
        }
        sum += f.share;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("factor shares must sum to 1");
    }
}

bool FactorBreakdown::contains(const std::string& name) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.name == name; });
}

const FactorBreakdown& FactorBreakdown::default_capex_breakdown() {
    static const FactorBreakdown breakdown{{
        {"procurement", 0.02},
        {"design complexity", 0.08},
        {"innovation", 0.09},
        {"environmental impact", 0.05},
        {"inadequacy of the business case", 0.35},
        {"funding availability", 0.05},
        {"project management team", 0.02},
        {"poor project intelligence", 0.09},
        {"site characteristics", 0.05},
        {"economic influences", 0.03},
        {"legislation and regulation", 0.08},
        {"technology", 0.08},
        {"other external influences", 0.01},
    }};
    return breakdown;
}

void MitigationAssessment::set(const std::string& factor, double managed,
                               EvidenceQuality evidence) {
    if (!(managed >= 0.0 && managed <= 1.0)) {
        throw std::invalid_argument("managed degree out of [0,1] for factor: " + factor);
    }
    entries_[factor] = FactorMitigation{managed, evidence};
}

const FactorMitigation* MitigationAssessment::find(const std::string& factor) const {
    const auto it = entries_.find(factor);
    return it == entries_.end() ? nullptr : &it->second;
}

MitigationAssessment MitigationAssessment::uniform(const FactorBreakdown& breakdown,
                                                   double managed, EvidenceQuality evidence) {
    MitigationAssessment assessment;
    for (const auto& f : breakdown.factors()) assessment.set(f.name, managed, evidence);
    return assessment;
}

double mitigated_uplift(const UpliftBounds& bounds, const FactorBreakdown& breakdown,
                        const MitigationAssessment& assessment, bool require_objective) {
    double reduction = 0.0;
    for (const auto& f : breakdown.factors()) {
        const FactorMitigation* claim = assessment.find(f.name);
        if (claim == nullptr) {
            throw std::invalid_argument("mitigation assessment missing factor: " + f.name);
        }
        double managed = claim->managed;
        if (require_objective && claim->evidence == EvidenceQuality::subjective) managed = 0.0;
        reduction += f.share * managed;
    }
    return std::max(bounds.lower, bounds.upper * (1.0 - reduction));
}

double green_book_adjust(double base_cost, double uplift) {
    if (base_cost < 0.0) throw std::invalid_argument("base cost must be nonnegative");
    if (uplift < 0.0) throw std::invalid_argument("uplift must be nonnegative");
    return base_cost * (1.0 + uplift);
}

SensitivityScenarios sensitivity_scenarios(double base_cost, const UpliftBounds& bounds,
                                           double central) {
    if (central < bounds.lower || central > bounds.upper) {
        throw std::invalid_argument("central uplift outside bounds");
    }
    return {green_book_adjust(base_cost, bounds.lower), green_book_adjust(base_cost, central),
            green_book_adjust(base_cost, bounds.upper)};
}

void ConfidenceSchedule::add(ProjectCategory type, CostMetric metric, double confidence,
                             double uplift) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("anchor confidence must be in (0,1)");
    }
    auto& anchors = entries_[{type, metric}];
    for (const auto& a : anchors) {
        if (a.confidence == confidence) {
            throw std::invalid_argument("duplicate anchor confidence");
        }
    }
    anchors.push_back({confidence, uplift});
    std::sort(anchors.begin(), anchors.end(),
              [](const Anchor& a, const Anchor& b) { return a.confidence < b.confidence; });
}

bool ConfidenceSchedule::has(ProjectCategory type, CostMetric metric) const {
    return entries_.count({type, metric}) != 0;
}

double ConfidenceSchedule::lookup(ProjectCategory type, CostMetric metric,
                                  double confidence) const {
    const auto it = entries_.find({type, metric});
    if (it == entries_.end()) {
        throw std::invalid_argument("no confidence schedule for " + std::string(to_string(type)) +
                                    "/" + std::string(to_string(metric)));
    }
    const auto& anchors = it->second;
    if (confidence < anchors.front().confidence || confidence > anchors.back().confidence) {
        throw std::invalid_argument("confidence outside schedule anchor range");
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (confidence == anchors[i].confidence) return anchors[i].uplift;
        if (i + 1 < anchors.size() && confidence < anchors[i + 1].confidence) {
            const auto& lo = anchors[i];
            const auto& hi = anchors[i + 1];
            const double t = (confidence - lo.confidence) / (hi.confidence - lo.confidence);
            return lo.uplift + t * (hi.uplift - lo.uplift);
        }
    }
    return anchors.back().uplift;  // confidence == last anchor, handled above in practice
}

std::vector<ConfidenceSchedule::Anchor> ConfidenceSchedule::anchors(ProjectCategory type,
                                                                    CostMetric metric) const {
    const auto it = entries_.find({type, metric});
    if (it == entries_.end()) return {};
    return it->second;
}

const ConfidenceSchedule& ConfidenceSchedule::built_in() {
    static const ConfidenceSchedule schedule = [] {
        ConfidenceSchedule s;
        s.add(ProjectCategory::rail, CostMetric::capex, 0.50, 0.40);
        s.add(ProjectCategory::rail, CostMetric::capex, 0.80, 0.57);
        s.add(ProjectCategory::rail, CostMetric::capex, 0.90, 0.68);
        s.add(ProjectCategory::rail, CostMetric::capex, 0.95, 0.80);
        return s;
    }();
    return schedule;
}

double lookup_confidence_uplift(ProjectCategory type, double confidence) {
    return ConfidenceSchedule::built_in().lookup(type, CostMetric::capex, confidence);
}

}  // namespace costrisk
