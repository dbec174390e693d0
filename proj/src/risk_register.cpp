#include "costrisk/risk_register.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace costrisk {

Impact Impact::fixed(double value) {
    Impact impact;
    impact.kind = ImpactKind::fixed;
    impact.value = value;
    return impact;
}

Impact Impact::three_point(double low, double mode, double high) {
    if (!(low <= mode && mode <= high)) {
        throw std::invalid_argument("three_point impact requires low <= mode <= high");
    }
    Impact impact;
    impact.kind = ImpactKind::three_point;
    impact.low = low;
    impact.mode = mode;
    impact.high = high;
    return impact;
}

double Impact::mean() const {
    if (kind == ImpactKind::fixed) return value;
    return (low + mode + high) / 3.0;
}

double Impact::at_quantile(double q) const {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("probability out of range");
    if (kind == ImpactKind::fixed) return value;
    // Inverse CDF of the triangular(low, mode, high) distribution.
    const double range = high - low;
    if (range == 0.0) return low;
    const double split = (mode - low) / range;
    if (q <= split) return low + std::sqrt(q * range * (mode - low));
    return high - std::sqrt((1.0 - q) * range * (high - mode));
}

RiskRegister::RiskRegister(std::vector<Risk> risks) : risks_(std::move(risks)) {
    std::set<std::string> ids;
    for (const auto& risk : risks_) {
        if (risk.id.empty()) throw std::invalid_argument("risk id must not be empty");
        if (!ids.insert(risk.id).second) {
            throw std::invalid_argument("duplicate risk id: " + risk.id);
        }
        if (!(risk.probability >= 0.0 && risk.probability <= 1.0)) {
            throw std::invalid_argument("probability out of range for risk: " + risk.id);
        }
        const bool negative = risk.impact.kind == ImpactKind::fixed
                                  ? risk.impact.value < 0.0
                                  : risk.impact.low < 0.0;
        if (negative && !risk.opportunity) {
            throw std::invalid_argument("negative impact requires opportunity flag on risk: " +
                                        risk.id);
        }
    }
}

const Risk* RiskRegister::find(const std::string& id) const {
    for (const auto& risk : risks_) {
        if (risk.id == id) return &risk;
    }
    return nullptr;
}

std::vector<const Risk*> RiskRegister::aggregable() const {
    std::vector<const Risk*> out;
    for (const auto& risk : risks_) {
        if (!risk.catastrophic) out.push_back(&risk);
    }
    return out;
}

std::vector<const Risk*> RiskRegister::catastrophic() const {
    std::vector<const Risk*> out;
    for (const auto& risk : risks_) {
        if (risk.catastrophic) out.push_back(&risk);
    }
    return out;
}

double RiskRegister::expected_value() const {
    if (risks_.empty()) throw std::invalid_argument("empty risk register");
    double sum = 0.0;
    for (const Risk* risk : aggregable()) sum += risk->probability * risk->impact.mean();
    return sum;
}

}  // namespace costrisk
