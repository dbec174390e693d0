#include "costrisk/enumeration.hpp"

#include <cstdint>
#include <stdexcept>

namespace costrisk {

double ExactDistribution::quantile(double p) const {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("probability out of range");
    if (mass.empty()) throw std::invalid_argument("empty distribution");
    // 1e-12 slack absorbs rounding in the cumulative sum; masses are products
    // of up to 20 doubles.
    double cumulative = 0.0;
    for (const auto& [outcome, probability] : mass) {
        cumulative += probability;
        if (cumulative + 1e-12 >= p) return outcome;
    }
    return mass.rbegin()->first;
}

ExactDistribution enumerate_register(const RiskRegister& reg) {
    if (reg.empty()) throw std::invalid_argument("empty risk register");
    const auto risks = reg.aggregable();
    if (risks.size() > 20) {
        throw std::invalid_argument("enumeration limited to 20 risks");
    }
    for (const Risk* risk : risks) {
        if (risk->impact.kind != ImpactKind::fixed) {
            throw std::invalid_argument("enumeration requires fixed impacts (risk " + risk->id +
                                        ")");
        }
    }

    ExactDistribution dist;
    for (const Risk* risk : reg.catastrophic()) dist.excluded_catastrophic.push_back(risk->id);

    const std::size_t n = risks.size();
    const std::uint64_t patterns = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        double probability = 1.0;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                probability *= risks[i]->probability;
                total += risks[i]->impact.value;
            } else {
                probability *= 1.0 - risks[i]->probability;
            }
        }
        if (probability > 0.0) dist.mass[total] += probability;
    }

    for (const auto& [outcome, probability] : dist.mass) dist.mean += outcome * probability;
    return dist;
}

}  // namespace costrisk
