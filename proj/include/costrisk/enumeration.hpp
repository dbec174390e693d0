#pragma once

#include <map>
#include <string>
#include <vector>

#include "costrisk/risk_register.hpp"

namespace costrisk {

// Exact total-cost distribution of a register with fixed impacts only,
// computed by enumerating all 2^n occurrence patterns. Usable for registers
// of up to 20 aggregable risks; intended as an oracle for simulate().
struct ExactDistribution {
    // outcome total -> probability mass; keys ascending, masses sum to 1.
    std::map<double, double> mass;
    double mean = 0.0;
    std::vector<std::string> excluded_catastrophic;

    // Smallest outcome whose cumulative probability reaches p (p in (0,1]).
    double quantile(double p) const;
};

ExactDistribution enumerate_register(const RiskRegister& reg);

}  // namespace costrisk
