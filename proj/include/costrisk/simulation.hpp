#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "costrisk/risk_register.hpp"

namespace costrisk {

// Pairwise Spearman rank correlation target between two risks, or a common
// rho among every member of a named group.
struct CorrelationSpec {
    struct Pair {
        std::string a;
        std::string b;
        double rho = 0.0;
    };
    struct Group {
        std::string group;
        double rho = 0.0;
    };

    std::vector<Pair> pairs;
    std::vector<Group> groups;

    bool empty() const { return pairs.empty() && groups.empty(); }
};

struct SimulationConfig {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    int workers = 1;  // parallelism only; results are invariant to it
};

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    std::vector<double> totals;  // per-trial totals, sorted ascending
    std::vector<std::string> excluded_catastrophic;  // ids, register order

    // totals quantile via Hazen plotting positions.
    double quantile(double p) const;
};

// Monte Carlo aggregation of a risk register. Each (risk, trial) consumes one
// uniform: the risk occurs when u >= 1 - probability, and the impact is read
// at the conditional position (u - (1 - probability)) / probability, so a
// trial's contribution is nondecreasing in u. Correlations are induced by
// Iman-Conover rank reordering of the per-risk uniform columns; occurrence
// indicators and impact sizes then co-move. Catastrophic risks never enter
// the totals. Results depend only on (register, correlations, trials, seed).
SimulationResult simulate(const RiskRegister& reg, const SimulationConfig& config,
                          const CorrelationSpec& correlations = {});

// Builds the full correlation matrix over aggregable risks from pair and
// group specs, validates entries are in [-1,1] and reference known ids, and
// rejects conflicting duplicates. Identity diagonal; unspecified pairs are 0.
std::vector<std::vector<double>> build_correlation_matrix(const RiskRegister& reg,
                                                          const CorrelationSpec& correlations);

// P-level risk provision as a fraction of base cost:
// quantile(result, p) / base_cost. Requires base_cost > 0.
double risk_allowance(const SimulationResult& result, double p, double base_cost);

// Diagnostic view of the same trials simulate() runs: one column per
// aggregable risk (register order), one entry per trial, unsorted. Summing a
// trial across columns reproduces that trial's total exactly.
std::vector<std::vector<double>> simulate_contributions(const RiskRegister& reg,
                                                        const SimulationConfig& config,
                                                        const CorrelationSpec& correlations = {});

}  // namespace costrisk
