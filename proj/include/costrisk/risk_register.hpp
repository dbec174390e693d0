#pragma once

#include <optional>
#include <string>
#include <vector>

namespace costrisk {

enum class ImpactKind { fixed, three_point };

// Cost impact of a risk if it occurs. Fixed impacts use value; three_point
// impacts are triangular with low <= mode <= high.
struct Impact {
    ImpactKind kind = ImpactKind::fixed;
    double value = 0.0;
    double low = 0.0;
    double mode = 0.0;
    double high = 0.0;

    static Impact fixed(double value);
    static Impact three_point(double low, double mode, double high);

    // Expected impact given occurrence: value, or (low + mode + high) / 3.
    double mean() const;

    // Impact at cumulative probability q in [0,1] of the conditional impact
    // distribution (inverse CDF; constant for fixed impacts).
    double at_quantile(double q) const;
};

struct Risk {
    std::string id;
    std::string name;
    double probability = 0.0;  // occurrence probability in [0,1]
    Impact impact;
    std::optional<std::string> group;
    bool catastrophic = false;  // excluded from aggregation, reported separately
    bool opportunity = false;   // negative-cost convention; impacts may be < 0
};

// Validated collection of risks with unique non-empty ids.
class RiskRegister {
public:
    RiskRegister() = default;
    explicit RiskRegister(std::vector<Risk> risks);

    std::size_t size() const { return risks_.size(); }
    bool empty() const { return risks_.empty(); }
    const std::vector<Risk>& risks() const { return risks_; }
    const Risk& at(std::size_t index) const { return risks_.at(index); }
    const Risk* find(const std::string& id) const;

    // Risks that participate in aggregation (catastrophic ones excluded).
    std::vector<const Risk*> aggregable() const;
    std::vector<const Risk*> catastrophic() const;

    // Sum over aggregable risks of probability * mean impact.
    double expected_value() const;

private:
    std::vector<Risk> risks_;
};

}  // namespace costrisk
