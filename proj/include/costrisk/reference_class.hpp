#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "costrisk/types.hpp"

namespace costrisk {

// One historic project outcome: cost overrun as a decimal fraction of the
// estimate (0.52 = +52%, real terms; negative values are underruns).
struct OverrunObservation {
    std::string project_id;
    ProjectCategory category = ProjectCategory::other;
    double overrun = 0.0;
    EstimateBaseline baseline = EstimateBaseline::unknown;
};

// One point of a cumulative cost-risk curve: the uplift that is not exceeded
// with the given probability.
struct SCurvePoint {
    double uplift = 0.0;
    double cumulative_probability = 0.0;
};

// Result of the interquartile-fence outlier scan. `threshold` is always
// q3 + 1.5 * iqr in the arithmetic used, and the flag is inclusive (>=).
struct OutlierReport {
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    double threshold = 0.0;
    std::set<std::string> outlier_ids;
    double outlier_share = 0.0;  // |outlier_ids| / n
};

// An empirical overrun distribution built from historic comparable projects
// (the outside view). Observations are validated and sorted by overrun at
// construction; the object is immutable afterwards, so const access is safe
// to share across threads.
class ReferenceClass {
public:
    // Distribution queries want substantially more data than this to be
    // meaningful; smaller classes still answer queries but are reported as
    // below the recommended size.
    static constexpr std::size_t kRecommendedMinimum = 20;

    ReferenceClass() = default;
    ReferenceClass(std::string label, std::vector<OverrunObservation> observations);

    const std::string& label() const { return label_; }
    std::size_t size() const { return observations_.size(); }
    bool empty() const { return observations_.empty(); }
    bool below_recommended_size() const { return size() < kRecommendedMinimum; }

    // Sorted ascending by (overrun, project_id).
    const std::vector<OverrunObservation>& observations() const { return observations_; }

    // Share of observations <= x; right-continuous step function.
    double empirical_cdf(double x) const;

    // Hazen-interpolated quantile; requires 0 < p < 1.
    double quantile(double p) const;

    // Uplift needed so that at most (1 - confidence) exceedance probability
    // remains under this distribution. Never negative.
    double required_uplift(double confidence) const;

    // Interquartile-fence scan; requires at least 4 observations.
    OutlierReport detect_outliers() const;

    // Curve samples (quantile(p), p) for p on the even grid
    // i/(resolution + 1), i = 1..resolution. Requires resolution >= 2.
    std::vector<SCurvePoint> s_curve(int resolution) const;

private:
    void require_nonempty() const;

    std::string label_;
    std::vector<OverrunObservation> observations_;
    std::vector<double> overruns_;  // sorted values, cached for queries
};

}  // namespace costrisk
