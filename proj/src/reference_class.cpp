#include "costrisk/reference_class.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "costrisk/stats.hpp"

namespace costrisk {

ReferenceClass::ReferenceClass(std::string label, std::vector<OverrunObservation> observations)
    : label_(std::move(label)), observations_(std::move(observations)) {
    for (const auto& obs : observations_) {
        if (!std::isfinite(obs.overrun)) {
            throw std::invalid_argument("overrun not finite for project " + obs.project_id);
        }
        if (obs.overrun <= -1.0) {
            throw std::invalid_argument("overrun must exceed -1.0 for project " + obs.project_id);
        }
    }
    std::sort(observations_.begin(), observations_.end(),
              [](const OverrunObservation& a, const OverrunObservation& b) {
                  if (a.overrun != b.overrun) return a.overrun < b.overrun;
                  return a.project_id < b.project_id;
              });
    overruns_.reserve(observations_.size());
    for (const auto& obs : observations_) overruns_.push_back(obs.overrun);
}

void ReferenceClass::require_nonempty() const {
    if (observations_.empty()) throw std::invalid_argument("empty reference class");
}

double ReferenceClass::empirical_cdf(double x) const {
    require_nonempty();
    const auto at_most = std::upper_bound(overruns_.begin(), overruns_.end(), x) -
                         overruns_.begin();
    return static_cast<double>(at_most) / static_cast<double>(overruns_.size());
}

double ReferenceClass::quantile(double p) const {
    require_nonempty();
    return hazen_quantile(overruns_, p);
}

double ReferenceClass::required_uplift(double confidence) const {
    return std::max(0.0, quantile(confidence));
}

OutlierReport ReferenceClass::detect_outliers() const {
    if (size() < 4) throw std::invalid_argument("too few observations for quartiles");
    OutlierReport report;
    report.q1 = hazen_quantile(overruns_, 0.25);
    report.q3 = hazen_quantile(overruns_, 0.75);
    report.iqr = report.q3 - report.q1;
    report.threshold = report.q3 + 1.5 * report.iqr;
    for (const auto& obs : observations_) {
        if (obs.overrun >= report.threshold) report.outlier_ids.insert(obs.project_id);
    }
    report.outlier_share =
        static_cast<double>(report.outlier_ids.size()) / static_cast<double>(size());
    return report;
}

std::vector<SCurvePoint> ReferenceClass::s_curve(int resolution) const {
    require_nonempty();
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    std::vector<SCurvePoint> points;
    points.reserve(static_cast<std::size_t>(resolution));
    for (int i = 1; i <= resolution; ++i) {
        const double p = static_cast<double>(i) / (static_cast<double>(resolution) + 1.0);
        points.push_back({quantile(p), p});
    }
    return points;
}

}  // namespace costrisk
