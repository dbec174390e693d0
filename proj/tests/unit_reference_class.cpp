#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "costrisk/reference_class.hpp"
#include "costrisk/stats.hpp"

using costrisk::OverrunObservation;
using costrisk::ReferenceClass;

namespace {

ReferenceClass make_class(const std::vector<double>& overruns) {
    std::vector<OverrunObservation> observations;
    for (std::size_t i = 0; i < overruns.size(); ++i) {
        OverrunObservation obs;
        obs.project_id = "P" + std::to_string(i + 1);
        obs.category = costrisk::ProjectCategory::rail;
        obs.overrun = overruns[i];
        observations.push_back(obs);
    }
    return ReferenceClass("test", std::move(observations));
}

}  // namespace

TEST_CASE("construction validates and sorts observations") {
    const auto cls = make_class({0.3, 0.1, 0.2});
    REQUIRE(cls.size() == 3);
    CHECK(cls.observations()[0].overrun == 0.1);
    CHECK(cls.observations()[2].overrun == 0.3);
    CHECK(cls.below_recommended_size());

    CHECK_THROWS_AS(make_class({0.1, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_class({-1.5}), std::invalid_argument);
    CHECK_THROWS_AS(make_class({std::nan("")}), std::invalid_argument);
    CHECK_NOTHROW(make_class({-0.99}));
}

TEST_CASE("empirical_cdf counts observations at or below x") {
    const auto cls = make_class({0.10, 0.20, 0.30});
    CHECK(cls.empirical_cdf(0.20) == doctest::Approx(2.0 / 3.0));
    CHECK(cls.empirical_cdf(-0.50) == 0.0);
    CHECK(cls.empirical_cdf(0.30) == 1.0);
    CHECK(cls.empirical_cdf(5.0) == 1.0);
    CHECK(cls.empirical_cdf(0.199999) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("empty class refuses queries") {
    const ReferenceClass cls;
    CHECK_THROWS_WITH_AS(cls.empirical_cdf(0.0), "empty reference class", std::invalid_argument);
    CHECK_THROWS_WITH_AS(cls.quantile(0.5), "empty reference class", std::invalid_argument);
}

TEST_CASE("quantile follows the plotting-position rule") {
    CHECK(make_class({0.40}).quantile(0.5) == 0.40);
    CHECK(make_class({0.0, 1.0}).quantile(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    // With four points the positions are 0.125, 0.375, 0.625, 0.875; p at the
    // last position returns the maximum exactly.
    CHECK(make_class({0.10, 0.20, 0.30, 0.40}).quantile(0.875) == 0.40);
    // Clamped outside the plotting-position range.
    const auto cls = make_class({0.10, 0.20, 0.30, 0.40});
    CHECK(cls.quantile(0.01) == 0.10);
    CHECK(cls.quantile(0.99) == 0.40);

    CHECK_THROWS_WITH_AS(cls.quantile(0.0), "probability out of range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(cls.quantile(1.0), "probability out of range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(cls.quantile(-0.2), "probability out of range", std::invalid_argument);
}

TEST_CASE("quantile interpolates linearly between order statistics") {
    const auto cls = make_class({0.0, 1.0});
    // Positions 0.25 and 0.75; halfway in p is halfway in value.
    CHECK(cls.quantile(0.375) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(cls.quantile(0.625) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("quantile hits each order statistic at its plotting position") {
    const auto values = std::vector<double>{-0.2, 0.05, 0.3, 0.31, 0.9, 1.4, 2.2};
    const auto cls = make_class(values);
    const double n = static_cast<double>(values.size());
    for (std::size_t k = 1; k <= values.size(); ++k) {
        const double p = (static_cast<double>(k) - 0.5) / n;
        CHECK(cls.quantile(p) == doctest::Approx(values[k - 1]).epsilon(1e-12));
    }
}

TEST_CASE("required_uplift clamps at zero") {
    CHECK(make_class({-0.10, -0.05, -0.02}).required_uplift(0.5) == 0.0);
    const auto even = make_class({0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
    CHECK(even.required_uplift(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(even.required_uplift(0.9) >= even.required_uplift(0.5));
}

TEST_CASE("outlier scan uses the interquartile fence") {
    SUBCASE("identical values are all flagged") {
        const auto report = make_class(std::vector<double>(10, 0.2)).detect_outliers();
        CHECK(report.iqr == 0.0);
        CHECK(report.threshold == 0.2);
        CHECK(report.outlier_ids.size() == 10);
        CHECK(report.outlier_share == 1.0);
    }
    SUBCASE("evenly spread values produce no outliers") {
        const auto report =
            make_class({0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0}).detect_outliers();
        CHECK(report.q1 == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(report.q3 == doctest::Approx(7.0).epsilon(1e-12));
        CHECK(report.threshold == doctest::Approx(14.5).epsilon(1e-12));
        CHECK(report.outlier_ids.empty());
        CHECK(report.outlier_share == 0.0);
    }
    SUBCASE("a single extreme value is flagged") {
        const auto cls = make_class({0.0, 0.1, 0.2, 0.3, 5.0});
        const auto report = cls.detect_outliers();
        REQUIRE(report.outlier_ids.size() == 1);
        // The extreme observation sorts last, so it carries the last id.
        CHECK(report.outlier_ids.count("P5") == 1);
        CHECK(report.outlier_share == doctest::Approx(0.2));
    }
    SUBCASE("threshold identity holds bitwise") {
        const auto report = make_class({0.0, 0.1, 0.2, 0.3, 5.0}).detect_outliers();
        CHECK(report.threshold == report.q3 + 1.5 * report.iqr);
        CHECK(report.iqr == report.q3 - report.q1);
    }
    SUBCASE("too small a class is an error") {
        CHECK_THROWS_WITH_AS(make_class({0.1, 0.2, 0.3}).detect_outliers(),
                             "too few observations for quartiles", std::invalid_argument);
    }
}

TEST_CASE("s_curve samples an even probability grid") {
    SUBCASE("degenerate class") {
        const auto points = make_class({0.5}).s_curve(3);
        REQUIRE(points.size() == 3);
        for (const auto& point : points) CHECK(point.uplift == 0.5);
        CHECK(points[0].cumulative_probability == doctest::Approx(0.25));
        CHECK(points[1].cumulative_probability == doctest::Approx(0.5));
        CHECK(points[2].cumulative_probability == doctest::Approx(0.75));
    }
    SUBCASE("two points interpolate") {
        const auto points = make_class({0.0, 1.0}).s_curve(3);
        REQUIRE(points.size() == 3);
        CHECK(points[0].uplift == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(points[1].uplift == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(points[2].uplift == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("coordinates are nondecreasing") {
        const auto points = make_class({0.1, 0.4, 0.4, 0.9, 2.0}).s_curve(25);
        REQUIRE(points.size() == 25);
        for (std::size_t i = 1; i < points.size(); ++i) {
            CHECK(points[i].uplift >= points[i - 1].uplift);
            CHECK(points[i].cumulative_probability > points[i - 1].cumulative_probability);
        }
    }
    SUBCASE("resolution below 2 is an error") {
        CHECK_THROWS_AS(make_class({0.5}).s_curve(1), std::invalid_argument);
    }
}

TEST_CASE("queries are invariant under input permutation") {
    std::vector<double> values{0.9, -0.1, 0.3, 0.3, 1.7, 0.05, 0.6, 0.2};
    const auto reference = make_class(values);
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(values.begin(), values.end(), rng);
        const auto shuffled = make_class(values);
        for (const double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            CHECK(shuffled.quantile(p) == reference.quantile(p));
        }
        CHECK(shuffled.empirical_cdf(0.3) == reference.empirical_cdf(0.3));
        CHECK(shuffled.detect_outliers().threshold == reference.detect_outliers().threshold);
    }
}
