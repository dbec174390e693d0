#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "costrisk/optimism_bias.hpp"

using namespace costrisk;

TEST_CASE("staged uplift table carries the published values") {
    struct Row {
        CostKind kind;
        int stage;
        double uplift;
        UpliftUnit unit;
        bool qra;
    };
    const Row expected[] = {
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
    };
    CHECK(stage_uplift_table().size() == 10);
    for (const auto& row : expected) {
        const auto& actual = lookup_stage_uplift(row.kind, row.stage);
        CHECK(actual.uplift == row.uplift);
        CHECK(actual.unit == row.unit);
        CHECK(actual.qra_required == row.qra);
    }
}

TEST_CASE("capex uplifts decrease strictly across stages") {
    for (int stage = 1; stage < 5; ++stage) {
        CHECK(lookup_stage_uplift(CostKind::capex, stage).uplift >
              lookup_stage_uplift(CostKind::capex, stage + 1).uplift);
    }
}

TEST_CASE("stage lookup rejects out-of-range stages") {
    CHECK_THROWS_AS(lookup_stage_uplift(CostKind::capex, 0), std::invalid_argument);
    CHECK_THROWS_AS(lookup_stage_uplift(CostKind::opex, 6), std::invalid_argument);
}

TEST_CASE("uplift bounds table") {
    const auto& nsc = lookup_bounds(ProjectCategory::nonstandard_civil, CostMetric::capex);
    CHECK(nsc.lower == 0.06);
    CHECK(nsc.upper == 0.66);
    const auto& nsc_wd =
        lookup_bounds(ProjectCategory::nonstandard_civil, CostMetric::works_duration);
    CHECK(nsc_wd.lower == 0.03);
    CHECK(nsc_wd.upper == 0.25);
    const auto& sc = lookup_bounds(ProjectCategory::standard_civil, CostMetric::capex);
    CHECK(sc.lower == 0.03);
    CHECK(sc.upper == 0.44);
    const auto& rail = lookup_bounds(ProjectCategory::rail, CostMetric::capex);
    CHECK(rail.lower == 0.06);
    CHECK(rail.upper == 0.66);
    for (const auto& row : bounds_table()) CHECK(row.lower <= row.upper);

    CHECK_THROWS_AS(lookup_bounds(ProjectCategory::it, CostMetric::capex),
                    std::invalid_argument);
    CHECK_THROWS_AS(lookup_bounds(ProjectCategory::rail, CostMetric::works_duration),
                    std::invalid_argument);
}

TEST_CASE("default factor breakdown") {
    const auto& breakdown = FactorBreakdown::default_capex_breakdown();
    CHECK(breakdown.size() == 13);
    double sum = 0.0;
    for (const auto& factor : breakdown.factors()) sum += factor.share;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(breakdown.contains("procurement"));
    CHECK(breakdown.contains("inadequacy of the business case"));
    CHECK(breakdown.factors()[0].name == "procurement");
    CHECK(breakdown.factors()[0].share == 0.02);
    CHECK(breakdown.factors()[4].share == 0.35);
}

TEST_CASE("factor breakdown construction is validated") {
    CHECK_THROWS_AS(FactorBreakdown({{"a", 0.5}, {"b", 0.4}}), std::invalid_argument);
    CHECK_THROWS_AS(FactorBreakdown({{"a", 0.5}, {"a", 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(FactorBreakdown({{"a", 1.2}, {"b", -0.2}}), std::invalid_argument);
    CHECK_THROWS_AS(FactorBreakdown({}), std::invalid_argument);
    CHECK_NOTHROW(FactorBreakdown({{"a", 0.25}, {"b", 0.75}}));
}

TEST_CASE("mitigated uplift reduces the upper bound by managed shares") {
    const auto& bounds = lookup_bounds(ProjectCategory::nonstandard_civil, CostMetric::capex);
    const auto& breakdown = FactorBreakdown::default_capex_breakdown();

    SUBCASE("nothing managed keeps the upper bound") {
        const auto none =
            MitigationAssessment::uniform(breakdown, 0.0, EvidenceQuality::objective);
        CHECK(mitigated_uplift(bounds, breakdown, none, false) == 0.66);
        CHECK(mitigated_uplift(bounds, breakdown, none, true) == 0.66);
    }
    SUBCASE("full objective mitigation clamps to the lower bound") {
        const auto full =
            MitigationAssessment::uniform(breakdown, 1.0, EvidenceQuality::objective);
        CHECK(mitigated_uplift(bounds, breakdown, full, true) == 0.06);
    }
    SUBCASE("managing only procurement removes its share") {
        auto assessment =
            MitigationAssessment::uniform(breakdown, 0.0, EvidenceQuality::objective);
        assessment.set("procurement", 1.0, EvidenceQuality::objective);
        CHECK(mitigated_uplift(bounds, breakdown, assessment, true) ==
              doctest::Approx(0.6468).epsilon(1e-12));
    }
    SUBCASE("subjective evidence counts only without the objectivity test") {
        const auto subjective =
            MitigationAssessment::uniform(breakdown, 1.0, EvidenceQuality::subjective);
        CHECK(mitigated_uplift(bounds, breakdown, subjective, true) == 0.66);
        CHECK(mitigated_uplift(bounds, breakdown, subjective, false) == 0.06);
    }
    SUBCASE("missing factor is an error") {
        MitigationAssessment partial;
        partial.set("procurement", 1.0, EvidenceQuality::objective);
        CHECK_THROWS_AS(mitigated_uplift(bounds, breakdown, partial, false),
                        std::invalid_argument);
    }
    SUBCASE("managed degree outside [0,1] is rejected") {
        MitigationAssessment assessment;
        CHECK_THROWS_AS(assessment.set("procurement", 1.5, EvidenceQuality::objective),
                        std::invalid_argument);
    }
}

TEST_CASE("green book adjustment") {
    CHECK(green_book_adjust(100.0, 0.66) == doctest::Approx(166.0));
    CHECK(green_book_adjust(123.4, 0.0) == 123.4);
    CHECK(green_book_adjust(0.0, 0.4) == 0.0);
    CHECK_THROWS_AS(green_book_adjust(-1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(green_book_adjust(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("sensitivity scenarios") {
    SUBCASE("standard civils bounds with a reduced central case") {
        const auto& bounds = lookup_bounds(ProjectCategory::standard_civil, CostMetric::capex);
        const auto scenarios = sensitivity_scenarios(100.0, bounds, 0.24);
        CHECK(scenarios.low == doctest::Approx(103.0));
        CHECK(scenarios.central == doctest::Approx(124.0));
        CHECK(scenarios.high == doctest::Approx(144.0));
    }
    SUBCASE("rail bounds with the stage-3 central value") {
        const auto& bounds = lookup_bounds(ProjectCategory::rail, CostMetric::capex);
        const auto scenarios = sensitivity_scenarios(100.0, bounds, 0.40);
        CHECK(scenarios.low == doctest::Approx(106.0));
        CHECK(scenarios.central == doctest::Approx(140.0));
        CHECK(scenarios.high == doctest::Approx(166.0));
    }
    SUBCASE("degenerate bounds give three equal values") {
        const UpliftBounds flat{ProjectCategory::other, CostMetric::capex, 0.1, 0.1};
        const auto scenarios = sensitivity_scenarios(50.0, flat, 0.1);
        CHECK(scenarios.low == scenarios.central);
        CHECK(scenarios.central == scenarios.high);
    }
    SUBCASE("central outside the bounds is an error") {
        const auto& bounds = lookup_bounds(ProjectCategory::standard_civil, CostMetric::capex);
        CHECK_THROWS_AS(sensitivity_scenarios(100.0, bounds, 0.45), std::invalid_argument);
        CHECK_THROWS_AS(sensitivity_scenarios(100.0, bounds, 0.02), std::invalid_argument);
    }
}

TEST_CASE("confidence schedule anchors and interpolation") {
    CHECK(lookup_confidence_uplift(ProjectCategory::rail, 0.50) == 0.40);
    CHECK(lookup_confidence_uplift(ProjectCategory::rail, 0.80) == 0.57);
    CHECK(lookup_confidence_uplift(ProjectCategory::rail, 0.90) == 0.68);
    CHECK(lookup_confidence_uplift(ProjectCategory::rail, 0.95) == 0.80);
    CHECK(lookup_confidence_uplift(ProjectCategory::rail, 0.85) ==
          doctest::Approx(0.625).epsilon(1e-12));
    CHECK(lookup_confidence_uplift(ProjectCategory::rail, 0.65) ==
          doctest::Approx(0.485).epsilon(1e-12));

    CHECK_THROWS_AS(lookup_confidence_uplift(ProjectCategory::rail, 0.40),
                    std::invalid_argument);
    CHECK_THROWS_AS(lookup_confidence_uplift(ProjectCategory::rail, 0.96),
                    std::invalid_argument);
    CHECK_THROWS_AS(lookup_confidence_uplift(ProjectCategory::road, 0.80),
                    std::invalid_argument);
}

TEST_CASE("confidence schedule rejects bad anchors") {
    ConfidenceSchedule schedule;
    schedule.add(ProjectCategory::road, CostMetric::capex, 0.5, 0.2);
    CHECK_THROWS_AS(schedule.add(ProjectCategory::road, CostMetric::capex, 0.5, 0.3),
                    std::invalid_argument);
    CHECK_THROWS_AS(schedule.add(ProjectCategory::road, CostMetric::capex, 1.0, 0.3),
                    std::invalid_argument);
    CHECK(schedule.has(ProjectCategory::road, CostMetric::capex));
    CHECK_FALSE(schedule.has(ProjectCategory::road, CostMetric::works_duration));
    CHECK(schedule.lookup(ProjectCategory::road, CostMetric::capex, 0.5) == 0.2);
}
