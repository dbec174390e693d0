#pragma once

#include <string_view>

namespace costrisk {

// Project categories used by reference classes, uplift bounds and schedules.
enum class ProjectCategory {
    rail,
    road,
    fixed_link,
    building,
    it,
    standard_civil,
    nonstandard_civil,
    other,
};

// Which business-case stage an overrun observation was measured against.
enum class EstimateBaseline {
    outline_business_case,
    final_business_case,
    unknown,
};

std::string_view to_string(ProjectCategory category);
std::string_view to_string(EstimateBaseline baseline);

// Parse the exact lowercase tokens emitted by to_string; throws
// std::invalid_argument on anything else.
ProjectCategory parse_project_category(std::string_view token);
EstimateBaseline parse_estimate_baseline(std::string_view token);

}  // namespace costrisk
