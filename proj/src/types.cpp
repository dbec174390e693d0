#include "costrisk/types.hpp"

#include <stdexcept>
#include <string>

namespace costrisk {

std::string_view to_string(ProjectCategory category) {
    switch (category) {
        case ProjectCategory::rail: return "rail";
        case ProjectCategory::road: return "road";
        case ProjectCategory::fixed_link: return "fixed_link";
        case ProjectCategory::building: return "building";
        case ProjectCategory::it: return "it";
        case ProjectCategory::standard_civil: return "standard_civil";
        case ProjectCategory::nonstandard_civil: return "nonstandard_civil";
        case ProjectCategory::other: return "other";
    }
    throw std::invalid_argument("unknown project category");
}

std::string_view to_string(EstimateBaseline baseline) {
    switch (baseline) {
        case EstimateBaseline::outline_business_case: return "outline_business_case";
        case EstimateBaseline::final_business_case: return "final_business_case";
        case EstimateBaseline::unknown: return "unknown";
    }
    throw std::invalid_argument("unknown estimate baseline");
}

ProjectCategory parse_project_category(std::string_view token) {
    for (auto c : {ProjectCategory::rail, ProjectCategory::road, ProjectCategory::fixed_link,
                   ProjectCategory::building, ProjectCategory::it, ProjectCategory::standard_civil,
                   ProjectCategory::nonstandard_civil, ProjectCategory::other}) {
        if (token == to_string(c)) return c;
    }
    throw std::invalid_argument("unknown project category: " + std::string(token));
}

EstimateBaseline parse_estimate_baseline(std::string_view token) {
    for (auto b : {EstimateBaseline::outline_business_case, EstimateBaseline::final_business_case,
                   EstimateBaseline::unknown}) {
        if (token == to_string(b)) return b;
    }
    throw std::invalid_argument("unknown estimate baseline: " + std::string(token));
}

}  // namespace costrisk
