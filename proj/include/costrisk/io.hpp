#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "costrisk/optimism_bias.hpp"
#include "costrisk/reference_class.hpp"
#include "costrisk/risk_register.hpp"
#include "costrisk/simulation.hpp"

namespace costrisk {

// File ingestion error carrying "path:line: detail" in what().
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& detail);
};

// CSV with header `project_id,category,overrun,baseline`. Blank lines and
// lines starting with `#` are skipped. The class label defaults to the file
// stem when not given.
ReferenceClass load_reference_class(const std::string& path, std::string label = "");

// Structured-record file with a top-level `risks` array. Permitted fields per
// risk are exactly id, name, probability, impact, group, catastrophic,
// opportunity; impact carries kind plus value or low/mode/high. Unknown or
// missing fields are errors naming the field.
RiskRegister load_risk_register(const std::string& path);

// Array of {a, b, rho} pair records and {group, rho} group records.
CorrelationSpec load_correlations(const std::string& path);

// CSV with header `type,metric,anchor,value`: one confidence anchor per row.
ConfidenceSchedule load_confidence_schedule(const std::string& path);

// `uplift,probability` header plus one row per point.
void write_s_curve_csv(std::ostream& out, std::span<const SCurvePoint> points);

// Locale-independent numeric formatting used everywhere output must be
// byte-stable: shortest of %.10g, '.' decimal separator, no grouping.
std::string format_number(double value);

}  // namespace costrisk
