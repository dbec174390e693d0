#include "costrisk/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace costrisk {
namespace {

std::string compose_message(const std::string& path, std::size_t line,
                            const std::string& detail) {
    if (line == 0) return path + ": " + detail;
    return path + ":" + std::to_string(line) + ": " + detail;
}

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(trim(current));
    return fields;
}

double parse_double(const std::string& path, std::size_t line, const std::string& field,
                    const std::string& token) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || token.empty()) {
        throw ParseError(path, line, "invalid number for " + field + ": '" + token + "'");
    }
    return value;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return in;
}

// Reads a CSV file line by line, skipping blanks and `#` comments; checks the
// header, then hands each data row (split into fields) to the row callback.
template <typename RowFn>
void read_csv(const std::string& path, const std::string& expected_header, std::size_t columns,
              const RowFn& row_fn) {
    auto in = open_or_throw(path);
    std::string line;
    std::size_t line_number = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        if (!header_seen) {
            if (stripped != expected_header) {
                throw ParseError(path, line_number,
                                 "expected header '" + expected_header + "'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(stripped);
        if (fields.size() != columns) {
            throw ParseError(path, line_number,
                             "expected " + std::to_string(columns) + " fields, got " +
                                 std::to_string(fields.size()));
        }
        row_fn(line_number, fields);
    }
    if (!header_seen) throw ParseError(path, 0, "missing header '" + expected_header + "'");
}

using json = nlohmann::json;

json parse_json_file(const std::string& path) {
    auto in = open_or_throw(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path, 0, e.what());
    }
}

void require_fields(const std::string& path, const json& object, const std::string& context,
                    const std::vector<std::string>& required,
                    const std::vector<std::string>& optional) {
    if (!object.is_object()) throw ParseError(path, 0, context + ": expected an object");
    for (const auto& field : required) {
        if (!object.contains(field)) {
            throw ParseError(path, 0, context + ": missing field '" + field + "'");
        }
    }
    for (const auto& item : object.items()) {
        const auto& key = item.key();
        const bool known =
            std::find(required.begin(), required.end(), key) != required.end() ||
            std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) throw ParseError(path, 0, context + ": unknown field '" + key + "'");
    }
}

double number_field(const std::string& path, const json& object, const std::string& context,
                    const std::string& field) {
    const auto& value = object.at(field);
    if (!value.is_number()) {
        throw ParseError(path, 0, context + ": field '" + field + "' must be a number");
    }
    return value.get<double>();
}

std::string string_field(const std::string& path, const json& object, const std::string& context,
                         const std::string& field) {
    const auto& value = object.at(field);
    if (!value.is_string()) {
        throw ParseError(path, 0, context + ": field '" + field + "' must be a string");
    }
    return value.get<std::string>();
}

}  // namespace

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& detail)
    : std::runtime_error(compose_message(path, line, detail)) {}

ReferenceClass load_reference_class(const std::string& path, std::string label) {
    if (label.empty()) label = std::filesystem::path(path).stem().string();
    std::vector<OverrunObservation> observations;
    read_csv(path, "project_id,category,overrun,baseline", 4,
             [&](std::size_t line, const std::vector<std::string>& fields) {
                 OverrunObservation obs;
                 obs.project_id = fields[0];
                 if (obs.project_id.empty()) {
                     throw ParseError(path, line, "project_id must not be empty");
                 }
                 try {
                     obs.category = parse_project_category(fields[1]);
                     obs.baseline = parse_estimate_baseline(fields[3]);
                 } catch (const std::invalid_argument& e) {
                     throw ParseError(path, line, e.what());
                 }
                 obs.overrun = parse_double(path, line, "overrun", fields[2]);
                 if (obs.overrun <= -1.0) {
                     throw ParseError(path, line, "overrun must exceed -1.0");
                 }
                 observations.push_back(std::move(obs));
             });
    return ReferenceClass(std::move(label), std::move(observations));
}

RiskRegister load_risk_register(const std::string& path) {
    const json doc = parse_json_file(path);
    require_fields(path, doc, "register", {"risks"}, {});
    const auto& risks_node = doc.at("risks");
    if (!risks_node.is_array()) throw ParseError(path, 0, "field 'risks' must be an array");

    std::vector<Risk> risks;
    std::size_t index = 0;
    for (const auto& node : risks_node) {
        const std::string context = "risks[" + std::to_string(index) + "]";
        require_fields(path, node, context, {"id", "name", "probability", "impact"},
                       {"group", "catastrophic"});
        Risk risk;
        risk.id = string_field(path, node, context, "id");
        risk.name = string_field(path, node, context, "name");
        risk.probability = number_field(path, node, context, "probability");

        const auto& impact_node = node.at("impact");
        const std::string impact_context = context + ".impact";
        if (!impact_node.is_object() || !impact_node.contains("kind")) {
            throw ParseError(path, 0, impact_context + ": missing field 'kind'");
        }
        const std::string kind = string_field(path, impact_node, impact_context, "kind");
        try {
            if (kind == "fixed") {
                require_fields(path, impact_node, impact_context, {"kind", "value"}, {});
                risk.impact = Impact::fixed(number_field(path, impact_node, impact_context,
                                                         "value"));
            } else if (kind == "three_point") {
                require_fields(path, impact_node, impact_context, {"kind", "low", "mode", "high"},
                               {});
                risk.impact = Impact::three_point(
                    number_field(path, impact_node, impact_context, "low"),
                    number_field(path, impact_node, impact_context, "mode"),
                    number_field(path, impact_node, impact_context, "high"));
            } else {
                throw ParseError(path, 0, impact_context + ": unknown kind '" + kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, 0, impact_context + ": " + e.what());
        }

        if (node.contains("group")) {
            risk.group = string_field(path, node, context, "group");
        }
        if (node.contains("catastrophic")) {
            const auto& flag = node.at("catastrophic");
            if (!flag.is_boolean()) {
                throw ParseError(path, 0, context + ": field 'catastrophic' must be a boolean");
            }
            risk.catastrophic = flag.get<bool>();
        }
        risks.push_back(std::move(risk));
        ++index;
    }
    try {
        return RiskRegister(std::move(risks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 0, e.what());
    }
}

CorrelationSpec load_correlations(const std::string& path) {
    const json doc = parse_json_file(path);
    if (!doc.is_array()) throw ParseError(path, 0, "expected a top-level array");

    CorrelationSpec spec;
    std::size_t index = 0;
    for (const auto& node : doc) {
        const std::string context = "correlations[" + std::to_string(index) + "]";
        if (!node.is_object()) throw ParseError(path, 0, context + ": expected an object");
        if (node.contains("group")) {
            require_fields(path, node, context, {"group", "rho"}, {});
            spec.groups.push_back({string_field(path, node, context, "group"),
                                   number_field(path, node, context, "rho")});
        } else {
            require_fields(path, node, context, {"a", "b", "rho"}, {});
            spec.pairs.push_back({string_field(path, node, context, "a"),
                                  string_field(path, node, context, "b"),
                                  number_field(path, node, context, "rho")});
        }
        ++index;
    }
    return spec;
}

ConfidenceSchedule load_confidence_schedule(const std::string& path) {
    ConfidenceSchedule schedule;
    read_csv(path, "type,metric,anchor,value", 4,
             [&](std::size_t line, const std::vector<std::string>& fields) {
                 try {
                     schedule.add(parse_project_category(fields[0]),
                                  parse_cost_metric(fields[1]),
                                  parse_double(path, line, "anchor", fields[2]),
                                  parse_double(path, line, "value", fields[3]));
                 } catch (const std::invalid_argument& e) {
                     throw ParseError(path, line, e.what());
                 }
             });
    return schedule;
}

void write_s_curve_csv(std::ostream& out, std::span<const SCurvePoint> points) {
    out << "uplift,probability\n";
    for (const auto& point : points) {
        out << format_number(point.uplift) << "," << format_number(point.cumulative_probability)
            << "\n";
    }
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

}  // namespace costrisk
