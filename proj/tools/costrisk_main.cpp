#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "costrisk/appraisal.hpp"
#include "costrisk/enumeration.hpp"
#include "costrisk/io.hpp"
#include "costrisk/optimism_bias.hpp"
#include "costrisk/reference_class.hpp"
#include "costrisk/risk_register.hpp"
#include "costrisk/simulation.hpp"
#include "costrisk/types.hpp"
#include "costrisk/version.hpp"

namespace {

using costrisk::format_number;
using ordered_json = nlohmann::ordered_json;

// Exit statuses: 0 pass/success, 1 usage or input error, 2 flagged finding,
// 3 failed finding.
constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFlag = 2;
constexpr int kExitFail = 3;

int verdict_exit_code(costrisk::Verdict verdict) {
    switch (verdict) {
        case costrisk::Verdict::pass: return kExitPass;
        case costrisk::Verdict::flag: return kExitFlag;
        case costrisk::Verdict::fail: return kExitFail;
    }
    return kExitError;
}

// Every saved report carries the manifest that reproduces it. Workers are
// deliberately not part of it: they never change results.
ordered_json make_manifest(const std::string& subcommand,
                           const std::vector<std::string>& inputs, ordered_json parameters,
                           const std::string& out_path) {
    ordered_json manifest;
    manifest["subcommand"] = subcommand;
    manifest["inputs"] = inputs;
    manifest["parameters"] = std::move(parameters);
    manifest["output"] = out_path.empty() ? "-" : out_path;
    manifest["toolkit_version"] = std::string(costrisk::kToolkitVersion);
    return manifest;
}

void write_report(const std::string& out_path, const ordered_json& report) {
    if (out_path.empty()) return;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report file: " + out_path);
    out << report.dump(2) << "\n";
}

ordered_json finding_to_json(const costrisk::AuditFinding& finding) {
    ordered_json j;
    j["rule_id"] = finding.rule_id;
    j["verdict"] = std::string(to_string(finding.verdict));
    j["inputs"] = ordered_json::object();
    for (const auto& [key, value] : finding.inputs) j["inputs"][key] = value;
    j["computed"] = ordered_json::object();
    for (const auto& [key, value] : finding.computed) j["computed"][key] = value;
    j["message"] = finding.message;
    return j;
}

void print_finding(const costrisk::AuditFinding& finding) {
    std::cout << "rule: " << finding.rule_id << "\n";
    for (const auto& [key, value] : finding.inputs) {
        std::cout << "  " << key << " = " << format_number(value) << "\n";
    }
    std::cout << "computed:\n";
    for (const auto& [key, value] : finding.computed) {
        std::cout << "  " << key << " = " << format_number(value) << "\n";
    }
    std::cout << "verdict: " << to_string(finding.verdict) << "\n";
    std::cout << finding.message << "\n";
}

int emit_finding(const costrisk::AuditFinding& finding, const std::string& subcommand,
                 const std::vector<std::string>& inputs, ordered_json parameters,
                 const std::string& out_path) {
    print_finding(finding);
    ordered_json report;
    report["manifest"] = make_manifest(subcommand, inputs, std::move(parameters), out_path);
    report["finding"] = finding_to_json(finding);
    write_report(out_path, report);
    return verdict_exit_code(finding.verdict);
}

costrisk::ReferenceClass load_class_with_warning(const std::string& path) {
    auto cls = costrisk::load_reference_class(path);
    if (cls.below_recommended_size()) {
        std::cerr << "warning: reference class '" << cls.label() << "' has " << cls.size()
                  << " observation(s); at least " << costrisk::ReferenceClass::kRecommendedMinimum
                  << " comparable projects are recommended\n";
    }
    return cls;
}

struct QraOptions {
    std::string register_path;
    std::string correlations_path;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    int workers = 1;
    std::vector<double> p_levels{0.5, 0.8, 0.9};
};

void add_qra_options(CLI::App* cmd, QraOptions& options, bool with_p_levels) {
    cmd->add_option("--register", options.register_path, "risk register file")->required();
    cmd->add_option("--correlations", options.correlations_path,
                    "correlation spec file (pairs and groups)");
    cmd->add_option("--trials", options.trials, "simulation trials")->capture_default_str();
    cmd->add_option("--seed", options.seed, "simulation seed")->capture_default_str();
    cmd->add_option("--workers", options.workers, "worker threads (never changes results)")
        ->capture_default_str();
    if (with_p_levels) {
        cmd->add_option("--p", options.p_levels, "P-levels to report")->capture_default_str();
    }
}

struct QraRun {
    costrisk::RiskRegister reg;
    costrisk::CorrelationSpec correlations;
    costrisk::SimulationResult result;
};

QraRun run_simulation(const QraOptions& options) {
    QraRun run;
    run.reg = costrisk::load_risk_register(options.register_path);
    if (!options.correlations_path.empty()) {
        run.correlations = costrisk::load_correlations(options.correlations_path);
    }
    costrisk::SimulationConfig config;
    config.trials = options.trials;
    config.seed = options.seed;
    config.workers = options.workers;
    run.result = costrisk::simulate(run.reg, config, run.correlations);
    return run;
}

std::vector<double> normalized_p_levels(std::vector<double> p_levels) {
    std::sort(p_levels.begin(), p_levels.end());
    p_levels.erase(std::unique(p_levels.begin(), p_levels.end()), p_levels.end());
    return p_levels;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cost risk toolkit: reference class forecasting, optimism bias schedules, "
                 "quantitative risk analysis and appraisal audits"};
    app.set_version_flag("--version", std::string(costrisk::kToolkitVersion));
    app.require_subcommand(1);
    int exit_code = kExitPass;

    // ---- rcf: reference class queries -------------------------------------
    auto* rcf = app.add_subcommand("rcf", "reference class (outside view) queries");
    rcf->require_subcommand(1);
    std::string rcf_class_path;
    std::string rcf_out;
    rcf->add_option("--class", rcf_class_path, "reference class CSV")->required();
    rcf->add_option("--out", rcf_out, "write report to this path");

    auto rcf_report = [&](const std::string& subcommand, ordered_json parameters,
                          ordered_json body) {
        ordered_json report;
        report["manifest"] =
            make_manifest(subcommand, {rcf_class_path}, std::move(parameters), rcf_out);
        for (auto& [key, value] : body.items()) report[key] = value;
        write_report(rcf_out, report);
    };

    auto* rcf_cdf = rcf->add_subcommand("cdf", "share of observed overruns <= x");
    double rcf_x = 0.0;
    rcf_cdf->add_option("--x", rcf_x, "overrun value to evaluate")->required();
    rcf_cdf->callback([&] {
        const auto cls = load_class_with_warning(rcf_class_path);
        const double value = cls.empirical_cdf(rcf_x);
        std::cout << "cdf(" << format_number(rcf_x) << ") = " << format_number(value) << "\n";
        rcf_report("rcf cdf", {{"x", rcf_x}},
                   {{"label", cls.label()}, {"size", cls.size()}, {"cdf", value}});
    });

    auto* rcf_quantile = rcf->add_subcommand("quantile", "overrun at cumulative probability p");
    double rcf_p = 0.5;
    rcf_quantile->add_option("--p", rcf_p, "cumulative probability in (0,1)")->required();
    rcf_quantile->callback([&] {
        const auto cls = load_class_with_warning(rcf_class_path);
        const double value = cls.quantile(rcf_p);
        std::cout << "quantile(" << format_number(rcf_p) << ") = " << format_number(value)
                  << "\n";
        rcf_report("rcf quantile", {{"p", rcf_p}},
                   {{"label", cls.label()}, {"size", cls.size()}, {"quantile", value}});
    });

    auto* rcf_uplift = rcf->add_subcommand("uplift", "uplift required at a confidence level");
    double rcf_confidence = 0.8;
    rcf_uplift->add_option("--p", rcf_confidence, "confidence level in (0,1)")->required();
    rcf_uplift->callback([&] {
        const auto cls = load_class_with_warning(rcf_class_path);
        const double value = cls.required_uplift(rcf_confidence);
        std::cout << "required uplift at P" << format_number(rcf_confidence * 100.0) << " = "
                  << format_number(value) << "\n";
        rcf_report("rcf uplift", {{"p", rcf_confidence}},
                   {{"label", cls.label()}, {"size", cls.size()}, {"required_uplift", value}});
    });

    auto* rcf_outliers = rcf->add_subcommand("outliers", "interquartile-fence outlier scan");
    rcf_outliers->callback([&] {
        const auto cls = load_class_with_warning(rcf_class_path);
        const auto report = cls.detect_outliers();
        std::cout << "q1 = " << format_number(report.q1) << ", q3 = " << format_number(report.q3)
                  << ", iqr = " << format_number(report.iqr)
                  << ", threshold = " << format_number(report.threshold) << "\n";
        std::cout << "outliers (" << report.outlier_ids.size() << " of " << cls.size()
                  << ", share " << format_number(report.outlier_share) << "):";
        for (const auto& id : report.outlier_ids) std::cout << " " << id;
        std::cout << "\n";
        ordered_json body;
        body["label"] = cls.label();
        body["size"] = cls.size();
        body["q1"] = report.q1;
        body["q3"] = report.q3;
        body["iqr"] = report.iqr;
        body["threshold"] = report.threshold;
        body["outlier_ids"] = report.outlier_ids;
        body["outlier_share"] = report.outlier_share;
        rcf_report("rcf outliers", ordered_json::object(), body);
    });

    auto* rcf_scurve = rcf->add_subcommand("scurve", "cumulative cost risk curve as CSV");
    int rcf_resolution = 99;
    rcf_scurve->add_option("--resolution", rcf_resolution, "number of curve points")
        ->capture_default_str();
    rcf_scurve->callback([&] {
        const auto cls = load_class_with_warning(rcf_class_path);
        const auto points = cls.s_curve(rcf_resolution);
        std::ostringstream csv;
        csv << "# subcommand: rcf scurve\n";
        csv << "# input: " << rcf_class_path << "\n";
        csv << "# resolution: " << rcf_resolution << "\n";
        csv << "# toolkit_version: " << costrisk::kToolkitVersion << "\n";
        costrisk::write_s_curve_csv(csv, points);
        if (rcf_out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(rcf_out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write report file: " + rcf_out);
            out << csv.str();
            std::cout << "wrote " << points.size() << " curve points to " << rcf_out << "\n";
        }
    });

    // ---- qra: risk register simulation ------------------------------------
    auto* qra = app.add_subcommand("qra", "risk register analysis (inside view)");
    QraOptions qra_options;
    add_qra_options(qra, qra_options, true);
    double qra_base_cost = 0.0;
    bool qra_oracle = false;
    std::string qra_out;
    auto* qra_base_opt =
        qra->add_option("--base-cost", qra_base_cost,
                        "base cost; reports P-level allowances as fractions of it");
    qra->add_flag("--oracle", qra_oracle,
                  "also enumerate the exact distribution and report deltas");
    qra->add_option("--out", qra_out, "write report to this path");
    qra->callback([&] {
        const auto p_levels = normalized_p_levels(qra_options.p_levels);
        auto run = run_simulation(qra_options);
        const double expected = run.reg.empty() ? 0.0 : run.reg.expected_value();

        ordered_json parameters;
        parameters["trials"] = qra_options.trials;
        parameters["seed"] = qra_options.seed;
        parameters["p_levels"] = p_levels;
        if (*qra_base_opt) parameters["base_cost"] = qra_base_cost;
        parameters["oracle"] = qra_oracle;

        std::vector<std::string> inputs{qra_options.register_path};
        if (!qra_options.correlations_path.empty()) {
            inputs.push_back(qra_options.correlations_path);
        }

        ordered_json report;
        report["manifest"] = make_manifest("qra", inputs, parameters, qra_out);
        report["expected_value"] = expected;
        ordered_json sim;
        sim["trials"] = run.result.trials;
        sim["seed"] = run.result.seed;
        sim["mean"] = run.result.mean;
        sim["quantiles"] = ordered_json::object();
        for (const double p : p_levels) {
            sim["quantiles"][format_number(p)] = run.result.quantile(p);
        }
        report["simulation"] = sim;
        if (*qra_base_opt) {
            ordered_json allowances = ordered_json::object();
            for (const double p : p_levels) {
                allowances[format_number(p)] =
                    costrisk::risk_allowance(run.result, p, qra_base_cost);
            }
            report["risk_allowances"] = allowances;
        }
        report["excluded_catastrophic"] = run.result.excluded_catastrophic;

        std::cout << "expected value = " << format_number(expected) << "\n";
        std::cout << "trials = " << run.result.trials << ", seed = " << run.result.seed
                  << ", mean = " << format_number(run.result.mean) << "\n";
        for (const double p : p_levels) {
            std::cout << "P" << format_number(p * 100.0) << " = "
                      << format_number(run.result.quantile(p));
            if (*qra_base_opt) {
                std::cout << " (allowance "
                          << format_number(
                                 costrisk::risk_allowance(run.result, p, qra_base_cost))
                          << " of base " << format_number(qra_base_cost) << ")";
            }
            std::cout << "\n";
        }
        if (!run.result.excluded_catastrophic.empty()) {
            std::cout << "excluded catastrophic risks:";
            for (const auto& id : run.result.excluded_catastrophic) std::cout << " " << id;
            std::cout << "\n";
        }

        if (qra_oracle) {
            const auto exact = costrisk::enumerate_register(run.reg);
            ordered_json oracle;
            oracle["exact_mean"] = exact.mean;
            oracle["mean_delta"] = run.result.mean - exact.mean;
            oracle["quantiles"] = ordered_json::object();
            for (const double p : p_levels) {
                const double exact_q = exact.quantile(p);
                const double sim_q = run.result.quantile(p);
                ordered_json cell;
                cell["exact"] = exact_q;
                cell["simulated"] = sim_q;
                cell["delta"] = sim_q - exact_q;
                oracle["quantiles"][format_number(p)] = cell;
            }
            report["oracle"] = oracle;
            std::cout << "oracle exact mean = " << format_number(exact.mean) << " (delta "
                      << format_number(run.result.mean - exact.mean) << ")\n";
        }
        write_report(qra_out, report);
    });

    // ---- audit: appraisal rules -------------------------------------------
    auto* audit = app.add_subcommand("audit", "appraisal audit rules");
    audit->require_subcommand(1);
    std::string audit_out;
    audit->add_option("--out", audit_out, "write report to this path");

    auto* mps = audit->add_subcommand(
        "mean-plus-six", "compare a P-level risk provision against mean risk plus a rate share");
    double mps_total = 0.0, mps_p_risk = 0.0, mps_mean_risk = 0.0, mps_rate = 0.06;
    mps->add_option("--total", mps_total, "total estimate including the P-level provision")
        ->required();
    mps->add_option("--p-risk", mps_p_risk, "P-level risk provision")->required();
    mps->add_option("--mean-risk", mps_mean_risk, "mean risk from the register")->required();
    mps->add_option("--rate", mps_rate, "uplift rate on the risk-adjusted cost")
        ->capture_default_str();
    mps->callback([&] {
        const auto finding =
            costrisk::mean_plus_six_check(mps_total, mps_p_risk, mps_mean_risk, mps_rate);
        exit_code = emit_finding(finding, "audit mean-plus-six", {},
                                 {{"total", mps_total},
                                  {"p_risk", mps_p_risk},
                                  {"mean_risk", mps_mean_risk},
                                  {"rate", mps_rate}},
                                 audit_out);
    });

    auto* bcr_cmd = audit->add_subcommand("bcr", "benefit-cost ratio");
    double bcr_benefits = 0.0, bcr_costs = 0.0;
    int bcr_precision = 2;
    bcr_cmd->add_option("--benefits", bcr_benefits, "present-value benefits")->required();
    bcr_cmd->add_option("--costs", bcr_costs, "present-value costs")->required();
    bcr_cmd->add_option("--precision", bcr_precision, "decimal places for display")
        ->capture_default_str();
    bcr_cmd->callback([&] {
        if (bcr_precision < 0 || bcr_precision > 17) {
            throw std::invalid_argument("precision must be in 0..17");
        }
        costrisk::AppraisalInput input;
        input.pv_benefits = bcr_benefits;
        input.pv_costs = bcr_costs;
        const double ratio = costrisk::bcr(input);
        char rounded[64];
        std::snprintf(rounded, sizeof(rounded), "%.*f", bcr_precision, ratio);
        costrisk::AuditFinding finding;
        finding.rule_id = "bcr";
        finding.inputs = {{"pv_benefits", bcr_benefits}, {"pv_costs", bcr_costs}};
        finding.computed = {{"bcr", ratio}};
        finding.verdict = costrisk::Verdict::pass;
        finding.message = "benefit-cost ratio " + std::string(rounded);
        exit_code = emit_finding(finding, "audit bcr", {},
                                 {{"benefits", bcr_benefits},
                                  {"costs", bcr_costs},
                                  {"precision", bcr_precision}},
                                 audit_out);
    });

    auto* headroom_cmd =
        audit->add_subcommand("headroom", "funding margin as a fraction of the estimate");
    double hr_funding = 0.0, hr_estimate = 0.0;
    headroom_cmd->add_option("--funding", hr_funding, "funding envelope")->required();
    headroom_cmd->add_option("--estimate", hr_estimate, "cost estimate")->required();
    headroom_cmd->callback([&] {
        const double value = costrisk::headroom(hr_funding, hr_estimate);
        costrisk::AuditFinding finding;
        finding.rule_id = "headroom";
        finding.inputs = {{"funding", hr_funding}, {"estimate", hr_estimate}};
        finding.computed = {{"headroom", value}};
        finding.verdict = costrisk::Verdict::pass;
        finding.message = value < 0.0
                              ? "funding falls short of the estimate by " +
                                    format_number(-value) + " of the estimate"
                              : "headroom " + format_number(value) + " of the estimate";
        exit_code = emit_finding(finding, "audit headroom", {},
                                 {{"funding", hr_funding}, {"estimate", hr_estimate}}, audit_out);
    });

    auto* overrun_cmd = audit->add_subcommand("overrun", "overrun as a fraction of the estimate");
    double ov_actual = 0.0, ov_estimated = 0.0;
    overrun_cmd->add_option("--actual", ov_actual, "actual outturn cost")->required();
    overrun_cmd->add_option("--estimated", ov_estimated, "estimated cost")->required();
    overrun_cmd->callback([&] {
        const double value = costrisk::overrun(ov_actual, ov_estimated);
        costrisk::AuditFinding finding;
        finding.rule_id = "overrun";
        finding.inputs = {{"actual", ov_actual}, {"estimated", ov_estimated}};
        finding.computed = {{"overrun", value}};
        finding.verdict = costrisk::Verdict::pass;
        finding.message = "overrun " + format_number(value) + " of the estimate";
        exit_code = emit_finding(finding, "audit overrun", {},
                                 {{"actual", ov_actual}, {"estimated", ov_estimated}}, audit_out);
    });

    auto* gap = audit->add_subcommand(
        "gap", "compare the inside-view allowance against the outside-view uplift");
    QraOptions gap_options;
    add_qra_options(gap, gap_options, false);
    std::string gap_class_path;
    double gap_base_cost = 0.0, gap_p = 0.9, gap_threshold = 0.5;
    gap->add_option("--class", gap_class_path, "reference class CSV")->required();
    gap->add_option("--base-cost", gap_base_cost, "base cost")->required();
    gap->add_option("--p", gap_p, "P-level to compare at")->capture_default_str();
    gap->add_option("--threshold", gap_threshold, "flag when inside < threshold * outside")
        ->capture_default_str();
    gap->callback([&] {
        const auto cls = load_class_with_warning(gap_class_path);
        const auto run = run_simulation(gap_options);
        const auto finding = costrisk::inside_outside_gap(run.result, gap_base_cost, cls, gap_p,
                                                          gap_threshold);
        std::vector<std::string> inputs{gap_options.register_path};
        if (!gap_options.correlations_path.empty()) {
            inputs.push_back(gap_options.correlations_path);
        }
        inputs.push_back(gap_class_path);
        exit_code = emit_finding(finding, "audit gap", inputs,
                                 {{"trials", gap_options.trials},
                                  {"seed", gap_options.seed},
                                  {"base_cost", gap_base_cost},
                                  {"p", gap_p},
                                  {"threshold", gap_threshold}},
                                 audit_out);
    });

    // ---- ob: optimism bias schedules --------------------------------------
    auto* ob = app.add_subcommand("ob", "optimism bias uplift schedules and adjustments");
    ob->require_subcommand(1);
    std::string ob_out;
    ob->add_option("--out", ob_out, "write report to this path");

    auto* ob_stage = ob->add_subcommand("stage", "staged uplift table lookup");
    std::string ob_kind = "capex";
    int ob_stage_level = 1;
    ob_stage->add_option("--kind", ob_kind, "capex or opex")->capture_default_str();
    ob_stage->add_option("--stage", ob_stage_level, "project development level 1..5")
        ->required();
    ob_stage->callback([&] {
        const auto& row = costrisk::lookup_stage_uplift(costrisk::parse_cost_kind(ob_kind),
                                                        ob_stage_level);
        std::cout << to_string(row.cost_kind) << " stage " << row.stage << ": uplift "
                  << format_number(row.uplift) << " (" << to_string(row.unit) << ")"
                  << (row.qra_required ? ", quantified risk assessment required" : "") << "\n";
        ordered_json report;
        report["manifest"] = make_manifest(
            "ob stage", {}, {{"kind", ob_kind}, {"stage", ob_stage_level}}, ob_out);
        report["uplift"] = row.uplift;
        report["unit"] = std::string(to_string(row.unit));
        report["qra_required"] = row.qra_required;
        write_report(ob_out, report);
    });

    auto* ob_uplift = ob->add_subcommand("uplift", "confidence schedule lookup");
    std::string ob_type = "rail";
    std::string ob_metric = "capex";
    std::string ob_schedule_path;
    double ob_confidence = 0.8;
    ob_uplift->add_option("--type", ob_type, "project type")->capture_default_str();
    ob_uplift->add_option("--metric", ob_metric, "capex or works_duration")
        ->capture_default_str();
    ob_uplift->add_option("--confidence", ob_confidence, "confidence level in (0,1)")
        ->required();
    ob_uplift->add_option("--schedule", ob_schedule_path,
                          "replace the built-in schedule with this CSV");
    ob_uplift->callback([&] {
        const auto type = costrisk::parse_project_category(ob_type);
        const auto metric = costrisk::parse_cost_metric(ob_metric);
        double value = 0.0;
        std::vector<std::string> inputs;
        if (ob_schedule_path.empty()) {
            value = costrisk::ConfidenceSchedule::built_in().lookup(type, metric, ob_confidence);
        } else {
            inputs.push_back(ob_schedule_path);
            value = costrisk::load_confidence_schedule(ob_schedule_path)
                        .lookup(type, metric, ob_confidence);
        }
        std::cout << "uplift at P" << format_number(ob_confidence * 100.0) << " for " << ob_type
                  << "/" << ob_metric << " = " << format_number(value) << "\n";
        ordered_json report;
        report["manifest"] = make_manifest(
            "ob uplift", inputs,
            {{"type", ob_type}, {"metric", ob_metric}, {"confidence", ob_confidence}}, ob_out);
        report["uplift"] = value;
        write_report(ob_out, report);
    });

    auto* ob_mitigate = ob->add_subcommand(
        "mitigate", "reduce an upper-bound uplift by a uniform mitigation claim");
    std::string mit_type = "nonstandard_civil";
    std::string mit_metric = "capex";
    double mit_managed = 0.0;
    std::string mit_evidence = "subjective";
    bool mit_require_objective = false;
    double mit_base = -1.0;
    ob_mitigate->add_option("--type", mit_type, "project type")->capture_default_str();
    ob_mitigate->add_option("--metric", mit_metric, "capex or works_duration")
        ->capture_default_str();
    ob_mitigate->add_option("--managed", mit_managed, "degree risks are managed, in [0,1]")
        ->capture_default_str();
    ob_mitigate->add_option("--evidence", mit_evidence, "objective or subjective")
        ->capture_default_str();
    ob_mitigate->add_flag("--require-objective", mit_require_objective,
                          "count only objectively evidenced mitigation");
    auto* mit_base_opt =
        ob_mitigate->add_option("--base", mit_base, "base cost to adjust with the result");
    ob_mitigate->callback([&] {
        const auto& bounds = costrisk::lookup_bounds(costrisk::parse_project_category(mit_type),
                                                     costrisk::parse_cost_metric(mit_metric));
        const auto& breakdown = costrisk::FactorBreakdown::default_capex_breakdown();
        const auto assessment = costrisk::MitigationAssessment::uniform(
            breakdown, mit_managed, costrisk::parse_evidence_quality(mit_evidence));
        const double uplift =
            costrisk::mitigated_uplift(bounds, breakdown, assessment, mit_require_objective);
        std::cout << "mitigated uplift = " << format_number(uplift) << " (bounds "
                  << format_number(bounds.lower) << ".." << format_number(bounds.upper) << ")\n";
        ordered_json report;
        report["manifest"] = make_manifest("ob mitigate", {},
                                           {{"type", mit_type},
                                            {"metric", mit_metric},
                                            {"managed", mit_managed},
                                            {"evidence", mit_evidence},
                                            {"require_objective", mit_require_objective}},
                                           ob_out);
        report["lower"] = bounds.lower;
        report["upper"] = bounds.upper;
        report["uplift"] = uplift;
        if (*mit_base_opt) {
            const double adjusted = costrisk::green_book_adjust(mit_base, uplift);
            report["adjusted_cost"] = adjusted;
            std::cout << "adjusted cost = " << format_number(adjusted) << "\n";
        }
        write_report(ob_out, report);
    });

    auto* ob_scenarios =
        ob->add_subcommand("scenarios", "low/central/high adjusted costs from uplift bounds");
    std::string sc_type = "standard_civil";
    std::string sc_metric = "capex";
    double sc_base = 0.0, sc_central = 0.0;
    ob_scenarios->add_option("--type", sc_type, "project type")->capture_default_str();
    ob_scenarios->add_option("--metric", sc_metric, "capex or works_duration")
        ->capture_default_str();
    ob_scenarios->add_option("--base", sc_base, "base cost")->required();
    ob_scenarios->add_option("--central", sc_central, "central-case uplift")->required();
    ob_scenarios->callback([&] {
        const auto& bounds = costrisk::lookup_bounds(costrisk::parse_project_category(sc_type),
                                                     costrisk::parse_cost_metric(sc_metric));
        const auto scenarios = costrisk::sensitivity_scenarios(sc_base, bounds, sc_central);
        std::cout << "low = " << format_number(scenarios.low)
                  << ", central = " << format_number(scenarios.central)
                  << ", high = " << format_number(scenarios.high) << "\n";
        ordered_json report;
        report["manifest"] = make_manifest(
            "ob scenarios", {},
            {{"type", sc_type}, {"metric", sc_metric}, {"base", sc_base},
             {"central", sc_central}},
            ob_out);
        report["low"] = scenarios.low;
        report["central"] = scenarios.central;
        report["high"] = scenarios.high;
        write_report(ob_out, report);
    });

    // Let group-level options (--class, --out) appear after the subcommand
    // name as well as before it.
    for (auto* group : app.get_subcommands([](const CLI::App*) { return true; })) {
        for (auto* leaf : group->get_subcommands([](const CLI::App*) { return true; })) {
            leaf->fallthrough();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
