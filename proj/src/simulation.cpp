#include "costrisk/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "costrisk/rng.hpp"
#include "costrisk/stats.hpp"

namespace costrisk {
namespace {

constexpr std::uint64_t kOccurrenceStream = 0;
constexpr std::uint64_t kScoreStream = 1;

// A risk's cost in one trial as a nondecreasing function of its uniform:
// occurrence sits in the upper tail [1-p, 1), and the conditional impact
// position grows with u, so rank reordering of uniforms moves occurrence and
// severity together.
double contribution(const Risk& risk, double u) {
    const double p = risk.probability;
    if (p <= 0.0) return 0.0;
    const double threshold = 1.0 - p;
    if (u < threshold) return 0.0;
    double q = (u - threshold) / p;
    if (q > 1.0) q = 1.0;
    return risk.impact.at_quantile(q);
}

// Runs body(t) for t in [0, trials), split into one contiguous chunk per
// worker. body must write only to trial-indexed slots, so the result is
// independent of the split.
template <typename Body>
void parallel_trials(std::uint64_t trials, int workers, const Body& body) {
    if (workers <= 1 || trials < 2) {
        for (std::uint64_t t = 0; t < trials; ++t) body(t);
        return;
    }
    const auto w = static_cast<std::uint64_t>(workers);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    for (std::uint64_t k = 0; k < w; ++k) {
        const std::uint64_t begin = trials * k / w;
        const std::uint64_t end = trials * (k + 1) / w;
        if (begin == end) continue;
        threads.emplace_back([&body, begin, end] {
            for (std::uint64_t t = begin; t < end; ++t) body(t);
        });
    }
    for (auto& thread : threads) thread.join();
}

// Spearman target to the Pearson correlation that normal scores must carry
// for the reordered ranks to land on the target.
double pearson_from_spearman(double s) {
    return 2.0 * std::sin(3.14159265358979323846 * s / 6.0);
}

struct RiskIndex {
    std::size_t index = 0;
    bool catastrophic = false;
};

// Everything needed to evaluate any risk's uniform in any trial: streamed
// straight from the counter generator for independent risks, or read from a
// rank-reordered column for risks named by the correlation spec.
struct TrialPlan {
    std::vector<const Risk*> risks;
    std::vector<CounterRng::Key> keys;
    std::vector<std::size_t> participant_slot;       // SIZE_MAX when streamed
    std::vector<std::vector<double>> reordered;      // per participant column

    double uniform_at(std::size_t i, std::uint64_t t) const {
        const std::size_t slot = participant_slot[i];
        return slot == SIZE_MAX ? CounterRng::uniform(keys[i], t) : reordered[slot][t];
    }
};

TrialPlan build_plan(const RiskRegister& reg, const SimulationConfig& config,
                     const CorrelationSpec& correlations) {
    if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (config.workers < 1) throw std::invalid_argument("workers must be at least 1");

    TrialPlan plan;
    plan.risks = reg.aggregable();
    const std::size_t n = plan.risks.size();
    const std::uint64_t trials = config.trials;

    plan.keys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        plan.keys[i] =
            CounterRng::key(config.seed, kOccurrenceStream, static_cast<std::uint64_t>(i));
    }
    plan.participant_slot.assign(n, SIZE_MAX);
    if (correlations.empty()) return plan;

    const auto matrix = build_correlation_matrix(reg, correlations);
    std::vector<bool> involved(n, false);
    for (const auto& group : correlations.groups) {
        for (std::size_t i = 0; i < n; ++i) {
            if (plan.risks[i]->group && *plan.risks[i]->group == group.group) involved[i] = true;
        }
    }
    for (const auto& pair : correlations.pairs) {
        for (std::size_t i = 0; i < n; ++i) {
            if (plan.risks[i]->id == pair.a || plan.risks[i]->id == pair.b) involved[i] = true;
        }
    }
    std::vector<std::size_t> participants;
    for (std::size_t i = 0; i < n; ++i) {
        if (involved[i]) participants.push_back(i);
    }

    const std::size_t k = participants.size();
    std::vector<std::vector<double>> pearson(k, std::vector<double>(k, 0.0));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            pearson[a][b] =
                a == b ? 1.0 : pearson_from_spearman(matrix[participants[a]][participants[b]]);
        }
    }

    // Cholesky with a semidefinite tolerance; a clearly negative pivot means
    // the targets are jointly unachievable.
    std::vector<std::vector<double>> chol(k, std::vector<double>(k, 0.0));
    for (std::size_t j = 0; j < k; ++j) {
        double d = pearson[j][j];
        for (std::size_t t = 0; t < j; ++t) d -= chol[j][t] * chol[j][t];
        if (d < -1e-9) {
            std::size_t other = j;
            for (std::size_t b = 0; b < j; ++b) {
                if (matrix[participants[b]][participants[j]] != 0.0) {
                    other = b;
                    break;
                }
            }
            throw std::invalid_argument("infeasible correlation targets for pair (" +
                                        plan.risks[participants[other]]->id + ", " +
                                        plan.risks[participants[j]]->id + ")");
        }
        chol[j][j] = std::sqrt(std::max(d, 0.0));
        for (std::size_t i = j + 1; i < k; ++i) {
            double s = pearson[i][j];
            for (std::size_t t = 0; t < j; ++t) s -= chol[i][t] * chol[j][t];
            chol[i][j] = chol[j][j] > 0.0 ? s / chol[j][j] : 0.0;
        }
    }

    // Independent normal scores, correlated through the factor; each
    // participant's uniforms are then reordered to match the score ranks, so
    // marginals stay exact while ranks co-move.
    std::vector<std::vector<double>> scores(k, std::vector<double>(trials));
    for (std::size_t a = 0; a < k; ++a) {
        const auto key = CounterRng::key(config.seed, kScoreStream,
                                         static_cast<std::uint64_t>(participants[a]));
        auto& column = scores[a];
        parallel_trials(trials, config.workers, [&](std::uint64_t t) {
            column[t] = inverse_normal_cdf(CounterRng::uniform(key, t));
        });
    }
    std::vector<std::vector<double>> correlated(k, std::vector<double>(trials));
    for (std::size_t a = 0; a < k; ++a) {
        auto& column = correlated[a];
        parallel_trials(trials, config.workers, [&](std::uint64_t t) {
            double y = 0.0;
            for (std::size_t b = 0; b <= a; ++b) y += chol[a][b] * scores[b][t];
            column[t] = y;
        });
    }

    plan.reordered.assign(k, std::vector<double>(trials));
    std::vector<std::size_t> by_score(trials), by_uniform(trials);
    std::vector<double> uniforms(trials);
    for (std::size_t a = 0; a < k; ++a) {
        parallel_trials(trials, config.workers, [&](std::uint64_t t) {
            uniforms[t] = CounterRng::uniform(plan.keys[participants[a]], t);
        });
        std::iota(by_score.begin(), by_score.end(), std::size_t{0});
        std::iota(by_uniform.begin(), by_uniform.end(), std::size_t{0});
        const auto& column = correlated[a];
        std::sort(by_score.begin(), by_score.end(), [&](std::size_t x, std::size_t y) {
            if (column[x] != column[y]) return column[x] < column[y];
            return x < y;
        });
        std::sort(by_uniform.begin(), by_uniform.end(), [&](std::size_t x, std::size_t y) {
            if (uniforms[x] != uniforms[y]) return uniforms[x] < uniforms[y];
            return x < y;
        });
        for (std::size_t r = 0; r < trials; ++r) {
            plan.reordered[a][by_score[r]] = uniforms[by_uniform[r]];
        }
        plan.participant_slot[participants[a]] = a;
    }
    return plan;
}

}  // namespace

std::vector<std::vector<double>> build_correlation_matrix(const RiskRegister& reg,
                                                          const CorrelationSpec& correlations) {
    const auto risks = reg.aggregable();
    std::map<std::string, RiskIndex> by_id;
    for (std::size_t i = 0; i < risks.size(); ++i) by_id[risks[i]->id] = {i, false};
    for (const Risk* risk : reg.catastrophic()) by_id[risk->id] = {0, true};

    const std::size_t n = risks.size();
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<bool>> assigned(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) matrix[i][i] = 1.0;

    auto resolve = [&](const std::string& id) -> std::size_t {
        const auto it = by_id.find(id);
        if (it == by_id.end()) {
            throw std::invalid_argument("unknown risk id in correlation spec: " + id);
        }
        if (it->second.catastrophic) {
            throw std::invalid_argument("cannot correlate catastrophic risk: " + id);
        }
        return it->second.index;
    };
    auto apply = [&](std::size_t a, std::size_t b, double rho) {
        if (a == b) {
            throw std::invalid_argument("correlation pair must name two distinct risks: " +
                                        risks[a]->id);
        }
        if (!(rho >= -1.0 && rho <= 1.0)) {
            throw std::invalid_argument("correlation out of range for pair (" + risks[a]->id +
                                        ", " + risks[b]->id + ")");
        }
        if (assigned[a][b] && matrix[a][b] != rho) {
            throw std::invalid_argument("conflicting correlation targets for pair (" +
                                        risks[std::min(a, b)]->id + ", " +
                                        risks[std::max(a, b)]->id + ")");
        }
        matrix[a][b] = matrix[b][a] = rho;
        assigned[a][b] = assigned[b][a] = true;
    };

    for (const auto& group : correlations.groups) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (risks[i]->group && *risks[i]->group == group.group) members.push_back(i);
        }
        if (members.empty()) {
            throw std::invalid_argument("unknown group in correlation spec: " + group.group);
        }
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                apply(members[a], members[b], group.rho);
            }
        }
    }
    for (const auto& pair : correlations.pairs) {
        apply(resolve(pair.a), resolve(pair.b), pair.rho);
    }
    return matrix;
}

SimulationResult simulate(const RiskRegister& reg, const SimulationConfig& config,
                          const CorrelationSpec& correlations) {
    const TrialPlan plan = build_plan(reg, config, correlations);
    const std::size_t n = plan.risks.size();
    const std::uint64_t trials = config.trials;

    SimulationResult result;
    result.trials = trials;
    result.seed = config.seed;
    for (const Risk* risk : reg.catastrophic()) result.excluded_catastrophic.push_back(risk->id);

    result.totals.assign(trials, 0.0);
    auto& totals = result.totals;
    parallel_trials(trials, config.workers, [&](std::uint64_t t) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            total += contribution(*plan.risks[i], plan.uniform_at(i, t));
        }
        totals[t] = total;
    });

    double sum = 0.0;
    for (const double total : totals) sum += total;
    result.mean = trials > 0 ? sum / static_cast<double>(trials) : 0.0;
    std::sort(totals.begin(), totals.end());
    return result;
}

std::vector<std::vector<double>> simulate_contributions(const RiskRegister& reg,
                                                        const SimulationConfig& config,
                                                        const CorrelationSpec& correlations) {
    const TrialPlan plan = build_plan(reg, config, correlations);
    const std::size_t n = plan.risks.size();
    const std::uint64_t trials = config.trials;

    std::vector<std::vector<double>> columns(n, std::vector<double>(trials));
    for (std::size_t i = 0; i < n; ++i) {
        auto& column = columns[i];
        parallel_trials(trials, config.workers, [&](std::uint64_t t) {
            column[t] = contribution(*plan.risks[i], plan.uniform_at(i, t));
        });
    }
    return columns;
}

double SimulationResult::quantile(double p) const {
    if (totals.empty()) throw std::invalid_argument("empty simulation result");
    return hazen_quantile(totals, p);
}

double risk_allowance(const SimulationResult& result, double p, double base_cost) {
    if (!(base_cost > 0.0)) throw std::invalid_argument("base cost must be positive");
    return result.quantile(p) / base_cost;
}

}  // namespace costrisk
