#include "qentropy/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace qentropy {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t trial, std::uint64_t salt = 0) {
    return splitmix64(seed ^ splitmix64(trial ^ splitmix64(salt)));
}

// Per-trial engine, so that results do not depend on evaluation order.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial,
                             std::uint64_t salt = 0) {
    return std::mt19937_64(mix(seed, trial, salt));
}

double unit_exponential(std::mt19937_64& rng) {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    return -std::log1p(-u);
}

std::vector<double> simplex_point(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = unit_exponential(rng);
        sum += x;
    }
    for (double& x : v) x /= sum;
    return v;
}

std::size_t pick_size(std::mt19937_64& rng, std::size_t max_n) {
    return std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
}

} // namespace

nlohmann::json AuditReport::to_json() const {
    nlohmann::json p{{"q", params.q}, {"tau", params.tau}, {"lambda", params.lambda}};
    if (params.alpha) p["alpha"] = *params.alpha;
    return nlohmann::json{
        {"axiom", axiom},
        {"family", family_name(family)},
        {"params", p},
        {"verdict", holds ? "holds" : "violated"},
        {"gap", gap},
        {"lhs", lhs},
        {"rhs", rhs},
        {"witness", witness},
        {"tolerance", tolerance},
        {"seed", seed},
    };
}

void AuditSuiteConfig::validate() const {
    params.validate();
    if (trials < 1) throw invalid_parameter("trials must be >= 1");
    if (max_n < 2 || max_m < 2) throw invalid_parameter("max_n and max_m must be >= 2");
    if (!(tolerance > 0.0)) throw invalid_parameter("tolerance must be > 0");
}

nlohmann::json distribution_to_json(const Distribution& p) {
    return nlohmann::json{{"p", p.probs()}};
}

Distribution distribution_from_json(const nlohmann::json& j, bool normalize) {
    if (!j.contains("p") || !j["p"].is_array()) {
        throw invalid_parameter(R"(distribution JSON must have the form {"p": [...]})");
    }
    const auto values = j["p"].get<std::vector<double>>();
    return Distribution::make(values, normalize);
}

nlohmann::json joint_to_json(const JointDistribution& joint) {
    return nlohmann::json{{"r", joint.matrix()}};
}

JointDistribution joint_from_json(const nlohmann::json& j) {
    if (!j.contains("r") || !j["r"].is_array()) {
        throw invalid_parameter(R"(joint JSON must have the form {"r": [[...], ...]})");
    }
    return JointDistribution::make(j["r"].get<std::vector<std::vector<double>>>());
}

Distribution sample_distribution(std::uint64_t seed, std::uint64_t trial, std::size_t n) {
    auto rng = trial_engine(seed, trial);
    return Distribution::make(simplex_point(rng, n));
}

JointDistribution sample_joint(std::uint64_t seed, std::uint64_t trial, std::size_t n,
                               std::size_t m) {
    auto rng = trial_engine(seed, trial, 1);
    const std::vector<double> flat = simplex_point(rng, n * m);
    std::vector<std::vector<double>> matrix(n, std::vector<double>(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) matrix[i][j] = flat[i * m + j];
    }
    return JointDistribution::make(matrix);
}

JointDistribution remark1_joint() {
    return JointDistribution::make({{0.25, 0.25}, {0.5, 0.0}});
}

AuditReport check_maximality(const AuditSuiteConfig& config) {
    config.validate();
    AuditReport report{.axiom = "A2",
                       .family = config.family,
                       .params = config.params,
                       .tolerance = config.tolerance,
                       .seed = config.seed};
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 2; n <= config.max_n; ++n) {
        const double base = evaluate(config.family, Distribution::uniform(n), config.params);
        auto consider = [&](const Distribution& p) {
            const double diff = evaluate(config.family, p, config.params) - base;
            if (diff > worst) {
                worst = diff;
                report.lhs = diff + base;
                report.rhs = base;
                report.witness = distribution_to_json(p);
            }
        };
        // Concavity-type violations concentrate near the boundary.
        constexpr double eps = 1e-3;
        std::vector<double> vertex(n, eps / static_cast<double>(n - 1));
        vertex[0] = 1.0 - eps;
        consider(Distribution::make(vertex));
        for (std::size_t t = 0; t < config.trials; ++t) {
            consider(sample_distribution(config.seed, t * config.max_n + n, n));
        }
    }
    report.gap = std::max(0.0, worst);
    report.holds = report.gap <= config.tolerance;
    return report;
}

AuditReport check_expandability(const AuditSuiteConfig& config) {
    config.validate();
    AuditReport report{.axiom = "A3",
                       .family = config.family,
                       .params = config.params,
                       .tolerance = config.tolerance,
                       .seed = config.seed};
    for (std::size_t t = 0; t < config.trials; ++t) {
        auto rng = trial_engine(config.seed, t, 2);
        const std::size_t n = pick_size(rng, config.max_n);
        const Distribution p = Distribution::make(simplex_point(rng, n));
        const double plain = evaluate(config.family, p, config.params);
        const double padded = evaluate(config.family, expand(p), config.params);
        const double gap = std::abs(padded - plain);
        if (gap > report.gap) {
            report.gap = gap;
            report.lhs = padded;
            report.rhs = plain;
            report.witness = distribution_to_json(p);
        }
    }
    report.holds = report.gap <= config.tolerance;
    return report;
}

AuditReport check_chain_rule(const AuditSuiteConfig& config) {
    config.validate();
    AuditReport report{.axiom = "A4",
                       .family = config.family,
                       .params = config.params,
                       .tolerance = config.tolerance,
                       .seed = config.seed};
    auto consider = [&](const JointDistribution& joint) {
        try {
            const ChainRuleEvaluation eval = chain_rule(joint, config.family, config.params);
            if (eval.gap > report.gap) {
                report.gap = eval.gap;
                report.lhs = eval.joint_entropy;
                report.rhs = eval.combined;
                report.witness = joint_to_json(joint);
            }
        } catch (const domain_error& e) {
            // A domain violation inside the audit is itself a witness.
            report.gap = std::numeric_limits<double>::infinity();
            report.witness = joint_to_json(joint);
            report.witness["error"] = e.what();
        }
    };
    std::size_t t = 0;
    if (config.family == EntropyFamily::JizbaKorbel) {
        consider(remark1_joint());
        ++t;
    }
    for (; t < config.trials; ++t) {
        auto rng = trial_engine(config.seed, t, 3);
        const std::size_t n = pick_size(rng, config.max_n);
        const std::size_t m = pick_size(rng, config.max_m);
        consider(sample_joint(config.seed, t, n, m));
    }
    report.holds = report.gap <= config.tolerance;
    return report;
}

AuditReport check_composability(const AuditSuiteConfig& config) {
    config.validate();
    AuditReport report{.axiom = "C3",
                       .family = config.family,
                       .params = config.params,
                       .tolerance = config.tolerance,
                       .seed = config.seed};
    for (std::size_t t = 0; t < config.trials; ++t) {
        auto rng = trial_engine(config.seed, t, 4);
        const std::size_t n = pick_size(rng, config.max_n);
        const std::size_t m = pick_size(rng, config.max_m);
        const Distribution p = Distribution::make(simplex_point(rng, n));
        const Distribution q = Distribution::make(simplex_point(rng, m));
        const double lhs = evaluate(config.family, direct_product(p, q), config.params);
        const double rhs = compose(config.family, evaluate(config.family, p, config.params),
                                   evaluate(config.family, q, config.params), config.params);
        const double gap = std::abs(lhs - rhs);
        if (gap > report.gap) {
            report.gap = gap;
            report.lhs = lhs;
            report.rhs = rhs;
            report.witness = {{"p", p.probs()}, {"q", q.probs()}};
        }
    }
    report.holds = report.gap <= config.tolerance;
    return report;
}

AuditReport check_normalization(EntropyFamily family, const EntropyParams& params) {
    params.validate();
    const Distribution coin = Distribution::make({0.5, 0.5});
    AuditReport report{.axiom = family == EntropyFamily::GClass ? "C4" : "A5",
                       .family = family,
                       .params = params,
                       .witness = distribution_to_json(coin),
                       .tolerance = 1e-9};
    report.lhs = evaluate(family, coin, params);
    report.rhs = h_map(1.0, params.q);
    report.gap = std::abs(report.lhs - report.rhs);
    report.holds = report.gap <= report.tolerance;
    return report;
}

AuditReport check_info_additivity(double q, std::size_t trials, std::uint64_t seed) {
    if (!(q > 0.0)) throw invalid_parameter("q must be > 0");
    AuditReport report{.axiom = "C1",
                       .family = EntropyFamily::GClass,
                       .params = EntropyParams{.q = q},
                       .tolerance = 1e-9,
                       .seed = seed};
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_engine(seed, t, 5);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double a = 1.0 - unit(rng);
        const double b = 1.0 - unit(rng);
        const double lhs = info_content(a * b, q);
        const double rhs = q_add(info_content(a, q), info_content(b, q), q);
        const double gap = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
        if (gap > report.gap) {
            report.gap = gap;
            report.lhs = lhs;
            report.rhs = rhs;
            report.witness = {{"a", a}, {"b", b}};
        }
    }
    // Monotone decrease on a grid.
    double prev = info_content(0.01, q);
    for (int k = 2; k <= 100; ++k) {
        const double p = 0.01 * k;
        const double cur = info_content(p, q);
        if (cur > prev + 1e-12) {
            report.gap = std::max(report.gap, cur - prev);
            report.witness = {{"monotonicity_violation_at", p}};
        }
        prev = cur;
    }
    report.holds = report.gap <= report.tolerance;
    return report;
}

AuditReport reproduce_counterexample() {
    const double q = 2.0;
    const JointDistribution joint = remark1_joint();
    const Distribution flat = joint.flatten();

    const double lhs = aczel_daroczy(flat, q);
    const Distribution escort_marginal = escort(joint.marginal(), q);
    double conditional = 0.0;
    for (std::size_t i = 0; i < joint.rows(); ++i) {
        if (escort_marginal[i] == 0.0) continue;
        conditional += escort_marginal[i] * aczel_daroczy(*joint.conditional(i), q);
    }
    const double rhs = aczel_daroczy(joint.marginal(), q) + conditional;

    const Distribution escort_flat = escort(flat, q);
    AuditReport report{.axiom = "A4",
                       .family = EntropyFamily::JizbaKorbel,
                       .params = EntropyParams{.q = q},
                       .tolerance = 1e-9};
    report.lhs = lhs;
    report.rhs = rhs;
    // The decisive quantity lives in D-space: |h(4/3) - h(3/2)|.
    report.gap = std::abs(h_map(lhs, q) - h_map(rhs, q));
    report.holds = false;
    report.witness = joint_to_json(joint);
    report.witness["escort_r"] = {{escort_flat[0], escort_flat[1]},
                                  {escort_flat[2], escort_flat[3]}};
    report.witness["lhs_d_space"] = h_map(lhs, q);
    report.witness["rhs_d_space"] = h_map(rhs, q);
    return report;
}

std::vector<AuditReport> search_violations(const AuditSuiteConfig& config) {
    config.validate();
    static const std::vector<double> q_grid{0.5, 1.0, 2.0, 3.0};
    static const std::vector<double> tau_grid{-0.5, -1.0, -2.0};
    static const std::vector<double> lambda_grid{-1.0, 0.0, 1.0};

    const bool has_chain = config.family == EntropyFamily::Corrected ||
                           config.family == EntropyFamily::Nath ||
                           config.family == EntropyFamily::JizbaKorbel;
    const bool has_tau = config.family == EntropyFamily::Corrected ||
                         config.family == EntropyFamily::Nath;
    const bool has_lambda = config.family == EntropyFamily::GClass;

    std::vector<EntropyParams> cells;
    for (double q : q_grid) {
        if (has_tau) {
            for (double tau : tau_grid) cells.push_back({.q = q, .tau = tau});
        } else if (has_lambda) {
            for (double lambda : lambda_grid)
                cells.push_back({.q = q, .lambda = lambda});
        } else {
            cells.push_back({.q = q});
        }
    }

    std::vector<AuditReport> violations;
    std::uint64_t cell_index = 0;
    for (const EntropyParams& params : cells) {
        AuditSuiteConfig cell = config;
        cell.params = params;
        cell.seed = mix(config.seed, ++cell_index, 6);
        if (has_chain) {
            if (AuditReport r = check_chain_rule(cell); !r.holds)
                violations.push_back(std::move(r));
        }
        if (AuditReport r = check_composability(cell); !r.holds)
            violations.push_back(std::move(r));
    }
    std::stable_sort(violations.begin(), violations.end(),
                     [](const AuditReport& a, const AuditReport& b) { return a.gap > b.gap; });
    return violations;
}

} // namespace qentropy
