#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qentropy/conditional.hpp"
#include "qentropy/distribution.hpp"
#include "qentropy/entropy.hpp"

namespace qentropy {

/// Outcome of one axiom check. Serializes to the report JSON schema.
struct AuditReport {
    std::string axiom;
    EntropyFamily family;
    EntropyParams params;
    nlohmann::json witness;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    bool holds = true;
    double tolerance = 0.0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
};

struct AuditSuiteConfig {
    EntropyFamily family = EntropyFamily::Corrected;
    EntropyParams params;
    std::size_t trials = 1000;
    std::size_t max_n = 5;
    std::size_t max_m = 5;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;

    void validate() const;
};

nlohmann::json distribution_to_json(const Distribution& p);
Distribution distribution_from_json(const nlohmann::json& j, bool normalize = false);
nlohmann::json joint_to_json(const JointDistribution& joint);
JointDistribution joint_from_json(const nlohmann::json& j);

/// Uniform sample from the simplex, reproducible per (seed, trial) pair
/// independently of evaluation order.
Distribution sample_distribution(std::uint64_t seed, std::uint64_t trial, std::size_t n);
JointDistribution sample_joint(std::uint64_t seed, std::uint64_t trial, std::size_t n,
                               std::size_t m);

/// [A2]: largest value at the uniform distribution. Random sampling plus
/// near-vertex probes, per n in {2..max_n}.
AuditReport check_maximality(const AuditSuiteConfig& config);

/// [A3]: appending a zero outcome leaves the entropy unchanged.
AuditReport check_expandability(const AuditSuiteConfig& config);

/// [A4]/[B4]: generalized additivity over random joints. The Remark-1 joint
/// is always injected as trial 0 for the Jizba-Korbel family.
AuditReport check_chain_rule(const AuditSuiteConfig& config);

/// [C3]: composability over direct products of random pairs.
AuditReport check_composability(const AuditSuiteConfig& config);

/// [A5]/[C4]: value h(1) on the fair coin.
AuditReport check_normalization(EntropyFamily family, const EntropyParams& params);

/// [C1]: oplus_q-additivity of the information content over random pairs in
/// (0,1], plus monotone decrease on a grid.
AuditReport check_info_additivity(double q, std::size_t trials, std::uint64_t seed);

/// The exact Remark-1 instance at q = 2: 4/3 vs 3/2 in Aczel-Daroczy space.
/// The verdict is always "violated".
AuditReport reproduce_counterexample();

/// Chain-rule and composability checks over the parameter grid, sorted by
/// gap descending. Deterministic for a fixed seed.
std::vector<AuditReport> search_violations(const AuditSuiteConfig& config);

/// The P/R instance from the paper's counterexample.
JointDistribution remark1_joint();

} // namespace qentropy
