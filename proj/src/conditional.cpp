#include "qentropy/conditional.hpp"

#include <cmath>
#include <vector>

namespace qentropy {

namespace {

// Escort weights over the marginal plus the per-row entropy values; rows with
// zero marginal carry zero escort weight and a placeholder value.
template <typename RowEntropy>
std::pair<std::vector<double>, Distribution> row_values(const JointDistribution& joint,
                                                        const EntropyParams& params,
                                                        RowEntropy&& row_entropy) {
    params.validate();
    Distribution weights = escort(joint.marginal(), params.escort_exponent());
    std::vector<double> values(joint.rows(), 0.0);
    for (std::size_t i = 0; i < joint.rows(); ++i) {
        if (weights[i] == 0.0) continue;
        values[i] = row_entropy(*joint.conditional(i));
    }
    return {std::move(values), std::move(weights)};
}

} // namespace

double conditional_corrected(const JointDistribution& joint, const EntropyParams& params) {
    auto [values, weights] = row_values(
        joint, params, [&](const Distribution& row) { return corrected(row, params); });
    return quasilinear_mean(values, weights, {DeformationMapKind::Fh, params});
}

double conditional_nath(const JointDistribution& joint, const EntropyParams& params) {
    auto [values, weights] = row_values(
        joint, params, [&](const Distribution& row) { return nath(row, params); });
    return quasilinear_mean(values, weights, {DeformationMapKind::F, params});
}

double conditional_jizba_korbel(const JointDistribution& joint,
                                const EntropyParams& params) {
    auto [values, weights] = row_values(joint, params, [&](const Distribution& row) {
        return jizba_korbel(row, params.q);
    });
    // f_h proportional to h^{-1}: the arithmetic escort mean taken in
    // Aczel-Daroczy space, mapped back through h.
    return quasilinear_mean(values, weights,
                            {DeformationMapKind::HInv, EntropyParams{.q = params.q}});
}

ChainRuleEvaluation chain_rule(const JointDistribution& joint, EntropyFamily family,
                               const EntropyParams& params) {
    params.validate();
    const Distribution flat = joint.flatten();
    ChainRuleEvaluation eval{};
    switch (family) {
        case EntropyFamily::Corrected:
            eval.joint_entropy = corrected(flat, params);
            eval.marginal_entropy = corrected(joint.marginal(), params);
            eval.conditional_entropy = conditional_corrected(joint, params);
            break;
        case EntropyFamily::Nath:
            eval.joint_entropy = nath(flat, params);
            eval.marginal_entropy = nath(joint.marginal(), params);
            eval.conditional_entropy = conditional_nath(joint, params);
            break;
        case EntropyFamily::JizbaKorbel:
            eval.joint_entropy = jizba_korbel(flat, params.q);
            eval.marginal_entropy = jizba_korbel(joint.marginal(), params.q);
            eval.conditional_entropy = conditional_jizba_korbel(joint, params);
            break;
        default:
            throw invalid_parameter("chain_rule supports corrected, nath, jizba-korbel");
    }
    eval.combined =
        compose(family, eval.marginal_entropy, eval.conditional_entropy, params);
    eval.gap = std::abs(eval.joint_entropy - eval.combined);
    return eval;
}

} // namespace qentropy
