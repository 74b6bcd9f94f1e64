#pragma once

#include "qentropy/distribution.hpp"
#include "qentropy/entropy.hpp"

namespace qentropy {

/// Both sides of the generalized chain rule for one joint distribution.
struct ChainRuleEvaluation {
    double joint_entropy;       // LHS, entropy of the flattened joint
    double marginal_entropy;    // entropy of P
    double conditional_entropy; // escort-weighted quasi-linear mean over rows
    double combined;            // RHS under the family's composition law
    double gap;                 // |joint_entropy - combined|
};

/// f_h-quasi-linear mean of corrected(Q_{|i}) under escort(P, alpha) weights.
/// Rows with zero marginal are skipped.
double conditional_corrected(const JointDistribution& joint, const EntropyParams& params);

/// f-quasi-linear mean of nath(Q_{|i}); equals h_inv(conditional_corrected).
double conditional_nath(const JointDistribution& joint, const EntropyParams& params);

/// h-image of the escort-weighted arithmetic mean of the Aczel-Daroczy row
/// entropies. This is the conditional form the Jizba-Korbel family would need
/// for the chain rule, and the one the chain rule fails on.
double conditional_jizba_korbel(const JointDistribution& joint, const EntropyParams& params);

/// Evaluates joint, marginal, conditional, and the composed RHS for the
/// family's chain rule. Supported families: Corrected, Nath, JizbaKorbel.
ChainRuleEvaluation chain_rule(const JointDistribution& joint, EntropyFamily family,
                               const EntropyParams& params);

} // namespace qentropy
