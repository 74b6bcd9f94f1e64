#pragma once

#include <span>

#include "qentropy/distribution.hpp"

namespace qentropy {

// q = 1 formulas take over inside this band; the q != 1 branches cancel
// catastrophically as q -> 1.
inline constexpr double kQBranchTol = 1e-8;

inline bool is_classical(double q) { return std::abs(q - 1.0) <= kQBranchTol; }

/// Deformed addition u + v + (1-q)uv; ordinary addition at q = 1.
double q_add(double u, double v, double q);

/// h(x) = (2^{(1-q)x} - 1)/(1-q), identity at q = 1.
double h_map(double x, double q);
/// h^{-1}(y) = log2((1-q)y + 1)/(1-q); requires (1-q)y + 1 > 0.
double h_inv(double y, double q);

/// f(x) = 2^{(q-1)x/tau}, tau*x at q = 1.
double f_map(double x, const EntropyParams& params);
double f_inv(double y, const EntropyParams& params);

/// f_h(x) = ((1-q)x + 1)^{-1/tau}, tau*x at q = 1. Requires (1-q)x + 1 > 0.
double f_h_map(double x, const EntropyParams& params);
double f_h_inv(double y, const EntropyParams& params);

/// g_h(x) = ((1-q)x + 1)^{1/tau}, tau*x at q = 1.
double g_h_map(double x, const EntropyParams& params);
double g_h_inv(double y, const EntropyParams& params);

enum class DeformationMapKind { H, HInv, F, FInv, Fh, FhInv, Gh, GhInv };

/// One of the paper's deformation maps together with its parameters.
/// apply() evaluates the map, invert() its inverse.
struct DeformationMap {
    DeformationMapKind kind;
    EntropyParams params;

    double apply(double x) const;
    double invert(double y) const;
};

/// map^{-1}(sum_i w_i map(v_i)); zero-weight terms are skipped.
double quasilinear_mean(std::span<const double> values, const Distribution& weights,
                        const DeformationMap& map);

} // namespace qentropy
