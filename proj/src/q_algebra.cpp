#include "qentropy/q_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qentropy {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// 2^t - 1 and log2(1 + t) through expm1/log1p so that values near t = 0
// keep full precision.
double exp2m1(double t) { return std::expm1(t * kLn2); }
double log2p1(double t) { return std::log1p(t) / kLn2; }

} // namespace

double q_add(double u, double v, double q) {
    // (1-q)*(u*v) keeps the operation exactly commutative in floating point.
    return u + v + (1.0 - q) * (u * v);
}

double h_map(double x, double q) {
    if (is_classical(q)) return x;
    return exp2m1((1.0 - q) * x) / (1.0 - q);
}

double h_inv(double y, double q) {
    if (is_classical(q)) return y;
    const double arg = (1.0 - q) * y;
    if (arg <= -1.0) {
        throw domain_error("h_inv: (1-q)y + 1 = " + std::to_string(arg + 1.0) +
                           " is not positive");
    }
    return log2p1(arg) / (1.0 - q);
}

double f_map(double x, const EntropyParams& params) {
    if (is_classical(params.q)) return params.tau * x;
    return std::exp2((params.q - 1.0) * x / params.tau);
}

double f_inv(double y, const EntropyParams& params) {
    if (is_classical(params.q)) return y / params.tau;
    if (!(y > 0.0)) {
        throw domain_error("f_inv: argument must be positive, got " + std::to_string(y));
    }
    return params.tau * std::log2(y) / (params.q - 1.0);
}

double f_h_map(double x, const EntropyParams& params) {
    if (is_classical(params.q)) return params.tau * x;
    const double arg = (1.0 - params.q) * x;
    if (arg <= -1.0) {
        throw domain_error("f_h: (1-q)x + 1 = " + std::to_string(arg + 1.0) +
                           " is not positive");
    }
    return std::exp(-std::log1p(arg) / params.tau);
}

double f_h_inv(double y, const EntropyParams& params) {
    if (is_classical(params.q)) return y / params.tau;
    if (!(y > 0.0)) {
        throw domain_error("f_h_inv: argument must be positive, got " +
                           std::to_string(y));
    }
    return std::expm1(-params.tau * std::log(y)) / (1.0 - params.q);
}

double g_h_map(double x, const EntropyParams& params) {
    if (is_classical(params.q)) return params.tau * x;
    const double arg = (1.0 - params.q) * x;
    if (arg <= -1.0) {
        throw domain_error("g_h: (1-q)x + 1 = " + std::to_string(arg + 1.0) +
                           " is not positive");
    }
    return std::exp(std::log1p(arg) / params.tau);
}

double g_h_inv(double y, const EntropyParams& params) {
    if (is_classical(params.q)) return y / params.tau;
    if (!(y > 0.0)) {
        throw domain_error("g_h_inv: argument must be positive, got " +
                           std::to_string(y));
    }
    return std::expm1(params.tau * std::log(y)) / (1.0 - params.q);
}

double DeformationMap::apply(double x) const {
    switch (kind) {
        case DeformationMapKind::H: return h_map(x, params.q);
        case DeformationMapKind::HInv: return h_inv(x, params.q);
        case DeformationMapKind::F: return f_map(x, params);
        case DeformationMapKind::FInv: return f_inv(x, params);
        case DeformationMapKind::Fh: return f_h_map(x, params);
        case DeformationMapKind::FhInv: return f_h_inv(x, params);
        case DeformationMapKind::Gh: return g_h_map(x, params);
        case DeformationMapKind::GhInv: return g_h_inv(x, params);
    }
    throw invalid_parameter("unknown deformation map kind");
}

double DeformationMap::invert(double y) const {
    switch (kind) {
        case DeformationMapKind::H: return h_inv(y, params.q);
        case DeformationMapKind::HInv: return h_map(y, params.q);
        case DeformationMapKind::F: return f_inv(y, params);
        case DeformationMapKind::FInv: return f_map(y, params);
        case DeformationMapKind::Fh: return f_h_inv(y, params);
        case DeformationMapKind::FhInv: return f_h_map(y, params);
        case DeformationMapKind::Gh: return g_h_inv(y, params);
        case DeformationMapKind::GhInv: return g_h_map(y, params);
    }
    throw invalid_parameter("unknown deformation map kind");
}

double quasilinear_mean(std::span<const double> values, const Distribution& weights,
                        const DeformationMap& map) {
    if (values.size() != weights.size()) {
        throw length_mismatch("quasilinear_mean: " + std::to_string(values.size()) +
                              " values vs " + std::to_string(weights.size()) +
                              " weights");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] == 0.0) continue;
        acc += weights[i] * map.apply(values[i]);
    }
    return map.invert(acc);
}

} // namespace qentropy
