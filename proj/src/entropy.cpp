#include "qentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qentropy {

namespace {

double log2_sum_powers(const Distribution& p, double exponent) {
    // log2(sum_k p_k^exponent) over the support, evaluated as a log-sum-exp
    // when small entries would underflow the direct sum.
    double direct = 0.0;
    double min_pos = 1.0;
    for (double v : p) {
        if (v > 0.0) {
            direct += std::pow(v, exponent);
            min_pos = std::min(min_pos, v);
        }
    }
    if (min_pos >= 1e-6 || exponent >= 0.0) return std::log2(direct);
    double max_log = -std::numeric_limits<double>::infinity();
    for (double v : p) {
        if (v > 0.0) max_log = std::max(max_log, exponent * std::log2(v));
    }
    double acc = 0.0;
    for (double v : p) {
        if (v > 0.0) acc += std::exp2(exponent * std::log2(v) - max_log);
    }
    return max_log + std::log2(acc);
}

} // namespace

std::string family_name(EntropyFamily family) {
    switch (family) {
        case EntropyFamily::Shannon: return "shannon";
        case EntropyFamily::Nath: return "nath";
        case EntropyFamily::Corrected: return "corrected";
        case EntropyFamily::JizbaKorbel: return "jizba-korbel";
        case EntropyFamily::AczelDaroczy: return "aczel-daroczy";
        case EntropyFamily::Tsallis: return "tsallis";
        case EntropyFamily::GClass: return "g-class";
    }
    throw invalid_parameter("unknown entropy family");
}

EntropyFamily family_from_name(const std::string& name) {
    if (name == "shannon") return EntropyFamily::Shannon;
    if (name == "nath") return EntropyFamily::Nath;
    if (name == "corrected") return EntropyFamily::Corrected;
    if (name == "jizba-korbel") return EntropyFamily::JizbaKorbel;
    if (name == "aczel-daroczy") return EntropyFamily::AczelDaroczy;
    if (name == "tsallis") return EntropyFamily::Tsallis;
    if (name == "g-class") return EntropyFamily::GClass;
    throw invalid_parameter("unknown entropy family: " + name);
}

double shannon(const Distribution& p) {
    double acc = 0.0;
    for (double v : p) {
        if (v > 0.0) acc -= v * std::log2(v);
    }
    return acc;
}

double nath(const Distribution& p, const EntropyParams& params) {
    params.validate();
    if (is_classical(params.q)) return -params.tau * shannon(p);
    return params.tau / (params.q - 1.0) * log2_sum_powers(p, params.q);
}

double corrected(const Distribution& p, const EntropyParams& params) {
    return h_map(nath(p, params), params.q);
}

double aczel_daroczy(const Distribution& p, double q) {
    if (!(q > 0.0)) throw invalid_parameter("q must be > 0");
    const Distribution w = escort(p, q);
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (w[k] > 0.0) acc -= w[k] * std::log2(p[k]);
    }
    return acc;
}

double jizba_korbel(const Distribution& p, double q) {
    // Factored through h to avoid the product form's extreme exponents.
    return h_map(aczel_daroczy(p, q), q);
}

double tsallis(const Distribution& p, double q) {
    return corrected(p, EntropyParams{.q = q, .tau = -1.0});
}

double g_class(const Distribution& p, double q, double lambda) {
    if (!(q > 0.0)) throw invalid_parameter("q must be > 0");
    if (lambda == 0.0) return jizba_korbel(p, q);
    // sum_k p_k^{(q)} p_k^{-lambda} = sum_k p_k^{q-lambda} / sum_k p_k^q
    const double x = (log2_sum_powers(p, q - lambda) - log2_sum_powers(p, q)) / lambda;
    return h_map(x, q);
}

double info_content(double p, double q) {
    if (!(p > 0.0) || p > 1.0) {
        throw domain_error("info_content: p must lie in (0, 1]");
    }
    return h_map(-std::log2(p), q);
}

double evaluate(EntropyFamily family, const Distribution& p, const EntropyParams& params) {
    switch (family) {
        case EntropyFamily::Shannon: return shannon(p);
        case EntropyFamily::Nath: return nath(p, params);
        case EntropyFamily::Corrected: return corrected(p, params);
        case EntropyFamily::JizbaKorbel: return jizba_korbel(p, params.q);
        case EntropyFamily::AczelDaroczy: return aczel_daroczy(p, params.q);
        case EntropyFamily::Tsallis: return tsallis(p, params.q);
        case EntropyFamily::GClass: return g_class(p, params.q, params.lambda);
    }
    throw invalid_parameter("unknown entropy family");
}

double compose(EntropyFamily family, double a, double b, const EntropyParams& params) {
    switch (family) {
        case EntropyFamily::Shannon:
        case EntropyFamily::Nath:
        case EntropyFamily::AczelDaroczy:
            return a + b;
        case EntropyFamily::Corrected:
        case EntropyFamily::JizbaKorbel:
        case EntropyFamily::Tsallis:
        case EntropyFamily::GClass:
            return q_add(a, b, params.q);
    }
    throw invalid_parameter("unknown entropy family");
}

} // namespace qentropy
