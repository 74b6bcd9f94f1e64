#include "qentropy/distribution.hpp"

#include <cmath>
#include <numeric>

namespace qentropy {

namespace {

void check_entries(std::span<const double> values) {
    for (double v : values) {
        if (!(v >= 0.0)) {
            throw negative_probability("probability entry is negative or NaN: " +
                                       std::to_string(v));
        }
    }
}

} // namespace

Distribution Distribution::make(std::span<const double> values, bool normalize) {
    if (values.empty()) {
        throw empty_input("distribution requires at least one entry");
    }
    check_entries(values);
    std::vector<double> probs(values.begin(), values.end());
    const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (normalize) {
        if (sum <= 0.0) {
            throw not_normalized("cannot normalize an all-zero input");
        }
        for (double& v : probs) v /= sum;
    } else if (std::abs(sum - 1.0) > kNormalizationTol) {
        throw not_normalized("entries sum to " + std::to_string(sum) + ", expected 1");
    }
    return Distribution(std::move(probs));
}

Distribution Distribution::uniform(std::size_t n) {
    if (n == 0) throw empty_input("uniform distribution requires n >= 1");
    return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

JointDistribution JointDistribution::make(const std::vector<std::vector<double>>& matrix) {
    if (matrix.empty() || matrix.front().empty()) {
        throw empty_input("joint distribution requires a nonempty matrix");
    }
    const std::size_t n = matrix.size();
    const std::size_t m = matrix.front().size();
    std::vector<double> r;
    r.reserve(n * m);
    for (const auto& row : matrix) {
        if (row.size() != m) {
            throw ragged_matrix("joint matrix rows have unequal lengths");
        }
        check_entries(row);
        r.insert(r.end(), row.begin(), row.end());
    }
    const double sum = std::accumulate(r.begin(), r.end(), 0.0);
    if (std::abs(sum - 1.0) > kNormalizationTol) {
        throw not_normalized("joint entries sum to " + std::to_string(sum) +
                             ", expected 1");
    }

    std::vector<double> marginal(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) marginal[i] += r[i * m + j];
    }
    std::vector<std::optional<Distribution>> conditionals(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (marginal[i] > 0.0) {
            std::vector<double> row(m);
            for (std::size_t j = 0; j < m; ++j) row[j] = r[i * m + j] / marginal[i];
            conditionals[i] = Distribution(std::move(row));
        }
    }
    return JointDistribution(n, m, std::move(r), matrix, Distribution(std::move(marginal)),
                             std::move(conditionals));
}

Distribution JointDistribution::flatten() const {
    return Distribution(r_);
}

void EntropyParams::validate() const {
    if (!(q > 0.0)) throw invalid_parameter("q must be > 0");
    if (!(tau < 0.0)) throw invalid_parameter("tau must be < 0");
    if (!std::isfinite(lambda)) throw invalid_parameter("lambda must be finite");
    if (alpha && !(*alpha > 0.0)) throw invalid_parameter("alpha must be > 0");
}

Distribution direct_product(const Distribution& p, const Distribution& q) {
    std::vector<double> out;
    out.reserve(p.size() * q.size());
    for (double pi : p) {
        for (double qj : q) out.push_back(pi * qj);
    }
    return Distribution(std::move(out));
}

Distribution escort(const Distribution& p, double q) {
    if (!(q > 0.0)) throw invalid_parameter("escort exponent must be > 0");
    if (q == 1.0) return p;
    std::vector<double> out(p.size(), 0.0);
    double z = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] > 0.0) {
            out[k] = std::pow(p[k], q);
            z += out[k];
        }
    }
    for (double& v : out) v /= z;
    return Distribution(std::move(out));
}

Distribution expand(const Distribution& p) {
    std::vector<double> out = p.probs();
    out.push_back(0.0);
    return Distribution(std::move(out));
}

} // namespace qentropy
