#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qentropy/errors.hpp"

namespace qentropy {

// Tolerance for "entries sum to 1" checks on construction.
inline constexpr double kNormalizationTol = 1e-9;

/// A validated point of the probability simplex. Immutable after construction.
class Distribution {
public:
    static Distribution make(std::span<const double> values, bool normalize = false);
    static Distribution make(std::initializer_list<double> values, bool normalize = false) {
        return make(std::span<const double>(values.begin(), values.size()), normalize);
    }
    /// Uniform distribution on n outcomes.
    static Distribution uniform(std::size_t n);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t k) const { return probs_[k]; }
    const std::vector<double>& probs() const { return probs_; }

    auto begin() const { return probs_.begin(); }
    auto end() const { return probs_.end(); }

private:
    explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}
    std::vector<double> probs_;

    friend Distribution direct_product(const Distribution&, const Distribution&);
    friend Distribution escort(const Distribution&, double);
    friend Distribution expand(const Distribution&);
    friend class JointDistribution;
};

/// An n x m joint probability matrix with cached marginal and conditional rows.
/// Conditional rows with zero marginal are left unset.
class JointDistribution {
public:
    static JointDistribution make(const std::vector<std::vector<double>>& matrix);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t i, std::size_t j) const { return r_[i * cols_ + j]; }

    const Distribution& marginal() const { return marginal_; }
    /// Conditional Q_{|i}; empty when the marginal p_i is zero.
    const std::optional<Distribution>& conditional(std::size_t i) const {
        return conditionals_[i];
    }

    /// Row-major flattening onto the simplex of dimension n*m.
    Distribution flatten() const;

    const std::vector<std::vector<double>>& matrix() const { return matrix_; }

private:
    JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> r,
                      std::vector<std::vector<double>> matrix, Distribution marginal,
                      std::vector<std::optional<Distribution>> conditionals)
        : rows_(rows), cols_(cols), r_(std::move(r)), matrix_(std::move(matrix)),
          marginal_(std::move(marginal)), conditionals_(std::move(conditionals)) {}

    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> r_;
    std::vector<std::vector<double>> matrix_;
    Distribution marginal_;
    std::vector<std::optional<Distribution>> conditionals_;
};

/// Parameters shared by all entropy families. alpha defaults to q when unset.
struct EntropyParams {
    double q = 1.0;
    double tau = -1.0;
    double lambda = 0.0;
    std::optional<double> alpha;

    double escort_exponent() const { return alpha.value_or(q); }
    void validate() const;
};

/// P * Q in row-major order (p_1 q_1, p_1 q_2, ..., p_n q_m).
Distribution direct_product(const Distribution& p, const Distribution& q);

/// q-escort re-weighting p_k^q / sum_i p_i^q, with 0^q := 0 for q > 0.
Distribution escort(const Distribution& p, double q);

/// P with one appended zero entry.
Distribution expand(const Distribution& p);

} // namespace qentropy
