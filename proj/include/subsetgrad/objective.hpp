#pragma once

#include <memory>

#include "subsetgrad/types.hpp"

namespace subsetgrad {

/// Active column indices of z, with the intercept column (when present)
/// always forced in.
std::vector<int> active_indices(const Dataset& data, const SubsetIndicator& z);

/// Number of active columns that count toward the L0 penalty (the intercept
/// is exempt).
int penalty_count(const Dataset& data, const SubsetIndicator& z);

/// Least squares of y on the active columns of X. Rank-deficient systems
/// (including ||z||_0 >= n) get the minimum-norm solution via a complete
/// orthogonal decomposition.
SubsetSolve solve_subset_ls(const Dataset& data, const SubsetIndicator& z);

/// Penalized least squares value rss(z)/n + lambda * ||z||_0.
double objective_freq(const Dataset& data, const SubsetIndicator& z, const ObjectiveConfig& cfg);

/// log N(y; 0, sigma2*I + sigma_alpha2 * X_z X_z'), evaluated through the
/// k x k inner matrix so cost scales with ||z||_0 rather than n^3.
double log_marginal(const Dataset& data, const SubsetIndicator& z, const ObjectiveConfig& cfg);

/// Negated evidence-bound integrand -[log_marginal + log p(z; lambda0) - log q(z)],
/// with q evaluated at state_probs held fixed for the draw.
double objective_vi(const Dataset& data, const SubsetIndicator& z, const Vector& state_probs,
                    const ObjectiveConfig& cfg);

// Cached-Gram evaluator for hot loops. Precomputes X'X, X'y, y'y once and
// answers objective values from k x k subproblems. Falls back to the
// orthogonal-decomposition path whenever the Gram factorization is not
// trustworthy (k >= n or a small pivot). Pure w.r.t. calls; safe to use
// concurrently.
class ObjectiveEvaluator {
public:
    ObjectiveEvaluator(const Dataset& data, const ObjectiveConfig& cfg);

    double value(const SubsetIndicator& z) const;
    // Bayesian value with an explicit probability snapshot (frozen per draw).
    double value(const SubsetIndicator& z, const Vector& state_probs) const;

    const Dataset& data() const { return *data_; }
    const ObjectiveConfig& config() const { return cfg_; }
    const Matrix& gram() const { return xtx_; }
    const Vector& xty() const { return xty_; }
    double yty() const { return yty_; }

    double rss(const SubsetIndicator& z) const;

private:
    const Dataset* data_;
    ObjectiveConfig cfg_;
    Matrix xtx_;
    Vector xty_;
    double yty_ = 0.0;
};

} // namespace subsetgrad
