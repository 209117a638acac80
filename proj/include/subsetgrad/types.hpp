#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "subsetgrad/errors.hpp"

namespace subsetgrad {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Binary inclusion vector z and its number of ones.
struct SubsetIndicator {
    std::vector<std::uint8_t> z;
    int ones = 0;

    SubsetIndicator() = default;
    explicit SubsetIndicator(std::vector<std::uint8_t> bits) : z(std::move(bits)) {
        for (auto b : z) ones += (b != 0);
    }
    static SubsetIndicator zeros(int p) {
        SubsetIndicator s;
        s.z.assign(static_cast<std::size_t>(p), 0);
        return s;
    }
    static SubsetIndicator from_indices(int p, const std::vector<int>& idx) {
        SubsetIndicator s = zeros(p);
        for (int j : idx) {
            if (!s.z[static_cast<std::size_t>(j)]) {
                s.z[static_cast<std::size_t>(j)] = 1;
                ++s.ones;
            }
        }
        return s;
    }
    int size() const { return static_cast<int>(z.size()); }
    void set(int j, bool on) {
        auto& b = z[static_cast<std::size_t>(j)];
        ones += int(on) - int(b != 0);
        b = on ? 1 : 0;
    }
    std::vector<int> active() const {
        std::vector<int> idx;
        idx.reserve(static_cast<std::size_t>(ones));
        for (int j = 0; j < size(); ++j)
            if (z[static_cast<std::size_t>(j)]) idx.push_back(j);
        return idx;
    }
    bool operator==(const SubsetIndicator& o) const { return z == o.z; }
};

/// Ground truth of a synthetic generating model.
struct TrueModel {
    Vector beta_star;
    double sigma = 0.0;
    std::vector<int> active_set;
    int S = 0;

    static TrueModel from_beta(Vector beta, double sigma) {
        TrueModel t;
        t.beta_star = std::move(beta);
        t.sigma = sigma;
        for (int j = 0; j < t.beta_star.size(); ++j)
            if (t.beta_star[j] != 0.0) t.active_set.push_back(j);
        t.S = static_cast<int>(t.active_set.size());
        return t;
    }
};

/// Closed-form population covariance of the covariates.
struct CovarianceModel {
    enum class Kind { Identity, Ar1 } kind = Kind::Identity;
    double rho = 0.0; // Ar1 only

    static CovarianceModel identity() { return {Kind::Identity, 0.0}; }
    static CovarianceModel ar1(double rho) { return {Kind::Ar1, rho}; }

    // q(a, b) = a' Sigma b, O(p) for both kinds.
    double quad(const Vector& a, const Vector& b) const {
        if (a.size() != b.size()) throw DimensionMismatch("covariance quad: size mismatch");
        if (kind == Kind::Identity || rho == 0.0) return a.dot(b);
        const auto p = a.size();
        // sum_i a_i b_i + sum_{i<j} rho^{j-i} (a_i b_j + a_j b_i)
        double total = a.dot(b);
        double ta = 0.0, tb = 0.0; // running rho-discounted prefix sums
        for (Eigen::Index j = 0; j < p; ++j) {
            if (j > 0) {
                ta = rho * (ta + a[j - 1]);
                tb = rho * (tb + b[j - 1]);
            }
            total += a[j] * tb + b[j] * ta;
        }
        return total;
    }
    double quad(const Vector& d) const { return quad(d, d); }
};

struct Dataset {
    Matrix X;
    Vector y;
    std::optional<TrueModel> truth;
    bool standardized = false;
    std::optional<int> intercept_col;
    // Set during standardization for columns with zero variance (left unscaled).
    std::vector<std::uint8_t> constant_cols;
    // Closed-form covariance when the data came from a generator.
    std::optional<CovarianceModel> covariance;

    int n() const { return static_cast<int>(X.rows()); }
    int p() const { return static_cast<int>(X.cols()); }

    void validate() const {
        if (X.rows() < 1 || X.cols() < 1) throw DimensionMismatch("dataset: need n >= 1, p >= 1");
        if (y.size() != X.rows()) throw DimensionMismatch("dataset: y length != rows of X");
    }
};

/// Objective selection plus its hyperparameters.
struct ObjectiveConfig {
    enum class Kind { Frequentist, Bayesian } kind = Kind::Frequentist;
    double lambda = 0.0;       // frequentist penalty weight
    double lambda0 = 0.0;      // Bayesian prior logit
    double sigma2 = 1.0;       // Bayesian noise variance
    double sigma_alpha2 = 1.0; // Bayesian slab variance

    static ObjectiveConfig frequentist(double lambda) {
        ObjectiveConfig c;
        c.kind = Kind::Frequentist;
        if (lambda < 0.0) throw Error("lambda must be >= 0");
        c.lambda = lambda;
        return c;
    }
    static ObjectiveConfig bayesian(double lambda0, double sigma2, double sigma_alpha2) {
        ObjectiveConfig c;
        c.kind = Kind::Bayesian;
        if (lambda0 < 0.0) throw Error("lambda0 must be >= 0");
        if (sigma2 <= 0.0 || sigma_alpha2 <= 0.0) throw Error("variances must be > 0");
        c.lambda0 = lambda0;
        c.sigma2 = sigma2;
        c.sigma_alpha2 = sigma_alpha2;
        return c;
    }
};

/// Result of least squares restricted to the active columns.
struct SubsetSolve {
    Vector alpha_hat; // length = number of active columns
    double rss = 0.0;
    int rank = 0;
    bool min_norm = false;
};

} // namespace subsetgrad
