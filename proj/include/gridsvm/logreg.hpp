#pragma once

#include <array>
#include <utility>
#include <vector>

#include "gridsvm/types.hpp"

namespace gridsvm::logreg {

// All 20 monomials of total degree <= 3 over the 3 features.
constexpr int kBasisSize = 20;
using Basis = std::array<double, kBasisSize>;

// Graded order: degree 0 first (the constant 1), then within each total
// degree D the exponent triples (p,q,r) of (resilience, distance, intensity)
// with p from D down to 0, q from D-p down to 0, r = D-p-q.
Basis polynomial_expand(const FeatureVector& x);

struct LogRegTrainConfig {
    double lambda = 1e-4;     // L2 penalty on all coefficients
    double grad_tol = 1e-6;   // gradient-norm stopping threshold
    int max_iter = 500;       // Newton iteration cap

    void validate() const;
};

struct LogRegModel {
    Basis weights{};
    int iterations_used = 0;
    bool converged = false;
    double final_grad_norm = 0.0;
    double lambda = 0.0;
};

struct LogRegDiagnostics {
    std::vector<double> objective_after_step;  // penalized log-likelihood
};

// Penalized log-likelihood sum_i log sigma(y_i w.phi(x_i)) - lambda/2 |w|^2
// and its gradient, exposed for verification.
double penalized_log_likelihood(const Basis& weights, const Dataset& dataset, double lambda);
Basis penalized_gradient(const Basis& weights, const Dataset& dataset, double lambda);

// Newton ascent (equivalently IRLS) with backtracking line search from zero
// initialization; deterministic. Requires both classes present.
LogRegModel train_logreg(const Dataset& dataset, const LogRegTrainConfig& cfg = {},
                         LogRegDiagnostics* diagnostics = nullptr);

// (P(state = +1 | x), label); probability >= 0.5 maps to +1.
std::pair<double, int> predict_logreg(const LogRegModel& model, const FeatureVector& x);

}  // namespace gridsvm::logreg
