#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridsvm/kernel.hpp"
#include "gridsvm/types.hpp"

namespace gridsvm::svm {

struct SvmTrainConfig {
    double c = 1.0;           // soft-margin penalty
    double tol = 1e-3;        // KKT tolerance
    int max_iter = 15000;     // cap on outer passes
    kernel::KernelSpec kernel_spec;

    void validate() const;
};

// Optional per-step instrumentation. Recording the dual objective costs
// O(m^2) per accepted step; keep it off outside tests.
struct SmoDiagnostics {
    bool record_objective = false;
    std::vector<double> objective_after_step;
    std::vector<double> equality_residual_after_step;  // sum alpha_i y_i
    std::vector<double> alpha_bound_excess_after_step;  // max distance outside [0,c]
};

struct SvmModel {
    kernel::KernelSpec kernel_spec;
    std::vector<FeatureVector> support_vectors;
    std::vector<double> coefficients;  // alpha_i * y_i per support vector
    std::vector<int> sv_indices;       // positions in the training dataset
    double bias = 0.0;

    // training metadata
    double c = 0.0;
    double tol = 0.0;
    int iterations_used = 0;       // outer passes over the candidate set
    std::int64_t pair_updates = 0; // accepted two-multiplier steps
    bool converged = false;
    double final_kkt_violation = 0.0;
};

// Solves the soft-margin dual by sequential minimal optimization. Requires
// both classes present and finite features. Hitting max_iter returns the
// partial model with converged=false rather than throwing.
SvmModel train(const Dataset& dataset, const SvmTrainConfig& cfg,
               SmoDiagnostics* diagnostics = nullptr);

// f(x) = sum_i coeff_i k(sv_i, x) + bias
double decision_value(const SvmModel& model, const FeatureVector& x);

// sign(f(x)); exact zero maps to +1 (predict outage on ties).
int predict(const SvmModel& model, const FeatureVector& x);

// Dual objective: sum alpha_i - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
double dual_objective(std::span<const double> alphas, std::span<const int> labels,
                      const kernel::GramMatrix& gram);

// Max over samples of the KKT violation:
//   alpha   = 0: max(0, 1 - y f)
//   0<alpha<c:   |y f - 1|
//   alpha   = c: max(0, y f - 1)
// A converged model reports a value <= cfg.tol.
double kkt_max_violation(const SvmModel& model, const Dataset& dataset,
                         const SvmTrainConfig& cfg);

}  // namespace gridsvm::svm
