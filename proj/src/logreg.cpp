#include "gridsvm/logreg.hpp"

#include <cmath>

namespace gridsvm::logreg {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double log_sigmoid(double z) {
    if (z >= 0.0) {
        return -std::log1p(std::exp(-z));
    }
    return z - std::log1p(std::exp(z));
}

double dot_basis(const Basis& a, const Basis& b) {
    double sum = 0.0;
    for (int i = 0; i < kBasisSize; ++i) sum += a[i] * b[i];
    return sum;
}

// Cholesky solve of the (SPD) 20x20 Newton system.
Basis solve_spd(std::array<double, kBasisSize * kBasisSize> a, Basis b) {
    constexpr int n = kBasisSize;
    for (int j = 0; j < n; ++j) {
        double diag = a[j * n + j];
        for (int k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
        if (!(diag > 0.0)) throw DataError("logreg Newton system is not positive definite");
        diag = std::sqrt(diag);
        a[j * n + j] = diag;
        for (int i = j + 1; i < n; ++i) {
            double v = a[i * n + j];
            for (int k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = v / diag;
        }
    }
    for (int i = 0; i < n; ++i) {
        double v = b[i];
        for (int k = 0; k < i; ++k) v -= a[i * n + k] * b[k];
        b[i] = v / a[i * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double v = b[i];
        for (int k = i + 1; k < n; ++k) v -= a[k * n + i] * b[k];
        b[i] = v / a[i * n + i];
    }
    return b;
}

void validate_dataset(const Dataset& dataset) {
    bool has_positive = false;
    bool has_negative = false;
    for (const LabeledSample& s : dataset) {
        if (!s.features.finite()) throw DataError("dataset contains a non-finite feature value");
        if (s.state == 1) {
            has_positive = true;
        } else if (s.state == -1) {
            has_negative = true;
        } else {
            throw DataError("sample state must be +1 or -1");
        }
    }
    if (!has_positive || !has_negative) {
        throw DataError("logreg training requires at least one sample of each class");
    }
}

}  // namespace

Basis polynomial_expand(const FeatureVector& x) {
    Basis out;
    int idx = 0;
    for (int total = 0; total <= 3; ++total) {
        for (int p = total; p >= 0; --p) {
            for (int q = total - p; q >= 0; --q) {
                const int r = total - p - q;
                double value = 1.0;
                for (int k = 0; k < p; ++k) value *= x.resilience;
                for (int k = 0; k < q; ++k) value *= x.distance;
                for (int k = 0; k < r; ++k) value *= x.intensity;
                out[idx++] = value;
            }
        }
    }
    return out;
}

void LogRegTrainConfig::validate() const {
    if (!(lambda >= 0.0)) throw ConfigError("logreg lambda must be >= 0");
    if (!(grad_tol > 0.0)) throw ConfigError("logreg grad_tol must be > 0");
    if (max_iter < 1) throw ConfigError("logreg max_iter must be >= 1");
}

double penalized_log_likelihood(const Basis& weights, const Dataset& dataset, double lambda) {
    double ll = 0.0;
    for (const LabeledSample& s : dataset) {
        const Basis phi = polynomial_expand(s.features);
        ll += log_sigmoid(s.state * dot_basis(weights, phi));
    }
    return ll - 0.5 * lambda * dot_basis(weights, weights);
}

Basis penalized_gradient(const Basis& weights, const Dataset& dataset, double lambda) {
    Basis grad{};
    for (const LabeledSample& s : dataset) {
        const Basis phi = polynomial_expand(s.features);
        const double w = s.state * sigmoid(-s.state * dot_basis(weights, phi));
        for (int i = 0; i < kBasisSize; ++i) grad[i] += w * phi[i];
    }
    for (int i = 0; i < kBasisSize; ++i) grad[i] -= lambda * weights[i];
    return grad;
}

LogRegModel train_logreg(const Dataset& dataset, const LogRegTrainConfig& cfg,
                         LogRegDiagnostics* diagnostics) {
    cfg.validate();
    validate_dataset(dataset);

    std::vector<Basis> phi;
    phi.reserve(dataset.size());
    for (const LabeledSample& s : dataset) phi.push_back(polynomial_expand(s.features));

    LogRegModel model;
    model.lambda = cfg.lambda;
    double objective = penalized_log_likelihood(model.weights, dataset, cfg.lambda);

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const Basis grad = penalized_gradient(model.weights, dataset, cfg.lambda);
        const double grad_norm = std::sqrt(dot_basis(grad, grad));
        model.final_grad_norm = grad_norm;
        if (grad_norm <= cfg.grad_tol) {
            model.converged = true;
            return model;
        }

        std::array<double, kBasisSize * kBasisSize> hessian{};
        for (std::size_t n = 0; n < dataset.size(); ++n) {
            const double z = dot_basis(model.weights, phi[n]);
            const double p = sigmoid(z);
            const double s = p * (1.0 - p);
            for (int i = 0; i < kBasisSize; ++i) {
                const double si = s * phi[n][i];
                for (int j = 0; j <= i; ++j) hessian[i * kBasisSize + j] += si * phi[n][j];
            }
        }
        for (int i = 0; i < kBasisSize; ++i) {
            hessian[i * kBasisSize + i] += cfg.lambda;
            for (int j = i + 1; j < kBasisSize; ++j) {
                hessian[i * kBasisSize + j] = hessian[j * kBasisSize + i];
            }
        }
        const Basis direction = solve_spd(hessian, grad);

        // Armijo backtracking on the penalized log-likelihood.
        const double slope = dot_basis(grad, direction);
        double step = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 60; ++halving) {
            Basis candidate = model.weights;
            for (int i = 0; i < kBasisSize; ++i) candidate[i] += step * direction[i];
            const double cand_obj = penalized_log_likelihood(candidate, dataset, cfg.lambda);
            if (cand_obj >= objective + 1e-4 * step * slope) {
                model.weights = candidate;
                objective = cand_obj;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        model.iterations_used = iter + 1;
        if (!accepted) break;  // numerical floor reached
        if (diagnostics) diagnostics->objective_after_step.push_back(objective);
    }

    const Basis grad = penalized_gradient(model.weights, dataset, cfg.lambda);
    model.final_grad_norm = std::sqrt(dot_basis(grad, grad));
    model.converged = model.final_grad_norm <= cfg.grad_tol;
    return model;
}

std::pair<double, int> predict_logreg(const LogRegModel& model, const FeatureVector& x) {
    const double probability = sigmoid(dot_basis(model.weights, polynomial_expand(x)));
    return {probability, probability >= 0.5 ? 1 : -1};
}

}  // namespace gridsvm::logreg
