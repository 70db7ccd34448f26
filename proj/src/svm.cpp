#include "gridsvm/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gridsvm::svm {

void SvmTrainConfig::validate() const {
    if (!(c > 0.0)) throw ConfigError("svm penalty c must be > 0");
    if (!(tol > 0.0)) throw ConfigError("svm tol must be > 0");
    if (max_iter < 1) throw ConfigError("svm max_iter must be >= 1");
    kernel_spec.validate();
}

namespace {

constexpr double kEtaFloor = 1e-12;   // skip pairs with degenerate curvature
constexpr double kMinStep = 1e-12;    // relative refusal threshold for tiny steps

class SmoSolver {
public:
    SmoSolver(const Dataset& dataset, const SvmTrainConfig& cfg, SmoDiagnostics* diag)
        : data_(dataset),
          cfg_(cfg),
          diag_(diag),
          m_(dataset.size()),
          features_(m_),
          labels_(m_),
          alpha_(m_, 0.0),
          error_(m_) {
        for (std::size_t i = 0; i < m_; ++i) {
            features_[i] = dataset[i].features;
            labels_[i] = dataset[i].state;
            error_[i] = -static_cast<double>(labels_[i]);  // f = 0 initially
        }
        gram_ = kernel::gram_matrix(cfg.kernel_spec, features_);
    }

    void run() {
        bool examine_all = true;
        int num_changed = 0;
        while (num_changed > 0 || examine_all) {
            if (outer_passes_ >= cfg_.max_iter) return;  // cap hit, partial model
            num_changed = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (examine_all || is_free(i)) num_changed += examine(i);
            }
            ++outer_passes_;
            if (examine_all) {
                examine_all = false;
            } else if (num_changed == 0) {
                examine_all = true;
            }
        }
        converged_ = true;
    }

    SvmModel extract_model() const {
        SvmModel model;
        model.kernel_spec = cfg_.kernel_spec;
        model.bias = bias_;
        model.c = cfg_.c;
        model.tol = cfg_.tol;
        model.iterations_used = outer_passes_;
        model.pair_updates = pair_updates_;
        model.converged = converged_;
        for (std::size_t i = 0; i < m_; ++i) {
            if (alpha_[i] > 0.0) {
                model.support_vectors.push_back(features_[i]);
                model.coefficients.push_back(alpha_[i] * labels_[i]);
                model.sv_indices.push_back(static_cast<int>(i));
            }
        }
        return model;
    }

private:
    bool is_free(std::size_t i) const { return alpha_[i] > 0.0 && alpha_[i] < cfg_.c; }

    int examine(std::size_t i2) {
        const double y2 = labels_[i2];
        const double alph2 = alpha_[i2];
        const double e2 = error_[i2];
        const double r2 = e2 * y2;
        const bool violates = (r2 < -cfg_.tol && alph2 < cfg_.c) || (r2 > cfg_.tol && alph2 > 0.0);
        if (!violates) return 0;

        // First choice: the free multiplier with the largest |E1 - E2| gap,
        // lowest index on ties.
        std::size_t best = m_;
        double best_gap = -1.0;
        for (std::size_t i1 = 0; i1 < m_; ++i1) {
            if (!is_free(i1)) continue;
            const double gap = std::abs(error_[i1] - e2);
            if (gap > best_gap) {
                best_gap = gap;
                best = i1;
            }
        }
        if (best < m_ && take_step(best, i2)) return 1;

        // Fallbacks: sequential scan of the free set, then of everything.
        for (std::size_t i1 = 0; i1 < m_; ++i1) {
            if (is_free(i1) && i1 != best && take_step(i1, i2)) return 1;
        }
        for (std::size_t i1 = 0; i1 < m_; ++i1) {
            if (!is_free(i1) && take_step(i1, i2)) return 1;
        }
        return 0;
    }

    bool take_step(std::size_t i1, std::size_t i2) {
        if (i1 == i2) return false;
        const double c = cfg_.c;
        const double alph1 = alpha_[i1];
        const double alph2 = alpha_[i2];
        const double y1 = labels_[i1];
        const double y2 = labels_[i2];
        const double e1 = error_[i1];
        const double e2 = error_[i2];
        const double s = y1 * y2;

        double lo, hi;
        if (labels_[i1] != labels_[i2]) {
            lo = std::max(0.0, alph2 - alph1);
            hi = std::min(c, c + alph2 - alph1);
        } else {
            lo = std::max(0.0, alph1 + alph2 - c);
            hi = std::min(c, alph1 + alph2);
        }
        if (hi - lo < kMinStep) return false;

        const double k11 = gram_(i1, i1);
        const double k12 = gram_(i1, i2);
        const double k22 = gram_(i2, i2);
        const double eta = k11 + k22 - 2.0 * k12;
        if (eta <= kEtaFloor) return false;

        double a2 = alph2 + y2 * (e1 - e2) / eta;
        if (a2 <= lo) {
            a2 = lo;
        } else if (a2 >= hi) {
            a2 = hi;
        }
        // Snap near-bound values before deriving a1, so the equality
        // constraint is preserved by construction.
        const double snap = 1e-8 * c;
        if (a2 < snap) {
            a2 = 0.0;
        } else if (a2 > c - snap) {
            a2 = c;
        }
        if (std::abs(a2 - alph2) < kMinStep * (a2 + alph2 + kMinStep)) return false;

        double a1 = alph1 + s * (alph2 - a2);
        if (a1 < 0.0) {
            a2 += s * a1;
            a1 = 0.0;
        } else if (a1 > c) {
            a2 += s * (a1 - c);
            a1 = c;
        }
        // Rounding in the compensation above can leave a2 an ulp outside the box.
        a2 = std::min(std::max(a2, 0.0), c);

        const double delta1 = a1 - alph1;
        const double delta2 = a2 - alph2;

        const double b1 = bias_ - e1 - y1 * delta1 * k11 - y2 * delta2 * k12;
        const double b2 = bias_ - e2 - y1 * delta1 * k12 - y2 * delta2 * k22;
        double new_bias;
        if (a1 > 0.0 && a1 < c) {
            new_bias = b1;
        } else if (a2 > 0.0 && a2 < c) {
            new_bias = b2;
        } else {
            new_bias = 0.5 * (b1 + b2);
        }
        const double delta_bias = new_bias - bias_;

        for (std::size_t i = 0; i < m_; ++i) {
            error_[i] += y1 * delta1 * gram_(i1, i) + y2 * delta2 * gram_(i2, i) + delta_bias;
        }
        alpha_[i1] = a1;
        alpha_[i2] = a2;
        bias_ = new_bias;
        ++pair_updates_;

        if (diag_) record_diagnostics();
        return true;
    }

    void record_diagnostics() {
        double residual = 0.0;
        double excess = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            residual += alpha_[i] * labels_[i];
            excess = std::max(excess, std::max(-alpha_[i], alpha_[i] - cfg_.c));
        }
        diag_->equality_residual_after_step.push_back(residual);
        diag_->alpha_bound_excess_after_step.push_back(std::max(excess, 0.0));
        if (diag_->record_objective) {
            diag_->objective_after_step.push_back(dual_objective(alpha_, labels_, gram_));
        }
    }

    const Dataset& data_;
    const SvmTrainConfig& cfg_;
    SmoDiagnostics* diag_;
    std::size_t m_;
    std::vector<FeatureVector> features_;
    std::vector<int> labels_;
    std::vector<double> alpha_;
    std::vector<double> error_;  // E_i = f(x_i) - y_i, maintained for all samples
    kernel::GramMatrix gram_;
    double bias_ = 0.0;
    int outer_passes_ = 0;
    std::int64_t pair_updates_ = 0;
    bool converged_ = false;
};

void validate_dataset(const Dataset& dataset) {
    bool has_positive = false;
    bool has_negative = false;
    for (const LabeledSample& sample : dataset) {
        if (!sample.features.finite()) {
            throw DataError("dataset contains a non-finite feature value");
        }
        if (sample.state == 1) {
            has_positive = true;
        } else if (sample.state == -1) {
            has_negative = true;
        } else {
            throw DataError("sample state must be +1 or -1, got " + std::to_string(sample.state));
        }
    }
    if (!has_positive || !has_negative) {
        throw DataError("svm training requires at least one sample of each class");
    }
}

}  // namespace

SvmModel train(const Dataset& dataset, const SvmTrainConfig& cfg, SmoDiagnostics* diagnostics) {
    cfg.validate();
    validate_dataset(dataset);

    SmoSolver solver(dataset, cfg, diagnostics);
    solver.run();
    SvmModel model = solver.extract_model();
    model.final_kkt_violation = kkt_max_violation(model, dataset, cfg);
    return model;
}

double decision_value(const SvmModel& model, const FeatureVector& x) {
    double f = model.bias;
    for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
        f += model.coefficients[i] * kernel::kernel_eval(model.kernel_spec, model.support_vectors[i], x);
    }
    return f;
}

int predict(const SvmModel& model, const FeatureVector& x) {
    return decision_value(model, x) >= 0.0 ? 1 : -1;
}

double dual_objective(std::span<const double> alphas, std::span<const int> labels,
                      const kernel::GramMatrix& gram) {
    const std::size_t m = alphas.size();
    if (labels.size() != m || gram.size() != m) {
        throw DataError("dual_objective: alphas, labels, and gram sizes disagree");
    }
    double linear = 0.0;
    double quadratic = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        linear += alphas[i];
        const double scale_i = alphas[i] * labels[i];
        if (scale_i == 0.0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            quadratic += scale_i * alphas[j] * labels[j] * gram(i, j);
        }
    }
    return linear - 0.5 * quadratic;
}

double kkt_max_violation(const SvmModel& model, const Dataset& dataset,
                         const SvmTrainConfig& cfg) {
    std::vector<double> alpha(dataset.size(), 0.0);
    for (std::size_t k = 0; k < model.sv_indices.size(); ++k) {
        const int idx = model.sv_indices[k];
        if (idx < 0 || static_cast<std::size_t>(idx) >= dataset.size()) {
            throw DataError("model support-vector index outside the dataset");
        }
        alpha[static_cast<std::size_t>(idx)] = std::abs(model.coefficients[k]);
    }
    const double bound_eps = 1e-12 * cfg.c;
    double worst = 0.0;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const double margin = dataset[i].state * decision_value(model, dataset[i].features);
        double violation;
        if (alpha[i] <= bound_eps) {
            violation = std::max(0.0, 1.0 - margin);
        } else if (alpha[i] >= cfg.c - bound_eps) {
            violation = std::max(0.0, margin - 1.0);
        } else {
            violation = std::abs(margin - 1.0);
        }
        worst = std::max(worst, violation);
    }
    return worst;
}

}  // namespace gridsvm::svm
