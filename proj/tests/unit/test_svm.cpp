#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "gridsvm/datagen.hpp"
#include "gridsvm/rng.hpp"
#include "gridsvm/svm.hpp"
#include "../support/qp_oracle.hpp"

using namespace gridsvm;
using namespace gridsvm::svm;

namespace {

Dataset two_point_data() {
    return {{{0, 0, 0}, -1}, {{1, 0, 0}, +1}};
}

SvmTrainConfig config(kernel::KernelSpec spec, double c, double tol = 1e-3) {
    SvmTrainConfig cfg;
    cfg.kernel_spec = spec;
    cfg.c = c;
    cfg.tol = tol;
    return cfg;
}

Dataset random_dataset(std::size_t m, Rng& rng) {
    Dataset data;
    for (std::size_t i = 0; i < m; ++i) {
        const int label = i < m / 2 ? -1 : +1;  // both classes guaranteed
        data.push_back({{uniform01(rng), uniform01(rng), uniform01(rng)}, label});
    }
    return data;
}

// Dual objective of a trained model, reconstructed over the training set.
double model_dual_objective(const SvmModel& model, const Dataset& data) {
    std::vector<double> alpha(data.size(), 0.0);
    std::vector<int> labels;
    std::vector<FeatureVector> features;
    for (const auto& s : data) {
        labels.push_back(s.state);
        features.push_back(s.features);
    }
    for (std::size_t k = 0; k < model.sv_indices.size(); ++k) {
        alpha[static_cast<std::size_t>(model.sv_indices[k])] = std::abs(model.coefficients[k]);
    }
    return dual_objective(alpha, labels, kernel::gram_matrix(model.kernel_spec, features));
}

}  // namespace

TEST_CASE("two-point problem recovers the perpendicular bisector") {
    const Dataset data = two_point_data();
    const SvmModel model = train(data, config(kernel::KernelSpec::linear(), 100.0));

    CHECK(model.converged);
    CHECK(decision_value(model, {0.5, 0, 0}) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(decision_value(model, {1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(decision_value(model, {0, 0, 0}) == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(predict(model, {0.9, 0, 0}) == +1);
    CHECK(predict(model, {0.1, 0, 0}) == -1);
    CHECK(kkt_max_violation(model, data, config(kernel::KernelSpec::linear(), 100.0)) ==
          doctest::Approx(0.0).epsilon(1e-9));

    // alpha_1 = alpha_2 = 2 at the analytic optimum
    REQUIRE(model.support_vectors.size() == 2);
    CHECK(model.coefficients[0] == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(model.coefficients[1] == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(model.bias == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("stored model invariants") {
    Rng rng(31);
    const Dataset data = random_dataset(24, rng);
    const SvmTrainConfig cfg = config(kernel::KernelSpec::gaussian(0.5), 1.0);
    const SvmModel model = train(data, cfg);

    double coeff_sum = 0.0;
    for (std::size_t k = 0; k < model.coefficients.size(); ++k) {
        const double alpha = std::abs(model.coefficients[k]);
        CHECK(alpha > 0.0);
        CHECK(alpha <= cfg.c);
        coeff_sum += model.coefficients[k];  // sum alpha_i y_i
    }
    CHECK(std::abs(coeff_sum) <= 1e-6);

    // free support vectors sit on the margin within tol
    for (std::size_t k = 0; k < model.coefficients.size(); ++k) {
        const double alpha = std::abs(model.coefficients[k]);
        if (alpha > 1e-8 && alpha < cfg.c - 1e-8) {
            const int idx = model.sv_indices[k];
            const double margin =
                data[static_cast<std::size_t>(idx)].state * decision_value(model, model.support_vectors[k]);
            CHECK(margin == doctest::Approx(1.0).epsilon(cfg.tol * 2));
        }
    }
}

TEST_CASE("trained dual objective matches the brute-force maximum") {
    Rng rng(32);
    const std::vector<kernel::KernelSpec> kernels = {
        kernel::KernelSpec::linear(), kernel::KernelSpec::polynomial(2),
        kernel::KernelSpec::polynomial(3), kernel::KernelSpec::gaussian(0.5)};
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 3 + rng() % 4;
        const Dataset data = random_dataset(m, rng);
        for (const auto& spec : kernels) {
            for (double c : {0.1, 1.0, 10.0}) {
                const SvmModel model = train(data, config(spec, c, 1e-6));
                const double smo_objective = model_dual_objective(model, data);

                testref::QpProblem problem;
                problem.c = c;
                problem.kernel_kind = spec.family == kernel::Family::Linear ? 0
                                      : spec.family == kernel::Family::Polynomial ? 1 : 2;
                problem.degree = spec.degree;
                problem.sigma_sq = spec.sigma_sq;
                for (const auto& s : data) {
                    problem.x.push_back({s.features.resilience, s.features.distance, s.features.intensity});
                    problem.y.push_back(s.state);
                }
                const double oracle = testref::oracle_max_dual(problem);
                CHECK(std::abs(smo_objective - oracle) <= 1e-4);
                ++checked;
            }
        }
    }
    CHECK(checked == 30 * 4 * 3);
}

TEST_CASE("dual objective operation") {
    SUBCASE("all-zero multipliers") {
        const std::vector<double> alpha(4, 0.0);
        const std::vector<int> labels = {1, -1, 1, -1};
        kernel::GramMatrix gram(4);
        CHECK(dual_objective(alpha, labels, gram) == 0.0);
    }

    SUBCASE("single unit multiplier with unit self-kernel") {
        const std::vector<double> alpha = {1.0};
        const std::vector<int> labels = {1};
        kernel::GramMatrix gram(1);
        gram(0, 0) = 1.0;
        CHECK(dual_objective(alpha, labels, gram) == 0.5);
    }

    SUBCASE("matches an independent quadratic-form evaluation") {
        Rng rng(33);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t m = 5;
            const Dataset data = random_dataset(m, rng);
            std::vector<FeatureVector> features;
            std::vector<int> labels;
            for (const auto& s : data) {
                features.push_back(s.features);
                labels.push_back(s.state);
            }
            const auto gram = kernel::gram_matrix(kernel::KernelSpec::gaussian(0.5), features);
            std::vector<double> alpha(m);
            for (auto& a : alpha) a = uniform01(rng);

            double linear = 0.0, quad = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                linear += alpha[i];
                for (std::size_t j = 0; j < m; ++j) {
                    quad += alpha[i] * alpha[j] * labels[i] * labels[j] * gram(i, j);
                }
            }
            CHECK(dual_objective(alpha, labels, gram) ==
                  doctest::Approx(linear - 0.5 * quad).epsilon(1e-12));
        }
    }

    SUBCASE("dimension mismatch") {
        const std::vector<double> alpha = {1.0, 0.5};
        const std::vector<int> labels = {1};
        kernel::GramMatrix gram(2);
        CHECK_THROWS_AS(dual_objective(alpha, labels, gram), DataError);
    }
}

TEST_CASE("kkt violation measure") {
    const Dataset data = two_point_data();
    const SvmTrainConfig cfg = config(kernel::KernelSpec::linear(), 100.0);

    SUBCASE("converged models satisfy their own tolerance") {
        const SvmModel model = train(data, cfg);
        CHECK(model.final_kkt_violation <= cfg.tol);
        CHECK(kkt_max_violation(model, data, cfg) == model.final_kkt_violation);
    }

    SUBCASE("an unfitted model violates the margin conditions") {
        SvmModel zeroed;
        zeroed.kernel_spec = cfg.kernel_spec;  // no support vectors, bias 0
        CHECK(kkt_max_violation(zeroed, data, cfg) >= 1.0);
    }
}

TEST_CASE("smo steps preserve feasibility and ascend the dual") {
    datagen::GenConfig gen;
    gen.sample_count = 80;
    gen.seed = 5;
    const Dataset data = datagen::generate_dataset(gen);

    SmoDiagnostics diag;
    diag.record_objective = true;
    const SvmModel model = train(data, config(kernel::KernelSpec::gaussian(0.5), 1.0), &diag);
    CHECK(model.converged);
    REQUIRE(diag.objective_after_step.size() > 10);

    double previous = -std::numeric_limits<double>::infinity();
    for (double objective : diag.objective_after_step) {
        CHECK(objective >= previous - 1e-12);
        previous = objective;
    }
    for (double residual : diag.equality_residual_after_step) {
        CHECK(std::abs(residual) <= 1e-9);
    }
    for (double excess : diag.alpha_bound_excess_after_step) {
        CHECK(excess == 0.0);
    }
}

TEST_CASE("hard-margin limit on separable data") {
    Rng rng(34);
    Dataset data;
    for (int i = 0; i < 30; ++i) {
        const double low = 0.3 * uniform01(rng);
        const double high = 0.7 + 0.3 * uniform01(rng);
        data.push_back({{low, uniform01(rng), uniform01(rng)}, -1});
        data.push_back({{high, uniform01(rng), uniform01(rng)}, +1});
    }
    const SvmModel soft = train(data, config(kernel::KernelSpec::linear(), 1e3));
    const SvmModel hard = train(data, config(kernel::KernelSpec::linear(), 1e6));
    for (int i = 0; i < 200; ++i) {
        const FeatureVector x{uniform01(rng), uniform01(rng), uniform01(rng)};
        CHECK(predict(soft, x) == predict(hard, x));
    }
}

TEST_CASE("training is deterministic") {
    Rng rng(35);
    const Dataset data = random_dataset(40, rng);
    const SvmTrainConfig cfg = config(kernel::KernelSpec::gaussian(0.02), 1.0);
    const SvmModel a = train(data, cfg);
    const SvmModel b = train(data, cfg);
    CHECK(a.bias == b.bias);
    CHECK(a.iterations_used == b.iterations_used);
    CHECK(a.pair_updates == b.pair_updates);
    REQUIRE(a.coefficients.size() == b.coefficients.size());
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        CHECK(a.coefficients[i] == b.coefficients[i]);
        CHECK(a.sv_indices[i] == b.sv_indices[i]);
    }
}

TEST_CASE("training rejects bad inputs") {
    Dataset single_class = {{{0.1, 0.2, 0.3}, +1}, {{0.4, 0.5, 0.6}, +1}};
    CHECK_THROWS_AS(train(single_class, config(kernel::KernelSpec::linear(), 1.0)), DataError);

    Dataset bad_label = {{{0.1, 0.2, 0.3}, +1}, {{0.4, 0.5, 0.6}, 0}};
    CHECK_THROWS_AS(train(bad_label, config(kernel::KernelSpec::linear(), 1.0)), DataError);

    Dataset non_finite = two_point_data();
    non_finite[0].features.distance = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(train(non_finite, config(kernel::KernelSpec::linear(), 1.0)), DataError);

    CHECK_THROWS_AS(train(two_point_data(), config(kernel::KernelSpec::linear(), -1.0)), ConfigError);
    SvmTrainConfig bad_tol = config(kernel::KernelSpec::linear(), 1.0);
    bad_tol.tol = 0.0;
    CHECK_THROWS_AS(train(two_point_data(), bad_tol), ConfigError);
}

TEST_CASE("iteration cap returns a flagged partial model") {
    datagen::GenConfig gen;
    gen.sample_count = 200;
    gen.seed = 9;
    const Dataset data = datagen::generate_dataset(gen);
    SvmTrainConfig cfg = config(kernel::KernelSpec::gaussian(0.02), 10.0);
    cfg.max_iter = 1;
    const SvmModel model = train(data, cfg);
    CHECK_FALSE(model.converged);
    CHECK(model.iterations_used == 1);
    CHECK(std::isfinite(decision_value(model, {0.5, 0.5, 0.5})));
}

TEST_CASE("zero decision value predicts outage") {
    SvmModel empty;  // no support vectors, bias exactly 0
    CHECK(decision_value(empty, {0.2, 0.4, 0.8}) == 0.0);
    CHECK(predict(empty, {0.2, 0.4, 0.8}) == +1);
    empty.bias = -1e-9;
    CHECK(predict(empty, {0.2, 0.4, 0.8}) == -1);
}
