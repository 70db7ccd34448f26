#include "gridsvm/evaluate.hpp"

#include <algorithm>

#include "gridsvm/rng.hpp"

namespace gridsvm::evaluate {

ConfusionMatrix confusion(std::span<const int> predicted, std::span<const int> actual) {
    if (predicted.size() != actual.size()) {
        throw DataError("confusion: prediction and truth lengths differ");
    }
    if (predicted.empty()) {
        throw DataError("confusion: need at least one sample");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (actual[i] == 1) {
            predicted[i] == 1 ? ++cm.tp : ++cm.fn;
        } else {
            predicted[i] == 1 ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

EvaluationReport metrics(const ConfusionMatrix& cm) {
    if (cm.total() <= 0) throw DataError("metrics: empty confusion matrix");
    EvaluationReport report;
    report.confusion = cm;
    report.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());

    if (cm.tp + cm.fp > 0) {
        report.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    } else {
        report.degenerate = true;
    }
    if (cm.tp + cm.fn > 0) {
        report.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    } else {
        report.degenerate = true;
    }
    if (report.precision + report.recall > 0.0) {
        report.f1 = 2.0 * report.precision * report.recall / (report.precision + report.recall);
    } else {
        report.degenerate = true;
    }
    return report;
}

std::vector<std::vector<int>> kfold_split(const Dataset& dataset, int k, std::uint64_t seed) {
    if (k < 2) throw ConfigError("k-fold needs k >= 2");
    if (static_cast<std::size_t>(k) > dataset.size()) {
        throw ConfigError("k-fold needs at least k samples");
    }

    std::vector<int> positives;
    std::vector<int> negatives;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        (dataset[i].state == 1 ? positives : negatives).push_back(static_cast<int>(i));
    }

    Rng rng(seed);
    shuffle_indices(positives, rng);
    shuffle_indices(negatives, rng);

    // Deal both class lists round-robin with one shared cursor, so fold sizes
    // stay within 1 overall as well as per class.
    std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
    std::size_t cursor = 0;
    for (const std::vector<int>* cls : {&positives, &negatives}) {
        for (int idx : *cls) {
            folds[cursor % static_cast<std::size_t>(k)].push_back(idx);
            ++cursor;
        }
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

std::uint64_t fold_assignment_hash(const std::vector<std::vector<int>>& folds,
                                   std::size_t n_samples) {
    std::vector<std::uint64_t> assignment(n_samples, ~0ull);
    for (std::size_t f = 0; f < folds.size(); ++f) {
        for (int idx : folds[f]) assignment[static_cast<std::size_t>(idx)] = f;
    }
    std::uint64_t hash = 14695981039346656037ull;
    for (std::uint64_t fold_id : assignment) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (fold_id >> (8 * byte)) & 0xffull;
            hash *= 1099511628211ull;
        }
    }
    return hash;
}

CvResult cross_validate(const Trainer& trainer, const Dataset& dataset, int k, std::uint64_t seed) {
    const auto folds = kfold_split(dataset, k, seed);

    CvResult result;
    result.fold_hash = fold_assignment_hash(folds, dataset.size());
    ConfusionMatrix pooled;
    double sum_accuracy = 0.0, sum_precision = 0.0, sum_recall = 0.0, sum_f1 = 0.0;
    bool any_degenerate = false;

    for (std::size_t f = 0; f < folds.size(); ++f) {
        Dataset train_set;
        train_set.reserve(dataset.size() - folds[f].size());
        for (std::size_t g = 0; g < folds.size(); ++g) {
            if (g == f) continue;
            for (int idx : folds[g]) train_set.push_back(dataset[static_cast<std::size_t>(idx)]);
        }

        Predictor predictor;
        try {
            predictor = trainer(train_set);
        } catch (const std::exception& e) {
            throw DataError("fold " + std::to_string(f) + ": " + e.what());
        }

        std::vector<int> predicted;
        std::vector<int> actual;
        predicted.reserve(folds[f].size());
        actual.reserve(folds[f].size());
        for (int idx : folds[f]) {
            predicted.push_back(predictor(dataset[static_cast<std::size_t>(idx)].features));
            actual.push_back(dataset[static_cast<std::size_t>(idx)].state);
        }

        const EvaluationReport report = metrics(confusion(predicted, actual));
        pooled += report.confusion;
        sum_accuracy += report.accuracy;
        sum_precision += report.precision;
        sum_recall += report.recall;
        sum_f1 += report.f1;
        any_degenerate = any_degenerate || report.degenerate;
        result.fold_reports.push_back(report);
    }

    const double nf = static_cast<double>(folds.size());
    result.mean.confusion = pooled;
    result.mean.accuracy = sum_accuracy / nf;
    result.mean.precision = sum_precision / nf;
    result.mean.recall = sum_recall / nf;
    result.mean.f1 = sum_f1 / nf;
    result.mean.degenerate = any_degenerate;
    result.pooled = metrics(pooled);
    return result;
}

}  // namespace gridsvm::evaluate
