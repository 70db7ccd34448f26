#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gridsvm/types.hpp"

namespace gridsvm::evaluate {

// 2x2 counts with outage (+1) as the positive class.
struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }

    ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
        tp += o.tp;
        fp += o.fp;
        fn += o.fn;
        tn += o.tn;
        return *this;
    }
};

struct EvaluationReport {
    ConfusionMatrix confusion;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    bool degenerate = false;  // some denominator was zero and the metric was set to 0
};

ConfusionMatrix confusion(std::span<const int> predicted, std::span<const int> actual);

// accuracy, P = tp/(tp+fp), R = tp/(tp+fn), F1 = 2PR/(P+R); zero denominators
// yield 0 with the degenerate flag set.
EvaluationReport metrics(const ConfusionMatrix& cm);

// Seeded stratified partition into k index folds: disjoint, exhaustive,
// sizes within 1 overall and per class.
std::vector<std::vector<int>> kfold_split(const Dataset& dataset, int k, std::uint64_t seed);

// A trainer returns a predictor mapping features to a +1/-1 label.
using Predictor = std::function<int(const FeatureVector&)>;
using Trainer = std::function<Predictor(const Dataset&)>;

struct CvResult {
    std::vector<EvaluationReport> fold_reports;
    EvaluationReport mean;           // unweighted mean of the per-fold metrics
    EvaluationReport pooled;         // metrics of the summed confusion matrix
    std::uint64_t fold_hash = 0;     // FNV-1a over fold membership, for paired runs
};

// Trains on k-1 folds and evaluates on the held-out fold, k times.
// Training failures are rethrown with the fold index attached.
CvResult cross_validate(const Trainer& trainer, const Dataset& dataset, int k, std::uint64_t seed);

// Fold membership fingerprint (sample index -> fold id) used by paired
// benchmark runs to prove every model saw the same split.
std::uint64_t fold_assignment_hash(const std::vector<std::vector<int>>& folds, std::size_t n_samples);

}  // namespace gridsvm::evaluate
