#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridsvm/evaluate.hpp"
#include "gridsvm/kernel.hpp"

namespace gridsvm::report {

// Text renderers round to 3 decimals; the JSON forms carry full precision.

struct SweepCell {
    bool ok = false;
    double mean_f1 = 0.0;
    std::string error;  // set when the cell's training failed
};

// Mean F1 per (kernel, penalty) pair, kernels as rows.
struct SweepGrid {
    std::vector<kernel::KernelSpec> kernels;
    std::vector<double> penalties;
    std::vector<SweepCell> cells;  // row-major
    int best_row = -1;
    int best_col = -1;
    int folds = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> footnotes;

    const SweepCell& cell(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * penalties.size() +
                     static_cast<std::size_t>(col)];
    }
};

std::string render_text(const SweepGrid& grid);
std::string to_json_string(const SweepGrid& grid);
std::string to_csv(const SweepGrid& grid);

struct BenchmarkRow {
    std::string name;
    evaluate::EvaluationReport report;
};

// Accuracy/precision/recall/F1 per model, all evaluated on the same folds.
struct BenchmarkTable {
    std::vector<BenchmarkRow> rows;
    int folds = 0;
    std::uint64_t seed = 0;
    std::uint64_t fold_hash = 0;
};

std::string render_text(const BenchmarkTable& table);
std::string to_json_string(const BenchmarkTable& table);
std::string to_csv(const BenchmarkTable& table);

// Pooled cross-validation confusion counts with row percentages.
struct ConfusionTable {
    evaluate::ConfusionMatrix confusion;
    std::string model_name;
    int folds = 0;
    std::uint64_t seed = 0;
};

std::string render_text(const ConfusionTable& table);
std::string to_json_string(const ConfusionTable& table);
std::string to_csv(const ConfusionTable& table);

}  // namespace gridsvm::report
