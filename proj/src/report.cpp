#include "gridsvm/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace gridsvm::report {

using nlohmann::json;

namespace {

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string count_with_pct(std::int64_t count, std::int64_t row_total) {
    char buf[48];
    const double pct = row_total > 0 ? 100.0 * static_cast<double>(count) / static_cast<double>(row_total) : 0.0;
    std::snprintf(buf, sizeof(buf), "%lld (%.1f%%)", static_cast<long long>(count), pct);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

json report_json(const evaluate::EvaluationReport& r) {
    return json{
        {"accuracy", r.accuracy},
        {"precision", r.precision},
        {"recall", r.recall},
        {"f1", r.f1},
        {"degenerate", r.degenerate},
        {"confusion", {{"tp", r.confusion.tp}, {"fp", r.confusion.fp}, {"fn", r.confusion.fn}, {"tn", r.confusion.tn}}},
    };
}

}  // namespace

std::string render_text(const SweepGrid& grid) {
    std::ostringstream out;
    out << "Mean F1 by kernel and penalty (" << grid.folds << "-fold CV, seed " << grid.seed << ")\n";

    std::size_t name_width = 8;
    for (const auto& k : grid.kernels) name_width = std::max(name_width, k.to_string().size() + 2);

    out << pad("kernel", name_width);
    for (double c : grid.penalties) {
        char head[32];
        std::snprintf(head, sizeof(head), "c=%-10.4g", c);
        out << head;
    }
    out << "\n";
    for (std::size_t row = 0; row < grid.kernels.size(); ++row) {
        out << pad(grid.kernels[row].to_string(), name_width);
        for (std::size_t col = 0; col < grid.penalties.size(); ++col) {
            const SweepCell& cell = grid.cell(static_cast<int>(row), static_cast<int>(col));
            std::string text = cell.ok ? fixed3(cell.mean_f1) : "fail";
            if (static_cast<int>(row) == grid.best_row && static_cast<int>(col) == grid.best_col) {
                text += "*";
            }
            out << pad(text, 12);
        }
        out << "\n";
    }
    if (grid.best_row >= 0) {
        out << "* best cell: " << grid.kernels[static_cast<std::size_t>(grid.best_row)].to_string()
            << ", c=" << grid.penalties[static_cast<std::size_t>(grid.best_col)] << "\n";
    }
    for (const std::string& note : grid.footnotes) out << "note: " << note << "\n";
    return out.str();
}

std::string to_json_string(const SweepGrid& grid) {
    json j;
    j["folds"] = grid.folds;
    j["seed"] = grid.seed;
    j["penalties"] = grid.penalties;
    j["kernels"] = json::array();
    for (const auto& k : grid.kernels) j["kernels"].push_back(k.to_string());
    j["mean_f1"] = json::array();
    for (std::size_t row = 0; row < grid.kernels.size(); ++row) {
        json row_json = json::array();
        for (std::size_t col = 0; col < grid.penalties.size(); ++col) {
            const SweepCell& cell = grid.cell(static_cast<int>(row), static_cast<int>(col));
            if (cell.ok) {
                row_json.push_back(cell.mean_f1);
            } else {
                row_json.push_back(json{{"error", cell.error}});
            }
        }
        j["mean_f1"].push_back(row_json);
    }
    if (grid.best_row >= 0) {
        j["best"] = {
            {"kernel", grid.kernels[static_cast<std::size_t>(grid.best_row)].to_string()},
            {"c", grid.penalties[static_cast<std::size_t>(grid.best_col)]},
            {"mean_f1", grid.cell(grid.best_row, grid.best_col).mean_f1},
        };
    }
    j["footnotes"] = grid.footnotes;
    return j.dump(2) + "\n";
}

std::string to_csv(const SweepGrid& grid) {
    std::ostringstream out;
    out << "kernel";
    for (double c : grid.penalties) out << ",c=" << c;
    out << "\n";
    out.precision(17);
    for (std::size_t row = 0; row < grid.kernels.size(); ++row) {
        out << grid.kernels[row].to_string();
        for (std::size_t col = 0; col < grid.penalties.size(); ++col) {
            const SweepCell& cell = grid.cell(static_cast<int>(row), static_cast<int>(col));
            out << ",";
            if (cell.ok)out << cell.mean_f1;
            else out << "error";
        }
        out << "\n";
    }
    return out.str();
}

std::string render_text(const BenchmarkTable& table) {
    std::ostringstream out;
    out << "Model comparison (" << table.folds << "-fold CV, seed " << table.seed << ", fold hash "
        << table.fold_hash << ")\n";
    std::size_t name_width = 8;
    for (const auto& row : table.rows) name_width = std::max(name_width, row.name.size() + 2);
    out << pad("model", name_width) << pad("accuracy", 11) << pad("precision", 11)
        << pad("recall", 11) << pad("f1", 11) << "\n";
    for (const auto& row : table.rows) {
        out << pad(row.name, name_width) << pad(fixed3(row.report.accuracy), 11)
            << pad(fixed3(row.report.precision), 11) << pad(fixed3(row.report.recall), 11)
            << pad(fixed3(row.report.f1), 11) << "\n";
    }
    return out.str();
}

std::string to_json_string(const BenchmarkTable& table) {
    json j;
    j["folds"] = table.folds;
    j["seed"] = table.seed;
    j["fold_hash"] = table.fold_hash;
    j["models"] = json::array();
    for (const auto& row : table.rows) {
        json r = report_json(row.report);
        r["name"] = row.name;
        j["models"].push_back(r);
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const BenchmarkTable& table) {
    std::ostringstream out;
    out << "model,accuracy,precision,recall,f1\n";
    out.precision(17);
    for (const auto& row : table.rows) {
        out << row.name << "," << row.report.accuracy << "," << row.report.precision << ","
            << row.report.recall << "," << row.report.f1 << "\n";
    }
    return out.str();
}

std::string render_text(const ConfusionTable& table) {
    const auto& cm = table.confusion;
    std::ostringstream out;
    out << "Pooled confusion matrix, " << table.model_name << " (" << table.folds
        << "-fold CV, seed " << table.seed << ")\n";
    out << pad("", 20) << pad("pred operational", 20) << pad("pred outage", 20) << "\n";
    out << pad("actual operational", 20) << pad(count_with_pct(cm.tn, cm.tn + cm.fp), 20)
        << pad(count_with_pct(cm.fp, cm.tn + cm.fp), 20) << "\n";
    out << pad("actual outage", 20) << pad(count_with_pct(cm.fn, cm.fn + cm.tp), 20)
        << pad(count_with_pct(cm.tp, cm.fn + cm.tp), 20) << "\n";
    return out.str();
}

std::string to_json_string(const ConfusionTable& table) {
    const auto& cm = table.confusion;
    const auto row_pct = [](std::int64_t count, std::int64_t total) {
        return total > 0 ? 100.0 * static_cast<double>(count) / static_cast<double>(total) : 0.0;
    };
    json j;
    j["model"] = table.model_name;
    j["folds"] = table.folds;
    j["seed"] = table.seed;
    j["counts"] = {{"tn", cm.tn}, {"fp", cm.fp}, {"fn", cm.fn}, {"tp", cm.tp}};
    j["row_percent"] = {
        {"tn", row_pct(cm.tn, cm.tn + cm.fp)},
        {"fp", row_pct(cm.fp, cm.tn + cm.fp)},
        {"fn", row_pct(cm.fn, cm.fn + cm.tp)},
        {"tp", row_pct(cm.tp, cm.fn + cm.tp)},
    };
    j["metrics"] = report_json(evaluate::metrics(cm));
    return j.dump(2) + "\n";
}

std::string to_csv(const ConfusionTable& table) {
    std::ostringstream out;
    out << "actual,pred_operational,pred_outage\n";
    out << "operational," << table.confusion.tn << "," << table.confusion.fp << "\n";
    out << "outage," << table.confusion.fn << "," << table.confusion.tp << "\n";
    return out.str();
}

}  // namespace gridsvm::report
