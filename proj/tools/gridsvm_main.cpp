// gridsvm: hurricane outage prediction experiments on the command line.
//
// Subcommands: generate | sweep | benchmark | confusion | train | predict.
// Exit codes: 0 success, 1 usage/config error, 2 runtime/data error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridsvm/datagen.hpp"
#include "gridsvm/evaluate.hpp"
#include "gridsvm/hazard.hpp"
#include "gridsvm/logreg.hpp"
#include "gridsvm/model_io.hpp"
#include "gridsvm/report.hpp"
#include "gridsvm/svm.hpp"

namespace {

using namespace gridsvm;

struct OutputOpts {
    std::string format = "text";  // text | json | csv
    std::string out;              // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opts.out, "Output path (stdout when omitted)");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw DataError("failed writing '" + path + "'");
}

// Text output written to a file gets a full-precision .json twin.
void emit(const OutputOpts& opts, const std::string& text, const std::string& json_str,
          const std::string& csv_str) {
    const std::string& payload =
        opts.format == "json" ? json_str : (opts.format == "csv" ? csv_str : text);
    if (opts.out.empty()) {
        std::cout << payload;
    } else {
        write_file(opts.out, payload);
        if (opts.format == "text") write_file(opts.out + ".json", json_str);
    }
}

struct SvmSettings {
    std::string kernel = "gaussian";
    double c = 1.0;
    double tol = 1e-3;
    int max_iter = 15000;

    svm::SvmTrainConfig config() const {
        svm::SvmTrainConfig cfg;
        cfg.kernel_spec = kernel::KernelSpec::parse(kernel);
        cfg.c = c;
        cfg.tol = tol;
        cfg.max_iter = max_iter;
        return cfg;
    }
};

evaluate::Trainer make_svm_trainer(const svm::SvmTrainConfig& cfg) {
    return [cfg](const Dataset& train_set) -> evaluate::Predictor {
        auto model = std::make_shared<svm::SvmModel>(svm::train(train_set, cfg));
        return [model](const FeatureVector& x) { return svm::predict(*model, x); };
    };
}

evaluate::Trainer make_logreg_trainer(const logreg::LogRegTrainConfig& cfg) {
    return [cfg](const Dataset& train_set) -> evaluate::Predictor {
        auto model = std::make_shared<logreg::LogRegModel>(logreg::train_logreg(train_set, cfg));
        return [model](const FeatureVector& x) { return logreg::predict_logreg(*model, x).second; };
    };
}

int run_generate(const datagen::GenConfig& cfg, const std::string& out_path) {
    const Dataset dataset = datagen::generate_dataset(cfg);
    datagen::write_csv(out_path, dataset);
    std::int64_t outages = 0;
    for (const auto& s : dataset) outages += (s.state == 1);
    std::cout << "wrote " << out_path << ": " << dataset.size() << " samples, " << outages
              << " outage / " << (dataset.size() - outages) << " operational, seed " << cfg.seed
              << "\n";
    return 0;
}

int run_sweep(const Dataset& dataset, const std::vector<std::string>& kernels,
              const std::vector<double>& penalties, int folds, std::uint64_t seed,
              const SvmSettings& svm_settings, const OutputOpts& out) {
    report::SweepGrid grid;
    for (const std::string& k : kernels) grid.kernels.push_back(kernel::KernelSpec::parse(k));
    grid.penalties = penalties;
    grid.folds = folds;
    grid.seed = seed;
    grid.cells.resize(grid.kernels.size() * grid.penalties.size());

    double best = -1.0;
    for (std::size_t row = 0; row < grid.kernels.size(); ++row) {
        for (std::size_t col = 0; col < grid.penalties.size(); ++col) {
            report::SweepCell& cell = grid.cells[row * grid.penalties.size() + col];
            svm::SvmTrainConfig cfg;
            cfg.kernel_spec = grid.kernels[row];
            cfg.c = grid.penalties[col];
            cfg.tol = svm_settings.tol;
            cfg.max_iter = svm_settings.max_iter;
            try {
                const auto cv = evaluate::cross_validate(make_svm_trainer(cfg), dataset, folds, seed);
                cell.ok = true;
                cell.mean_f1 = cv.mean.f1;
                if (cell.mean_f1 > best) {
                    best = cell.mean_f1;
                    grid.best_row = static_cast<int>(row);
                    grid.best_col = static_cast<int>(col);
                }
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
        }
    }
    grid.footnotes.push_back(
        "penalty grid includes c=0.01 alongside the commonly reported 0.1..100 range");
    emit(out, report::render_text(grid), report::to_json_string(grid), report::to_csv(grid));
    return 0;
}

int run_benchmark(const Dataset& dataset, double c, int folds, std::uint64_t seed,
                  const SvmSettings& svm_settings, double lambda, const OutputOpts& out) {
    report::BenchmarkTable table;
    table.folds = folds;
    table.seed = seed;
    table.fold_hash = evaluate::fold_assignment_hash(evaluate::kfold_split(dataset, folds, seed),
                                                     dataset.size());

    const std::vector<std::pair<std::string, kernel::KernelSpec>> svm_rows = {
        {"Linear SVM", kernel::KernelSpec::linear()},
        {"Quadratic SVM", kernel::KernelSpec::polynomial(2)},
        {"Cubic SVM", kernel::KernelSpec::polynomial(3)},
        {"Gaussian SVM", kernel::KernelSpec::gaussian()},
    };
    for (const auto& [name, spec] : svm_rows) {
        svm::SvmTrainConfig cfg;
        cfg.kernel_spec = spec;
        cfg.c = c;
        cfg.tol = svm_settings.tol;
        cfg.max_iter = svm_settings.max_iter;
        const auto cv = evaluate::cross_validate(make_svm_trainer(cfg), dataset, folds, seed);
        table.rows.push_back({name, cv.mean});
    }
    logreg::LogRegTrainConfig lr_cfg;
    lr_cfg.lambda = lambda;
    const auto cv = evaluate::cross_validate(make_logreg_trainer(lr_cfg), dataset, folds, seed);
    table.rows.push_back({"Logistic Reg.", cv.mean});

    emit(out, report::render_text(table), report::to_json_string(table), report::to_csv(table));
    return 0;
}

int run_confusion(const Dataset& dataset, const std::string& model_kind, int folds,
                  std::uint64_t seed, const SvmSettings& svm_settings, double lambda,
                  const OutputOpts& out) {
    report::ConfusionTable table;
    table.folds = folds;
    table.seed = seed;

    evaluate::Trainer trainer;
    if (model_kind == "svm") {
        const svm::SvmTrainConfig cfg = svm_settings.config();
        table.model_name = cfg.kernel_spec.to_string() + " SVM (c=" + std::to_string(svm_settings.c) + ")";
        trainer = make_svm_trainer(cfg);
    } else {
        logreg::LogRegTrainConfig cfg;
        cfg.lambda = lambda;
        table.model_name = "logistic regression";
        trainer = make_logreg_trainer(cfg);
    }
    const auto cv = evaluate::cross_validate(trainer, dataset, folds, seed);
    table.confusion = cv.pooled.confusion;

    emit(out, report::render_text(table), report::to_json_string(table), report::to_csv(table));
    return 0;
}

int run_train(const Dataset& dataset, const std::string& model_kind,
              const SvmSettings& svm_settings, double lambda, const std::string& out_path) {
    if (model_kind == "svm") {
        const svm::SvmModel model = svm::train(dataset, svm_settings.config());
        model_io::save_model(out_path, model);
        std::cout << "wrote " << out_path << ": " << model.support_vectors.size()
                  << " support vectors, " << model.iterations_used << " passes ("
                  << model.pair_updates << " pair updates), "
                  << (model.converged ? "converged" : "hit iteration cap")
                  << ", kkt violation " << model.final_kkt_violation << "\n";
    } else {
        logreg::LogRegTrainConfig cfg;
        cfg.lambda = lambda;
        const logreg::LogRegModel model = logreg::train_logreg(dataset, cfg);
        model_io::save_model(out_path, model);
        std::cout << "wrote " << out_path << ": " << model.iterations_used << " iterations, "
                  << (model.converged ? "converged" : "hit iteration cap") << ", gradient norm "
                  << model.final_grad_norm << "\n";
    }
    return 0;
}

struct PredictRows {
    std::vector<FeatureVector> rows;
    std::vector<std::string> errors;  // one entry per rejected row
};

PredictRows read_predict_rows(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open input file '" + path + "'");
    PredictRows result;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("resilience,distance,intensity", 0) == 0) continue;

        std::istringstream fields(line);
        std::string item;
        FeatureVector x;
        int f = 0;
        bool bad = false;
        while (std::getline(fields, item, ',')) {
            if (f >= 3) break;  // extra columns (e.g. a state column) are ignored
            char* end = nullptr;
            const double v = std::strtod(item.c_str(), &end);
            if (end == item.c_str() || *end != '\0') {
                result.errors.push_back("line " + std::to_string(lineno) + ": non-numeric feature '" + item + "'");
                bad = true;
                break;
            }
            if (!(v >= 0.0 && v <= 1.0)) {
                result.errors.push_back("line " + std::to_string(lineno) + ": feature " + item + " outside [0,1]");
                bad = true;
                break;
            }
            x[f++] = v;
        }
        if (!bad && f < 3) {
            result.errors.push_back("line " + std::to_string(lineno) + ": expected 3 features");
            bad = true;
        }
        if (!bad) result.rows.push_back(x);
    }
    return result;
}

int run_predict(const std::string& model_path, const std::string& input_path,
                const OutputOpts& out) {
    const model_io::AnyModel model = model_io::load_model(model_path);
    const PredictRows input = read_predict_rows(input_path);

    std::ostringstream csv;
    csv << "state,score\n";
    csv.precision(17);
    nlohmann::json json_rows = nlohmann::json::array();
    for (const FeatureVector& x : input.rows) {
        int label;
        double score;
        if (const auto* svm_model = std::get_if<svm::SvmModel>(&model)) {
            score = svm::decision_value(*svm_model, x);
            label = svm::predict(*svm_model, x);
        } else {
            const auto& lr = std::get<logreg::LogRegModel>(model);
            std::tie(score, label) = logreg::predict_logreg(lr, x);
        }
        csv << (label > 0 ? "+1" : "-1") << "," << score << "\n";
        json_rows.push_back({{"state", label}, {"score", score}});
    }

    const std::string csv_str = csv.str();
    const std::string json_str = json_rows.dump(2) + "\n";
    emit(out, csv_str, json_str, csv_str);

    for (const std::string& err : input.errors) std::cerr << "rejected " << err << "\n";
    return input.errors.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Power-grid component outage prediction under hurricanes"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a config file");

    // generate
    auto* generate = app.add_subcommand("generate", "Write a synthetic labeled dataset CSV");
    datagen::GenConfig gen_cfg;
    std::string gen_out = "dataset.csv";
    std::string gen_config_path, hazard_config_path, resilience_mode = "direct";
    long long gen_seed = 1;
    generate->add_option("--count", gen_cfg.sample_count, "Number of samples");
    generate->add_option("--outage-fraction", gen_cfg.outage_fraction, "Fraction labeled outage");
    generate->add_option("--noise-sd", gen_cfg.noise_sd, "Per-feature Gaussian noise sd");
    generate->add_option("--wind-sd", gen_cfg.wind_sd_mph, "Wind spread around category midpoint (mph)");
    generate->add_option("--max-wind", gen_cfg.max_wind_mph, "Normalization ceiling for wind (mph)");
    generate->add_option("--max-distance", gen_cfg.max_distance, "Normalization ceiling for distance");
    generate->add_option("--seed", gen_seed, "RNG seed");
    generate->add_option("--resilience-mode", resilience_mode, "direct | model")
        ->check(CLI::IsMember({"direct", "model"}));
    generate->add_option("--gen-config", gen_config_path, "Generator config file (key = value)");
    generate->add_option("--hazard-config", hazard_config_path,
                         "Hazard/fragility config file for --resilience-mode model");
    generate->add_option("--out", gen_out, "Output CSV path");

    // shared experiment options
    struct ExperimentOpts {
        std::string dataset_path;
        int folds = 5;
        long long seed = 1;
        OutputOpts out;
        SvmSettings svm;
        double lambda = 1e-4;
    };
    const auto add_experiment_flags = [](CLI::App* cmd, ExperimentOpts& opts, bool with_kernel) {
        cmd->add_option("--dataset", opts.dataset_path, "Dataset CSV path")->required();
        cmd->add_option("--folds", opts.folds, "Cross-validation folds");
        cmd->add_option("--seed", opts.seed, "Fold-split seed");
        cmd->add_option("--tol", opts.svm.tol, "SMO KKT tolerance");
        cmd->add_option("--max-iter", opts.svm.max_iter, "SMO outer-pass cap");
        cmd->add_option("--lambda", opts.lambda, "Logistic-regression L2 penalty");
        if (with_kernel) {
            cmd->add_option("--kernel", opts.svm.kernel,
                            "Kernel: linear | poly<d> | gaussian[:<sigma_sq>]");
            cmd->add_option("--c", opts.svm.c, "Soft-margin penalty");
        }
        add_output_flags(cmd, opts.out);
    };

    auto* sweep = app.add_subcommand("sweep", "Mean F1 grid over kernels and penalties");
    ExperimentOpts sweep_opts;
    std::vector<std::string> sweep_kernels = {"linear", "poly2", "poly3", "gaussian"};
    std::vector<double> sweep_penalties = {0.01, 0.1, 1.0, 10.0, 100.0};
    add_experiment_flags(sweep, sweep_opts, false);
    sweep->add_option("--kernel", sweep_kernels, "Kernels to sweep");
    sweep->add_option("--c", sweep_penalties, "Penalty values to sweep");

    auto* benchmark = app.add_subcommand("benchmark",
                                         "Compare SVM kernels against logistic regression");
    ExperimentOpts bench_opts;
    add_experiment_flags(benchmark, bench_opts, true);

    auto* confusion = app.add_subcommand("confusion", "Pooled CV confusion matrix");
    ExperimentOpts conf_opts;
    std::string conf_model = "svm";
    add_experiment_flags(confusion, conf_opts, true);
    confusion->add_option("--model", conf_model, "svm | logreg")
        ->check(CLI::IsMember({"svm", "logreg"}));

    auto* train = app.add_subcommand("train", "Train on a full dataset and save the model JSON");
    ExperimentOpts train_opts;
    std::string train_model = "svm";
    std::string train_out;
    train->add_option("--dataset", train_opts.dataset_path, "Dataset CSV path")->required();
    train->add_option("--model", train_model, "svm | logreg")->check(CLI::IsMember({"svm", "logreg"}));
    train->add_option("--kernel", train_opts.svm.kernel, "Kernel spec");
    train->add_option("--c", train_opts.svm.c, "Soft-margin penalty");
    train->add_option("--tol", train_opts.svm.tol, "SMO KKT tolerance");
    train->add_option("--max-iter", train_opts.svm.max_iter, "SMO outer-pass cap");
    train->add_option("--lambda", train_opts.lambda, "Logistic-regression L2 penalty");
    train->add_option("--out", train_out, "Model JSON output path")->required();

    auto* predict = app.add_subcommand("predict", "Score feature rows with a saved model");
    std::string predict_model_path, predict_input;
    OutputOpts predict_out;
    predict->add_option("--model", predict_model_path, "Model JSON path")->required();
    predict->add_option("--input", predict_input, "CSV of feature rows")->required();
    add_output_flags(predict, predict_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*generate) {
            if (!gen_config_path.empty()) {
                datagen::GenConfig from_file = datagen::load_gen_config(gen_config_path);
                // command-line flags take precedence over the file
                if (generate->count("--count")) from_file.sample_count = gen_cfg.sample_count;
                if (generate->count("--outage-fraction")) from_file.outage_fraction = gen_cfg.outage_fraction;
                if (generate->count("--noise-sd")) from_file.noise_sd = gen_cfg.noise_sd;
                if (generate->count("--wind-sd")) from_file.wind_sd_mph = gen_cfg.wind_sd_mph;
                if (generate->count("--max-wind")) from_file.max_wind_mph = gen_cfg.max_wind_mph;
                if (generate->count("--max-distance")) from_file.max_distance = gen_cfg.max_distance;
                gen_cfg = from_file;
            }
            if (generate->count("--seed")) gen_cfg.seed = static_cast<std::uint64_t>(gen_seed);
            if (generate->count("--resilience-mode")) {
                gen_cfg.resilience_mode = resilience_mode == "model" ? datagen::ResilienceMode::Model
                                                                     : datagen::ResilienceMode::Direct;
            }
            if (!hazard_config_path.empty()) {
                gen_cfg.hazard_config = hazard::load_hazard_config(hazard_config_path);
            }
            return run_generate(gen_cfg, gen_out);
        }
        if (*sweep) {
            const Dataset dataset = datagen::read_csv(sweep_opts.dataset_path);
            return run_sweep(dataset, sweep_kernels, sweep_penalties, sweep_opts.folds,
                             static_cast<std::uint64_t>(sweep_opts.seed), sweep_opts.svm,
                             sweep_opts.out);
        }
        if (*benchmark) {
            const Dataset dataset = datagen::read_csv(bench_opts.dataset_path);
            return run_benchmark(dataset, bench_opts.svm.c, bench_opts.folds,
                                 static_cast<std::uint64_t>(bench_opts.seed), bench_opts.svm,
                                 bench_opts.lambda, bench_opts.out);
        }
        if (*confusion) {
            const Dataset dataset = datagen::read_csv(conf_opts.dataset_path);
            return run_confusion(dataset, conf_model, conf_opts.folds,
                                 static_cast<std::uint64_t>(conf_opts.seed), conf_opts.svm,
                                 conf_opts.lambda, conf_opts.out);
        }
        if (*train) {
            const Dataset dataset = datagen::read_csv(train_opts.dataset_path);
            return run_train(dataset, train_model, train_opts.svm, train_opts.lambda, train_out);
        }
        if (*predict) {
            return run_predict(predict_model_path, predict_input, predict_out);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
