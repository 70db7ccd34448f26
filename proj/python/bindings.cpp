#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gridsvm/datagen.hpp"
#include "gridsvm/evaluate.hpp"
#include "gridsvm/hazard.hpp"
#include "gridsvm/logreg.hpp"
#include "gridsvm/model_io.hpp"
#include "gridsvm/svm.hpp"

namespace py = pybind11;
using namespace gridsvm;

namespace {

py::dict report_to_dict(const evaluate::EvaluationReport& r) {
    py::dict d;
    d["accuracy"] = r.accuracy;
    d["precision"] = r.precision;
    d["recall"] = r.recall;
    d["f1"] = r.f1;
    d["degenerate"] = r.degenerate;
    d["confusion"] = py::dict(py::arg("tp") = r.confusion.tp, py::arg("fp") = r.confusion.fp,
                              py::arg("fn") = r.confusion.fn, py::arg("tn") = r.confusion.tn);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hurricane outage prediction: SMO kernel SVM, synthetic data, evaluation";

    py::register_exception<ConfigError>(m, "GridsvmConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "GridsvmDataError", PyExc_ValueError);

    py::class_<FeatureVector>(m, "FeatureVector")
        .def(py::init([](double resilience, double distance, double intensity) {
                 return FeatureVector{resilience, distance, intensity};
             }),
             py::arg("resilience"), py::arg("distance"), py::arg("intensity"))
        .def_readwrite("resilience", &FeatureVector::resilience)
        .def_readwrite("distance", &FeatureVector::distance)
        .def_readwrite("intensity", &FeatureVector::intensity)
        .def("__repr__", [](const FeatureVector& x) {
            return "FeatureVector(" + std::to_string(x.resilience) + ", " +
                   std::to_string(x.distance) + ", " + std::to_string(x.intensity) + ")";
        });

    py::class_<LabeledSample>(m, "LabeledSample")
        .def(py::init([](const FeatureVector& features, int state) {
                 return LabeledSample{features, state};
             }),
             py::arg("features"), py::arg("state"))
        .def_readwrite("features", &LabeledSample::features)
        .def_readwrite("state", &LabeledSample::state);

    py::class_<kernel::KernelSpec>(m, "KernelSpec")
        .def_static("parse", &kernel::KernelSpec::parse, py::arg("text"))
        .def_static("linear", &kernel::KernelSpec::linear)
        .def_static("polynomial", &kernel::KernelSpec::polynomial, py::arg("degree"))
        .def_static("gaussian", &kernel::KernelSpec::gaussian, py::arg("sigma_sq") = 0.02)
        .def("__str__", &kernel::KernelSpec::to_string);
    m.def("kernel_eval", &kernel::kernel_eval, py::arg("spec"), py::arg("a"), py::arg("b"));

    // hazard model
    py::class_<hazard::HazardParams>(m, "HazardParams")
        .def(py::init<>())
        .def_readwrite("annual_rate", &hazard::HazardParams::annual_rate)
        .def_readwrite("category_probs", &hazard::HazardParams::category_probs);
    m.def("interarrival_pdf", &hazard::interarrival_pdf, py::arg("t_years"),
          py::arg("params") = hazard::HazardParams{});
    m.def("category_probability", &hazard::category_probability, py::arg("category"),
          py::arg("params") = hazard::HazardParams{});
    m.def(
        "resilience_index",
        [](const std::string& component, int category, double wind_mph) {
            return hazard::resilience_index(hazard::component_class_from_string(component),
                                            category, wind_mph, hazard::HazardParams{});
        },
        py::arg("component"), py::arg("category"), py::arg("wind_mph"));

    // synthetic data
    py::class_<datagen::GenConfig>(m, "GenConfig")
        .def(py::init<>())
        .def_readwrite("sample_count", &datagen::GenConfig::sample_count)
        .def_readwrite("outage_fraction", &datagen::GenConfig::outage_fraction)
        .def_readwrite("noise_sd", &datagen::GenConfig::noise_sd)
        .def_readwrite("wind_sd_mph", &datagen::GenConfig::wind_sd_mph)
        .def_readwrite("max_wind_mph", &datagen::GenConfig::max_wind_mph)
        .def_readwrite("max_distance", &datagen::GenConfig::max_distance)
        .def_readwrite("seed", &datagen::GenConfig::seed);
    m.def("generate_dataset", &datagen::generate_dataset, py::arg("config"));
    m.def("dataset_to_csv", &datagen::to_csv, py::arg("dataset"));
    m.def("write_csv", &datagen::write_csv, py::arg("path"), py::arg("dataset"));
    m.def("read_csv", &datagen::read_csv, py::arg("path"));

    // SVM
    py::class_<svm::SvmModel>(m, "SvmModel")
        .def_readonly("bias", &svm::SvmModel::bias)
        .def_readonly("iterations_used", &svm::SvmModel::iterations_used)
        .def_readonly("pair_updates", &svm::SvmModel::pair_updates)
        .def_readonly("converged", &svm::SvmModel::converged)
        .def_readonly("final_kkt_violation", &svm::SvmModel::final_kkt_violation)
        .def_property_readonly("n_support_vectors",
                               [](const svm::SvmModel& m_) { return m_.support_vectors.size(); })
        .def("decision_value",
             [](const svm::SvmModel& model, const FeatureVector& x) {
                 return svm::decision_value(model, x);
             })
        .def("predict",
             [](const svm::SvmModel& model, const FeatureVector& x) { return svm::predict(model, x); })
        .def("to_json", [](const svm::SvmModel& model) { return model_io::to_json_string(model); });

    m.def(
        "train_svm",
        [](const Dataset& dataset, const kernel::KernelSpec& spec, double c, double tol,
           int max_iter) {
            svm::SvmTrainConfig cfg;
            cfg.kernel_spec = spec;
            cfg.c = c;
            cfg.tol = tol;
            cfg.max_iter = max_iter;
            return svm::train(dataset, cfg);
        },
        py::arg("dataset"), py::arg("kernel") = kernel::KernelSpec::gaussian(), py::arg("c") = 1.0,
        py::arg("tol") = 1e-3, py::arg("max_iter") = 15000);

    // logistic regression
    py::class_<logreg::LogRegModel>(m, "LogRegModel")
        .def_readonly("weights", &logreg::LogRegModel::weights)
        .def_readonly("iterations_used", &logreg::LogRegModel::iterations_used)
        .def_readonly("converged", &logreg::LogRegModel::converged)
        .def("predict",
             [](const logreg::LogRegModel& model, const FeatureVector& x) {
                 return logreg::predict_logreg(model, x);
             })
        .def("to_json",
             [](const logreg::LogRegModel& model) { return model_io::to_json_string(model); });
    m.def(
        "train_logreg",
        [](const Dataset& dataset, double lambda) {
            logreg::LogRegTrainConfig cfg;
            cfg.lambda = lambda;
            return logreg::train_logreg(dataset, cfg);
        },
        py::arg("dataset"), py::arg("lambda") = 1e-4);
    m.def("polynomial_expand", &logreg::polynomial_expand, py::arg("x"));

    // evaluation
    m.def(
        "metrics",
        [](std::int64_t tp, std::int64_t fp, std::int64_t fn, std::int64_t tn) {
            return report_to_dict(evaluate::metrics({tp, fp, fn, tn}));
        },
        py::arg("tp"), py::arg("fp"), py::arg("fn"), py::arg("tn"));
    m.def("kfold_split", &evaluate::kfold_split, py::arg("dataset"), py::arg("k"), py::arg("seed"));
    m.def(
        "cross_validate_svm",
        [](const Dataset& dataset, const kernel::KernelSpec& spec, double c, int folds,
           std::uint64_t seed) {
            const auto trainer = [&](const Dataset& train_set) -> evaluate::Predictor {
                svm::SvmTrainConfig cfg;
                cfg.kernel_spec = spec;
                cfg.c = c;
                auto model = std::make_shared<svm::SvmModel>(svm::train(train_set, cfg));
                return [model](const FeatureVector& x) { return svm::predict(*model, x); };
            };
            const auto cv = evaluate::cross_validate(trainer, dataset, folds, seed);
            py::dict d;
            d["mean"] = report_to_dict(cv.mean);
            d["pooled"] = report_to_dict(cv.pooled);
            py::list folds_list;
            for (const auto& r : cv.fold_reports) folds_list.append(report_to_dict(r));
            d["folds"] = folds_list;
            d["fold_hash"] = cv.fold_hash;
            return d;
        },
        py::arg("dataset"), py::arg("kernel") = kernel::KernelSpec::gaussian(), py::arg("c") = 1.0,
        py::arg("folds") = 5, py::arg("seed") = 1);

    // persistence
    m.def("load_model_json", [](const std::string& text) -> py::object {
        const model_io::AnyModel model = model_io::from_json_string(text);
        if (const auto* s = std::get_if<svm::SvmModel>(&model)) return py::cast(*s);
        return py::cast(std::get<logreg::LogRegModel>(model));
    });
}
