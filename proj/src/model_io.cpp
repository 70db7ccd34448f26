#include "gridsvm/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace gridsvm::model_io {

using nlohmann::json;

namespace {

json kernel_to_json(const kernel::KernelSpec& spec) {
    json j;
    switch (spec.family) {
        case kernel::Family::Linear:
            j["family"] = "linear";
            break;
        case kernel::Family::Polynomial:
            j["family"] = "polynomial";
            j["degree"] = spec.degree;
            break;
        case kernel::Family::Gaussian:
            j["family"] = "gaussian";
            j["sigma_sq"] = spec.sigma_sq;
            break;
    }
    return j;
}

kernel::KernelSpec kernel_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "linear") return kernel::KernelSpec::linear();
    if (family == "polynomial") return kernel::KernelSpec::polynomial(j.at("degree").get<int>());
    if (family == "gaussian") return kernel::KernelSpec::gaussian(j.at("sigma_sq").get<double>());
    throw DataError("model JSON: unknown kernel family '" + family + "'");
}

json features_to_json(const FeatureVector& x) {
    return json::array({x.resilience, x.distance, x.intensity});
}

FeatureVector features_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw DataError("model JSON: feature vectors must have 3 entries");
    }
    FeatureVector x;
    x.resilience = j[0].get<double>();
    x.distance = j[1].get<double>();
    x.intensity = j[2].get<double>();
    return x;
}

}  // namespace

std::string to_json_string(const svm::SvmModel& model) {
    json j;
    j["model_type"] = "svm";
    j["kernel"] = kernel_to_json(model.kernel_spec);
    j["bias"] = model.bias;
    j["support_vectors"] = json::array();
    for (const FeatureVector& sv : model.support_vectors) {
        j["support_vectors"].push_back(features_to_json(sv));
    }
    j["coefficients"] = model.coefficients;
    j["sv_indices"] = model.sv_indices;
    j["training"] = {
        {"c", model.c},
        {"tol", model.tol},
        {"iterations", model.iterations_used},
        {"pair_updates", model.pair_updates},
        {"converged", model.converged},
        {"kkt_violation", model.final_kkt_violation},
    };
    return j.dump(2) + "\n";
}

std::string to_json_string(const logreg::LogRegModel& model) {
    json j;
    j["model_type"] = "logreg";
    j["weights"] = model.weights;
    j["training"] = {
        {"lambda", model.lambda},
        {"iterations", model.iterations_used},
        {"converged", model.converged},
        {"grad_norm", model.final_grad_norm},
    };
    return j.dump(2) + "\n";
}

AnyModel from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("model JSON parse error: ") + e.what());
    }
    try {
        const std::string type = j.at("model_type").get<std::string>();
        if (type == "svm") {
            svm::SvmModel model;
            model.kernel_spec = kernel_from_json(j.at("kernel"));
            model.bias = j.at("bias").get<double>();
            for (const json& sv : j.at("support_vectors")) {
                model.support_vectors.push_back(features_from_json(sv));
            }
            model.coefficients = j.at("coefficients").get<std::vector<double>>();
            if (model.coefficients.size() != model.support_vectors.size()) {
                throw DataError("model JSON: coefficient and support-vector counts differ");
            }
            if (j.contains("sv_indices")) {
                model.sv_indices = j.at("sv_indices").get<std::vector<int>>();
            }
            const json& t = j.at("training");
            model.c = t.at("c").get<double>();
            model.tol = t.at("tol").get<double>();
            model.iterations_used = t.at("iterations").get<int>();
            model.pair_updates = t.at("pair_updates").get<std::int64_t>();
            model.converged = t.at("converged").get<bool>();
            model.final_kkt_violation = t.at("kkt_violation").get<double>();
            return model;
        }
        if (type == "logreg") {
            logreg::LogRegModel model;
            const auto weights = j.at("weights").get<std::vector<double>>();
            if (weights.size() != static_cast<std::size_t>(logreg::kBasisSize)) {
                throw DataError("model JSON: logreg weights must have 20 entries");
            }
            std::copy(weights.begin(), weights.end(), model.weights.begin());
            const json& t = j.at("training");
            model.lambda = t.at("lambda").get<double>();
            model.iterations_used = t.at("iterations").get<int>();
            model.converged = t.at("converged").get<bool>();
            model.final_grad_norm = t.at("grad_norm").get<double>();
            return model;
        }
        throw DataError("model JSON: unknown model_type '" + type + "'");
    } catch (const json::exception& e) {
        throw DataError(std::string("model JSON schema mismatch: ") + e.what());
    }
}

void save_model(const std::string& path, const AnyModel& model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    std::visit([&](const auto& m) { out << to_json_string(m); }, model);
    if (!out) throw DataError("failed writing model to '" + path + "'");
}

AnyModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_string(text);
}

}  // namespace gridsvm::model_io
