#include "gridsvm/kernel.hpp"

#include <cmath>
#include <cstdlib>

namespace gridsvm::kernel {

KernelSpec KernelSpec::parse(const std::string& text) {
    if (text == "linear") return linear();
    if (text.rfind("poly", 0) == 0) {
        const std::string rest = text.substr(4);
        char* end = nullptr;
        const long degree = std::strtol(rest.c_str(), &end, 10);
        if (rest.empty() || end == rest.c_str() || *end != '\0' || degree < 1) {
            throw ConfigError("bad polynomial kernel '" + text + "', expected poly<degree>");
        }
        return polynomial(static_cast<int>(degree));
    }
    if (text.rfind("gaussian", 0) == 0) {
        if (text == "gaussian") return gaussian();
        if (text.size() > 9 && text[8] == ':') {
            const std::string rest = text.substr(9);
            char* end = nullptr;
            const double sigma_sq = std::strtod(rest.c_str(), &end);
            if (end == rest.c_str() || *end != '\0' || !(sigma_sq > 0.0)) {
                throw ConfigError("bad gaussian kernel '" + text + "', expected gaussian:<sigma_sq>");
            }
            return gaussian(sigma_sq);
        }
    }
    throw ConfigError("unknown kernel '" + text +
                      "', expected linear | poly<degree> | gaussian[:<sigma_sq>]");
}

std::string KernelSpec::to_string() const {
    switch (family) {
        case Family::Linear: return "linear";
        case Family::Polynomial: return "poly" + std::to_string(degree);
        case Family::Gaussian: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "gaussian:%g", sigma_sq);
            return buf;
        }
    }
    return "?";
}

void KernelSpec::validate() const {
    if (family == Family::Polynomial && degree < 1) {
        throw ConfigError("polynomial kernel degree must be >= 1");
    }
    if (family == Family::Gaussian && !(sigma_sq > 0.0)) {
        throw ConfigError("gaussian kernel sigma_sq must be > 0");
    }
}

double kernel_eval(const KernelSpec& spec, const FeatureVector& a, const FeatureVector& b) {
    switch (spec.family) {
        case Family::Linear:
            return dot(a, b);
        case Family::Polynomial: {
            const double base = dot(a, b) + 1.0;
            double result = 1.0;
            for (int i = 0; i < spec.degree; ++i) result *= base;
            return result;
        }
        case Family::Gaussian:
            return std::exp(-squared_distance(a, b) / (2.0 * spec.sigma_sq));
    }
    return 0.0;
}

GramMatrix gram_matrix(const KernelSpec& spec, std::span<const FeatureVector> samples) {
    spec.validate();
    const std::size_t n = samples.size();
    GramMatrix gram(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double value = kernel_eval(spec, samples[i], samples[j]);
            gram(i, j) = value;
            gram(j, i) = value;
        }
    }
    return gram;
}

}  // namespace gridsvm::kernel
