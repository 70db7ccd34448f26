#include "gridsvm/hazard.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gridsvm/config_file.hpp"

namespace gridsvm::hazard {

void HazardParams::validate() const {
    if (!(annual_rate > 0.0)) {
        throw ConfigError("hazard annual_rate must be > 0");
    }
    double sum = 0.0;
    for (double p : category_probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError("hazard category probability outside [0,1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("hazard category probabilities must sum to 1");
    }
}

const char* to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::GenerationUnit: return "generation";
        case ComponentClass::TransmissionLine: return "transmission";
        case ComponentClass::DistributionLine: return "distribution";
        case ComponentClass::Substation: return "substation";
    }
    return "?";
}

ComponentClass component_class_from_string(const std::string& name) {
    for (ComponentClass c : kComponentClasses) {
        if (name == to_string(c)) return c;
    }
    throw ConfigError("unknown component class '" + name + "'");
}

const char* to_string(DamageState s) {
    switch (s) {
        case DamageState::Low: return "low";
        case DamageState::Moderate: return "moderate";
        case DamageState::Severe: return "severe";
        case DamageState::Complete: return "complete";
    }
    return "?";
}

const FragilityCurve::Band& FragilityCurve::band(DamageState s) const {
    switch (s) {
        case DamageState::Low: return low;
        case DamageState::Moderate: return moderate;
        case DamageState::Severe: return severe;
        case DamageState::Complete: return complete;
    }
    throw std::out_of_range("damage state");
}

FragilityCurve::Band& FragilityCurve::band(DamageState s) {
    return const_cast<FragilityCurve::Band&>(
        static_cast<const FragilityCurve&>(*this).band(s));
}

void FragilityCurve::validate() const {
    for (const Band* b : {&low, &moderate, &severe, &complete}) {
        if (!(b->sd_mph > 0.0)) {
            throw ConfigError("fragility standard deviation must be > 0");
        }
    }
    if (!(low.mean_mph < moderate.mean_mph && moderate.mean_mph < severe.mean_mph &&
          severe.mean_mph < complete.mean_mph)) {
        throw ConfigError("fragility means must strictly increase low < moderate < severe < complete");
    }
}

FragilityCurve default_fragility(ComponentClass c) {
    double complete_mean = 0.0;
    switch (c) {
        case ComponentClass::GenerationUnit: complete_mean = 130.0; break;
        case ComponentClass::TransmissionLine: complete_mean = 120.0; break;
        case ComponentClass::DistributionLine: complete_mean = 110.0; break;
        case ComponentClass::Substation: complete_mean = 125.0; break;
    }
    FragilityCurve curve;
    curve.low = {complete_mean - 60.0, 20.0};
    curve.moderate = {complete_mean - 40.0, 20.0};
    curve.severe = {complete_mean - 20.0, 20.0};
    curve.complete = {complete_mean, 20.0};
    return curve;
}

double interarrival_pdf(double t_years, const HazardParams& params) {
    params.validate();
    if (t_years < 0.0) return 0.0;
    return params.annual_rate * std::exp(-params.annual_rate * t_years);
}

double category_probability(int category, const HazardParams& params) {
    if (category < 1 || category > 5) {
        throw DataError("hurricane category must be in 1..5, got " + std::to_string(category));
    }
    return params.category_probs[static_cast<std::size_t>(category - 1)];
}

double damage_probability(const FragilityCurve& curve, DamageState state, double wind_mph) {
    const FragilityCurve::Band& b = curve.band(state);
    const double z = (wind_mph - b.mean_mph) / b.sd_mph;
    // Phi(z) = erfc(-z / sqrt(2)) / 2, accurate in both tails.
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double resilience_index(const FragilityCurve& curve, int category, double wind_mph,
                        const HazardParams& params, DamageState state) {
    const double p_damage = damage_probability(curve, state, wind_mph);
    const double p_cat = category_probability(category, params);
    return 1.0 - 0.5 * (p_damage + p_cat);
}

HazardConfig load_hazard_config(const std::string& path) {
    const KeyValueFile kv = KeyValueFile::load(path);
    HazardConfig config;

    if (kv.has("annual_rate")) {
        config.params.annual_rate = kv.get_double("annual_rate");
    }
    if (kv.has("category_probs")) {
        const std::vector<double> probs = kv.get_double_list("category_probs");
        if (probs.size() != config.params.category_probs.size()) {
            throw ConfigError(path + ": category_probs needs exactly 5 entries");
        }
        for (std::size_t i = 0; i < probs.size(); ++i) {
            config.params.category_probs[i] = probs[i];
        }
    }

    for (ComponentClass c : kComponentClasses) {
        for (DamageState s : {DamageState::Low, DamageState::Moderate, DamageState::Severe,
                              DamageState::Complete}) {
            const std::string prefix =
                std::string("fragility.") + to_string(c) + "." + to_string(s);
            FragilityCurve::Band& band = config.curve(c).band(s);
            if (kv.has(prefix + ".mean")) band.mean_mph = kv.get_double(prefix + ".mean");
            if (kv.has(prefix + ".sd")) band.sd_mph = kv.get_double(prefix + ".sd");
        }
    }

    config.params.validate();
    for (ComponentClass c : kComponentClasses) {
        config.curve(c).validate();
    }
    return config;
}

}  // namespace gridsvm::hazard
