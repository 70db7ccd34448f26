#pragma once

#include <array>
#include <string>

#include "gridsvm/types.hpp"

namespace gridsvm::hazard {

// Hurricane occurrence model: Poisson arrivals at annual_rate, category
// distribution over Saffir-Simpson 1..5.
struct HazardParams {
    double annual_rate = 1.0 / 7.0;
    std::array<double, 5> category_probs = {0.53, 0.19, 0.15, 0.08, 0.05};

    void validate() const;
};

enum class ComponentClass {
    GenerationUnit,
    TransmissionLine,
    DistributionLine,
    Substation,
};

constexpr std::array<ComponentClass, 4> kComponentClasses = {
    ComponentClass::GenerationUnit,
    ComponentClass::TransmissionLine,
    ComponentClass::DistributionLine,
    ComponentClass::Substation,
};

const char* to_string(ComponentClass c);
ComponentClass component_class_from_string(const std::string& name);

enum class DamageState { Low, Moderate, Severe, Complete };

const char* to_string(DamageState s);

// Normal-CDF fragility function per damage state: P(state | wind) =
// Phi((wind - mean) / sd), means strictly increasing across states.
struct FragilityCurve {
    struct Band {
        double mean_mph = 0.0;
        double sd_mph = 1.0;
    };

    Band low;
    Band moderate;
    Band severe;
    Band complete;

    const Band& band(DamageState s) const;
    Band& band(DamageState s);
    void validate() const;
};

// Calibration defaults, not field-measured parameters. Complete-damage mean
// wind 130/120/110/125 mph with sd 20 mph; lower states step down 20 mph each.
FragilityCurve default_fragility(ComponentClass c);

// Density of the time between successive hurricanes (exponential, rate
// annual_rate). Zero for negative t.
double interarrival_pdf(double t_years, const HazardParams& params);

// Stored probability of a category-1..5 hurricane.
double category_probability(int category, const HazardParams& params);

// Phi((wind - mean(state)) / sd(state)); non-decreasing in wind.
double damage_probability(const FragilityCurve& curve, DamageState state, double wind_mph);

// Resilience index in [0,1]: 1 - ((P_damage(state, wind) + p_category) / 2).
// Higher = more resilient. The damage state defaults to complete loss of
// function; overridable per run.
double resilience_index(const FragilityCurve& curve, int category, double wind_mph,
                        const HazardParams& params,
                        DamageState state = DamageState::Complete);

inline double resilience_index(ComponentClass c, int category, double wind_mph,
                               const HazardParams& params,
                               DamageState state = DamageState::Complete) {
    return resilience_index(default_fragility(c), category, wind_mph, params, state);
}

// All hazard-side parameters in one loadable bundle.
struct HazardConfig {
    HazardParams params;
    std::array<FragilityCurve, 4> fragility = {
        default_fragility(ComponentClass::GenerationUnit),
        default_fragility(ComponentClass::TransmissionLine),
        default_fragility(ComponentClass::DistributionLine),
        default_fragility(ComponentClass::Substation),
    };

    const FragilityCurve& curve(ComponentClass c) const {
        return fragility[static_cast<int>(c)];
    }
    FragilityCurve& curve(ComponentClass c) { return fragility[static_cast<int>(c)]; }
};

// Plain-text key=value config, '#' comments. Keys:
//   annual_rate = 0.1428571
//   category_probs = 0.53, 0.19, 0.15, 0.08, 0.05
//   fragility.<class>.<state>.mean = <mph>
//   fragility.<class>.<state>.sd = <mph>
// with <class> in {generation, transmission, distribution, substation} and
// <state> in {low, moderate, severe, complete}. Missing keys keep defaults.
HazardConfig load_hazard_config(const std::string& path);

}  // namespace gridsvm::hazard
