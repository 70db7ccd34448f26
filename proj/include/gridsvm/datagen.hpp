#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "gridsvm/hazard.hpp"
#include "gridsvm/rng.hpp"
#include "gridsvm/types.hpp"

namespace gridsvm::datagen {

// Class-conditional sampling profile: per-category normal parameters for the
// resilience and distance features, plus category draw weights. Indexed by
// category - 1.
struct ClassProfile {
    std::array<double, 5> category_weights{};  // unnormalized draw weights
    std::array<double, 5> resilience_mean{};
    std::array<double, 5> resilience_sd{};
    std::array<double, 5> distance_mean{};
    std::array<double, 5> distance_sd{};

    void validate() const;
};

enum class ResilienceMode {
    Direct,  // class-conditional normal draw (default)
    Model,   // computed via hazard::resilience_index from the sampled event
};

struct GenConfig {
    int sample_count = 1000;
    double outage_fraction = 0.5;
    double noise_sd = 0.02;       // Gaussian noise added to each normalized feature
    double wind_sd_mph = 10.0;    // spread around the category wind midpoint
    double max_wind_mph = 200.0;  // normalization ceiling for intensity
    double max_distance = 100.0;  // normalization ceiling for distance (miles)
    std::uint64_t seed = 1;
    ResilienceMode resilience_mode = ResilienceMode::Direct;

    ClassProfile outage;       // state +1
    ClassProfile operational;  // state -1
    hazard::HazardConfig hazard_config;  // used by ResilienceMode::Model

    GenConfig();
    void validate() const;
};

// Saffir-Simpson one-minute sustained wind band midpoint; category 5 is
// open-ended and pinned at 170 mph.
double category_midpoint_mph(int category);

// Normal draw centered on the category midpoint, truncated at zero.
double sample_wind_speed(int category, double sd_mph, Rng& rng);

// (intensity, distance) = raw / max, clamped into [0,1].
std::pair<double, double> normalize(double raw_wind_mph, double raw_distance, const GenConfig& cfg);

// Deterministic for a fixed config: exactly round(outage_fraction * n)
// outage samples first, operational samples after, features in [0,1].
Dataset generate_dataset(const GenConfig& cfg);

// CSV with header "resilience,distance,intensity,state", 6-decimal features,
// state +1/-1, LF line endings.
std::string to_csv(const Dataset& dataset);
void write_csv(const std::string& path, const Dataset& dataset);
Dataset read_csv(const std::string& path);
Dataset parse_csv(const std::string& text, const std::string& origin = "<string>");

// key = value form of every GenConfig field; missing keys keep defaults.
GenConfig load_gen_config(const std::string& path);

}  // namespace gridsvm::datagen
