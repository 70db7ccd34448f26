#include "gridsvm/datagen.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridsvm/config_file.hpp"

namespace gridsvm::datagen {

namespace {

double clamp01(double v) { return std::min(std::max(v, 0.0), 1.0); }

}  // namespace

void ClassProfile::validate() const {
    double total = 0.0;
    for (double w : category_weights) {
        if (!(w >= 0.0)) throw ConfigError("class profile category weights must be >= 0");
        total += w;
    }
    if (!(total > 0.0)) throw ConfigError("class profile category weights must not all be zero");
    for (int i = 0; i < 5; ++i) {
        if (!(resilience_sd[i] > 0.0) || !(distance_sd[i] > 0.0)) {
            throw ConfigError("class profile standard deviations must stay > 0 for categories 1..5");
        }
    }
}

GenConfig::GenConfig() {
    // Calibration defaults. The feature that separates the classes alternates
    // across the category bands (resilience-dominated in bands 1 and 4,
    // distance-dominated in 2-3 and 5), giving the clusters category-local
    // structure on top of the global offsets. Outage clusters are the more
    // diffuse ones, so misses outnumber false alarms.
    outage.category_weights = {0.28, 0.18, 0.17, 0.17, 0.20};
    outage.resilience_mean = {0.26, 0.52, 0.50, 0.27, 0.52};
    outage.resilience_sd = {0.17, 0.17, 0.17, 0.17, 0.17};
    outage.distance_mean = {0.52, 0.27, 0.25, 0.52, 0.26};
    outage.distance_sd = {0.17, 0.17, 0.17, 0.17, 0.17};

    operational.category_weights = {0.55, 0.19, 0.12, 0.08, 0.06};
    operational.resilience_mean = {0.68, 0.44, 0.42, 0.70, 0.45};
    operational.resilience_sd = {0.12, 0.12, 0.12, 0.12, 0.12};
    operational.distance_mean = {0.44, 0.69, 0.71, 0.45, 0.70};
    operational.distance_sd = {0.12, 0.12, 0.12, 0.12, 0.12};
}

void GenConfig::validate() const {
    if (sample_count < 2) throw ConfigError("sample_count must be >= 2");
    if (!(outage_fraction > 0.0 && outage_fraction < 1.0)) {
        throw ConfigError("outage_fraction must be strictly between 0 and 1");
    }
    if (!(noise_sd > 0.0)) throw ConfigError("noise_sd must be > 0");
    if (!(wind_sd_mph >= 0.0)) throw ConfigError("wind_sd_mph must be >= 0");
    if (!(max_wind_mph > 0.0)) throw ConfigError("max_wind_mph must be > 0");
    if (!(max_distance > 0.0)) throw ConfigError("max_distance must be > 0");
    outage.validate();
    operational.validate();
    hazard_config.params.validate();
}

double category_midpoint_mph(int category) {
    switch (category) {
        case 1: return 84.5;   // 74-95 mph
        case 2: return 103.0;  // 96-110 mph
        case 3: return 120.0;  // 111-129 mph
        case 4: return 143.0;  // 130-156 mph
        case 5: return 170.0;  // >= 157 mph, open band
    }
    throw DataError("hurricane category must be in 1..5, got " + std::to_string(category));
}

double sample_wind_speed(int category, double sd_mph, Rng& rng) {
    const double midpoint = category_midpoint_mph(category);
    return std::max(0.0, normal(midpoint, sd_mph, rng));
}

std::pair<double, double> normalize(double raw_wind_mph, double raw_distance, const GenConfig& cfg) {
    return {clamp01(raw_wind_mph / cfg.max_wind_mph), clamp01(raw_distance / cfg.max_distance)};
}

namespace {

LabeledSample generate_one(int state, const ClassProfile& profile, const GenConfig& cfg, Rng& rng) {
    const int cat = weighted_index(profile.category_weights, rng) + 1;
    const int ci = cat - 1;
    const double wind = sample_wind_speed(cat, cfg.wind_sd_mph, rng);
    const double raw_distance =
        std::max(0.0, normal(profile.distance_mean[ci] * cfg.max_distance,
                             profile.distance_sd[ci] * cfg.max_distance, rng));
    const auto [intensity, distance] = normalize(wind, raw_distance, cfg);

    double resilience;
    if (cfg.resilience_mode == ResilienceMode::Direct) {
        resilience = normal(profile.resilience_mean[ci], profile.resilience_sd[ci], rng);
    } else {
        const auto component = static_cast<hazard::ComponentClass>(rng() % 4);
        resilience = hazard::resilience_index(cfg.hazard_config.curve(component), cat, wind,
                                              cfg.hazard_config.params);
    }

    LabeledSample sample;
    sample.state = state;
    sample.features.resilience = clamp01(resilience + normal(0.0, cfg.noise_sd, rng));
    sample.features.distance = clamp01(distance + normal(0.0, cfg.noise_sd, rng));
    sample.features.intensity = clamp01(intensity + normal(0.0, cfg.noise_sd, rng));
    return sample;
}

}  // namespace

Dataset generate_dataset(const GenConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const int n_outage = static_cast<int>(std::lround(cfg.outage_fraction * cfg.sample_count));
    const int n_operational = cfg.sample_count - n_outage;

    Dataset dataset;
    dataset.reserve(static_cast<std::size_t>(cfg.sample_count));
    for (int i = 0; i < n_outage; ++i) {
        dataset.push_back(generate_one(+1, cfg.outage, cfg, rng));
    }
    for (int i = 0; i < n_operational; ++i) {
        dataset.push_back(generate_one(-1, cfg.operational, cfg, rng));
    }
    return dataset;
}

std::string to_csv(const Dataset& dataset) {
    std::string out = "resilience,distance,intensity,state\n";
    char line[128];
    for (const LabeledSample& s : dataset) {
        std::snprintf(line, sizeof(line), "%.6f,%.6f,%.6f,%+d\n", s.features.resilience,
                      s.features.distance, s.features.intensity, s.state);
        out += line;
    }
    return out;
}

void write_csv(const std::string& path, const Dataset& dataset) {
    std::ofstream out(path, std::ios::binary);  // keep LF endings everywhere
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << to_csv(dataset);
    if (!out) throw DataError("failed writing dataset to '" + path + "'");
}

Dataset read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), path);
}

Dataset parse_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(origin + ": empty dataset file");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "resilience,distance,intensity,state") {
        throw DataError(origin + ": expected header 'resilience,distance,intensity,state'");
    }

    Dataset dataset;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno);

        std::array<std::string, 4> fields;
        std::size_t start = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t comma = line.find(',', start);
            const bool last = (f == 3);
            if (last != (comma == std::string::npos)) {
                throw DataError(where + ": expected 4 comma-separated fields");
            }
            fields[f] = last ? line.substr(start) : line.substr(start, comma - start);
            start = comma + 1;
        }

        LabeledSample sample;
        for (int f = 0; f < 3; ++f) {
            char* end = nullptr;
            const double value = std::strtod(fields[f].c_str(), &end);
            if (end == fields[f].c_str() || *end != '\0') {
                throw DataError(where + ": non-numeric feature '" + fields[f] + "'");
            }
            if (!(value >= 0.0 && value <= 1.0)) {
                throw DataError(where + ": feature " + fields[f] + " outside [0,1]");
            }
            sample.features[f] = value;
        }
        if (fields[3] == "+1" || fields[3] == "1") {
            sample.state = 1;
        } else if (fields[3] == "-1") {
            sample.state = -1;
        } else {
            throw DataError(where + ": state must be +1 or -1, got '" + fields[3] + "'");
        }
        dataset.push_back(sample);
    }
    return dataset;
}

GenConfig load_gen_config(const std::string& path) {
    const KeyValueFile kv = KeyValueFile::load(path);
    GenConfig cfg;

    if (kv.has("sample_count")) cfg.sample_count = static_cast<int>(kv.get_int("sample_count"));
    if (kv.has("outage_fraction")) cfg.outage_fraction = kv.get_double("outage_fraction");
    if (kv.has("noise_sd")) cfg.noise_sd = kv.get_double("noise_sd");
    if (kv.has("wind_sd_mph")) cfg.wind_sd_mph = kv.get_double("wind_sd_mph");
    if (kv.has("max_wind_mph")) cfg.max_wind_mph = kv.get_double("max_wind_mph");
    if (kv.has("max_distance")) cfg.max_distance = kv.get_double("max_distance");
    if (kv.has("seed")) cfg.seed = static_cast<std::uint64_t>(kv.get_int("seed"));
    if (kv.has("resilience_mode")) {
        const std::string& mode = kv.get("resilience_mode");
        if (mode == "direct") {
            cfg.resilience_mode = ResilienceMode::Direct;
        } else if (mode == "model") {
            cfg.resilience_mode = ResilienceMode::Model;
        } else {
            throw ConfigError(path + ": resilience_mode must be 'direct' or 'model'");
        }
    }

    const auto load_profile = [&](const std::string& name, ClassProfile& profile) {
        // Each key takes 5 per-category values, or a single value broadcast.
        const auto per_category = [&](const std::string& key, std::array<double, 5>& target) {
            if (!kv.has(name + "." + key)) return;
            const auto v = kv.get_double_list(name + "." + key);
            if (v.size() == 1) {
                target.fill(v[0]);
            } else if (v.size() == 5) {
                for (int i = 0; i < 5; ++i) target[i] = v[i];
            } else {
                throw ConfigError(path + ": " + name + "." + key + " needs 1 or 5 values");
            }
        };
        per_category("category_weights", profile.category_weights);
        per_category("resilience_mean", profile.resilience_mean);
        per_category("resilience_sd", profile.resilience_sd);
        per_category("distance_mean", profile.distance_mean);
        per_category("distance_sd", profile.distance_sd);
    };
    load_profile("outage", cfg.outage);
    load_profile("operational", cfg.operational);

    cfg.validate();
    return cfg;
}

}  // namespace gridsvm::datagen
