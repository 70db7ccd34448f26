#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsvm {

// Thrown for invalid configuration or arguments (CLI maps these to exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown for bad input data or failed runtime operations (CLI exit code 2).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The three normalized classifier features, each in [0,1].
struct FeatureVector {
    double resilience = 0.0;  // component resilience index
    double distance = 0.0;    // distance from hurricane center / max distance
    double intensity = 0.0;   // one-minute sustained wind speed / max wind

    static constexpr int kDim = 3;

    double operator[](int i) const {
        switch (i) {
            case 0: return resilience;
            case 1: return distance;
            case 2: return intensity;
        }
        throw std::out_of_range("FeatureVector index " + std::to_string(i));
    }

    double& operator[](int i) {
        switch (i) {
            case 0: return resilience;
            case 1: return distance;
            case 2: return intensity;
        }
        throw std::out_of_range("FeatureVector index " + std::to_string(i));
    }

    bool operator==(const FeatureVector& o) const = default;

    bool in_unit_cube() const {
        for (int i = 0; i < kDim; ++i) {
            if (!((*this)[i] >= 0.0 && (*this)[i] <= 1.0)) return false;
        }
        return true;
    }

    bool finite() const {
        return std::isfinite(resilience) && std::isfinite(distance) && std::isfinite(intensity);
    }
};

inline double dot(const FeatureVector& a, const FeatureVector& b) {
    return a.resilience * b.resilience + a.distance * b.distance + a.intensity * b.intensity;
}

inline double squared_distance(const FeatureVector& a, const FeatureVector& b) {
    const double dr = a.resilience - b.resilience;
    const double dd = a.distance - b.distance;
    const double di = a.intensity - b.intensity;
    return dr * dr + dd * dd + di * di;
}

// One training/validation record: features plus the component state,
// +1 = outage, -1 = operational.
struct LabeledSample {
    FeatureVector features;
    int state = -1;
};

using Dataset = std::vector<LabeledSample>;

}  // namespace gridsvm
