#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gridsvm/datagen.hpp"

using namespace gridsvm;
using namespace gridsvm::datagen;

TEST_CASE("category wind band midpoints") {
    CHECK(category_midpoint_mph(1) == 84.5);
    CHECK(category_midpoint_mph(2) == 103.0);
    CHECK(category_midpoint_mph(3) == 120.0);
    CHECK(category_midpoint_mph(4) == 143.0);
    CHECK(category_midpoint_mph(5) == 170.0);
    CHECK_THROWS_AS(category_midpoint_mph(0), DataError);
    CHECK_THROWS_AS(category_midpoint_mph(6), DataError);
}

TEST_CASE("wind sampling") {
    Rng rng(41);

    SUBCASE("zero spread collapses to the midpoint") {
        CHECK(sample_wind_speed(1, 0.0, rng) == 84.5);
    }

    SUBCASE("draws are truncated at zero") {
        for (int i = 0; i < 2000; ++i) {
            CHECK(sample_wind_speed(5, 500.0, rng) >= 0.0);
        }
    }

    SUBCASE("law of large numbers at category 3") {
        const int n = 100000;
        const double sd = 10.0;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += sample_wind_speed(3, sd, rng);
        const double mean = sum / n;
        CHECK(std::abs(mean - 120.0) <= 3.0 * sd / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("normalization endpoints and clamping") {
    GenConfig cfg;
    cfg.max_wind_mph = 200.0;
    cfg.max_distance = 100.0;
    CHECK(normalize(200.0, 0.0, cfg).first == 1.0);
    CHECK(normalize(0.0, 0.0, cfg).first == 0.0);
    CHECK(normalize(100.0, 0.0, cfg).first == 0.5);
    CHECK(normalize(0.0, 50.0, cfg).second == 0.5);
    // noise overshoot clamps instead of spilling out of range
    CHECK(normalize(250.0, 120.0, cfg) == std::pair{1.0, 1.0});
}

TEST_CASE("generated datasets honor the config contract") {
    SUBCASE("default split is exactly half outage") {
        GenConfig cfg;
        const Dataset data = generate_dataset(cfg);
        REQUIRE(data.size() == 1000);
        int outages = 0;
        for (const auto& s : data) outages += (s.state == 1);
        CHECK(outages == 500);
    }

    SUBCASE("rounded class counts") {
        GenConfig cfg;
        cfg.sample_count = 10;
        cfg.outage_fraction = 0.3;
        const Dataset data = generate_dataset(cfg);
        int outages = 0;
        for (const auto& s : data) outages += (s.state == 1);
        CHECK(outages == 3);
    }

    SUBCASE("identical seeds give identical datasets") {
        GenConfig cfg;
        cfg.sample_count = 300;
        cfg.seed = 77;
        const Dataset a = generate_dataset(cfg);
        const Dataset b = generate_dataset(cfg);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].state == b[i].state);
            CHECK(a[i].features == b[i].features);
        }
        CHECK(to_csv(a) == to_csv(b));
    }

    SUBCASE("features stay in the unit cube across random configs") {
        Rng rng(42);
        for (int trial = 0; trial < 8; ++trial) {
            GenConfig cfg;
            cfg.sample_count = 200;
            cfg.seed = rng();
            cfg.noise_sd = 0.01 + uniform01(rng) * 0.3;
            cfg.wind_sd_mph = uniform01(rng) * 60.0;
            cfg.resilience_mode = trial % 2 == 0 ? ResilienceMode::Direct : ResilienceMode::Model;
            for (const auto& s : generate_dataset(cfg)) {
                CHECK(s.features.in_unit_cube());
            }
        }
    }

    SUBCASE("class-conditional separation directions") {
        const Dataset data = generate_dataset(GenConfig{});
        double intensity_out = 0.0, intensity_op = 0.0, resilience_out = 0.0, resilience_op = 0.0;
        int n_out = 0, n_op = 0;
        for (const auto& s : data) {
            if (s.state == 1) {
                intensity_out += s.features.intensity;
                resilience_out += s.features.resilience;
                ++n_out;
            } else {
                intensity_op += s.features.intensity;
                resilience_op += s.features.resilience;
                ++n_op;
            }
        }
        CHECK(intensity_out / n_out > intensity_op / n_op);
        CHECK(resilience_out / n_out < resilience_op / n_op);
    }
}

TEST_CASE("config validation") {
    GenConfig cfg;
    cfg.sample_count = 1;
    CHECK_THROWS_AS(generate_dataset(cfg), ConfigError);
    cfg = GenConfig{};
    cfg.outage_fraction = 1.0;
    CHECK_THROWS_AS(generate_dataset(cfg), ConfigError);
    cfg = GenConfig{};
    cfg.noise_sd = 0.0;
    CHECK_THROWS_AS(generate_dataset(cfg), ConfigError);
    cfg = GenConfig{};
    cfg.max_wind_mph = -5.0;
    CHECK_THROWS_AS(generate_dataset(cfg), ConfigError);
    cfg = GenConfig{};
    cfg.outage.resilience_sd[2] = 0.0;
    CHECK_THROWS_AS(generate_dataset(cfg), ConfigError);
}

TEST_CASE("csv round trip preserves the 6-decimal representation") {
    GenConfig cfg;
    cfg.sample_count = 50;
    cfg.seed = 3;
    const Dataset data = generate_dataset(cfg);
    const std::string csv = to_csv(data);
    CHECK(csv.rfind("resilience,distance,intensity,state\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);

    const Dataset parsed = parse_csv(csv);
    REQUIRE(parsed.size() == data.size());
    CHECK(to_csv(parsed) == csv);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].state == data[i].state);
        CHECK(std::abs(parsed[i].features.resilience - data[i].features.resilience) <= 5e-7);
    }
}

TEST_CASE("csv parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_csv(""), DataError);
    CHECK_THROWS_AS(parse_csv("a,b,c\n"), DataError);
    CHECK_THROWS_AS(parse_csv("resilience,distance,intensity,state\n0.1,0.2\n"), DataError);
    CHECK_THROWS_AS(parse_csv("resilience,distance,intensity,state\n0.1,0.2,0.3,2\n"), DataError);
    CHECK_THROWS_AS(parse_csv("resilience,distance,intensity,state\n0.1,1.5,0.3,+1\n"), DataError);
    CHECK_THROWS_AS(parse_csv("resilience,distance,intensity,state\n0.1,x,0.3,-1\n"), DataError);
    CHECK_NOTHROW(parse_csv("resilience,distance,intensity,state\n0.1,0.2,0.3,+1\n\n"));
    // bare "1" accepted for the positive state
    const Dataset d = parse_csv("resilience,distance,intensity,state\n0.1,0.2,0.3,1\n");
    CHECK(d[0].state == 1);
}

TEST_CASE("generator config file") {
    const std::string path = "gridsvm_test_gen.cfg";
    {
        std::ofstream out(path);
        out << "sample_count = 60\n"
               "outage_fraction = 0.25\n"
               "seed = 11\n"
               "resilience_mode = model\n"
               "outage.category_weights = 0.1, 0.1, 0.2, 0.3, 0.3\n"
               "outage.resilience_sd = 0.2\n"  // single value broadcast
               "operational.distance_mean = 0.5, 0.55, 0.6, 0.65, 0.7\n";
    }
    const GenConfig cfg = load_gen_config(path);
    CHECK(cfg.sample_count == 60);
    CHECK(cfg.outage_fraction == 0.25);
    CHECK(cfg.seed == 11);
    CHECK(cfg.resilience_mode == ResilienceMode::Model);
    CHECK(cfg.outage.category_weights[4] == 0.3);
    CHECK(cfg.outage.resilience_sd[0] == 0.2);
    CHECK(cfg.outage.resilience_sd[4] == 0.2);
    CHECK(cfg.operational.distance_mean[2] == 0.6);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "outage.category_weights = 0.5, 0.5\n";
    }
    CHECK_THROWS_AS(load_gen_config(path), ConfigError);
    std::remove(path.c_str());
}
