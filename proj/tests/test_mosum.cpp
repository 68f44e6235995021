#include "burnscan/mosum.hpp"

#include "burnscan/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <stdexcept>

using namespace burnscan;

TEST_CASE("exact-line input yields an all-zero path") {
    std::vector<double> v(322);
    for (int t = 1; t <= 322; ++t) v[t - 1] = 0.1 + 0.002 * t;
    const MosumPath path = ols_mosum(v, 0.25);
    CHECK(path.sigma_hat == 0.0);
    CHECK(path.window_len == window_length(322, 0.25));
    CHECK(path.statistics.size() == 322 - path.window_len + 1);
    for (double s : path.statistics) CHECK(s == 0.0);
}

TEST_CASE("level shift maximizes the statistic at a window straddling the shift") {
    std::vector<double> v(322);
    for (int t = 1; t <= 322; ++t) v[t - 1] = t <= 161 ? 0.7 : 0.5;
    const MosumPath path = ols_mosum(v, 0.25);

    const auto [brute_max, brute_arg] = oracle::brute_mosum_max(v, 0.25);
    int arg = 0;
    for (std::size_t j = 1; j < path.statistics.size(); ++j) {
        if (std::abs(path.statistics[j]) > std::abs(path.statistics[arg])) {
            arg = static_cast<int>(j);
        }
    }
    CHECK(path.max_abs() == doctest::Approx(brute_max).epsilon(1e-12));
    CHECK(arg == brute_arg);
    // the extremal window sits at the shift: it contains or starts at the
    // first post-shift sample (1-based 162)
    CHECK(arg + 1 <= 162);
    CHECK(arg + 1 + path.window_len >= 162);
}

TEST_CASE("statistics are invariant under positive affine transforms") {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::uniform_real_distribution<double> shift(-5.0, 5.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> v(150), w(150);
        const double a = shift(gen), b = scale(gen);
        for (int i = 0; i < 150; ++i) {
            v[i] = noise(gen);
            w[i] = a + b * v[i];
        }
        const MosumPath p1 = ols_mosum(v, 0.2);
        const MosumPath p2 = ols_mosum(w, 0.2);
        REQUIRE(p1.statistics.size() == p2.statistics.size());
        for (std::size_t j = 0; j < p1.statistics.size(); ++j) {
            CHECK(std::abs(p1.statistics[j] - p2.statistics[j]) < 1e-10);
        }
    }
}

TEST_CASE("mosum path matches the brute-force oracle on noisy input") {
    std::mt19937_64 gen(17);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<double> v(322);
    for (int t = 1; t <= 322; ++t) v[t - 1] = 0.4 + 0.0005 * t + noise(gen);
    for (double h : {0.15, 0.23, 0.45}) {
        const auto [brute_max, brute_arg] = oracle::brute_mosum_max(v, h);
        const MosumPath path = ols_mosum(v, h);
        CHECK(path.max_abs() == doctest::Approx(brute_max).epsilon(1e-10));
        CHECK(std::abs(path.statistics[brute_arg]) == doctest::Approx(brute_max).epsilon(1e-10));
    }
}

TEST_CASE("preconditions") {
    std::vector<double> v(50, 0.1);
    CHECK_THROWS_AS(ols_mosum(v, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ols_mosum(v, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ols_mosum(std::vector<double>(4, 0.1), 0.25), std::invalid_argument);

    SampledSeries gappy(std::vector<double>(322, 0.1), std::vector<std::uint8_t>(322, 1), 2003);
    gappy.mask[0] = 0;
    CHECK_THROWS_AS(ols_mosum(gappy, 0.15), std::invalid_argument);
}

TEST_CASE("critical value table lookups") {
    const CriticalValueTable& t = CriticalValueTable::builtin();
    for (double h : {0.15, 0.23, 0.45}) {
        CHECK(t.critical_value(h, 0.05) > t.critical_value(h, 0.10));
        CHECK(t.critical_value(h, 0.025) > t.critical_value(h, 0.05));
        CHECK(t.critical_value(h, 0.01) > t.critical_value(h, 0.025));
    }
    // the window widens with h, so the max of fewer, wider sums grows
    CHECK(t.critical_value(0.45, 0.05) > t.critical_value(0.15, 0.05));

    CHECK(mosum_critical_value(0.15, 0.05) == t.critical_value(0.15, 0.05));
    CHECK_THROWS_AS((void)t.critical_value(0.30, 0.05), std::invalid_argument);
    CHECK_THROWS_AS((void)t.critical_value(0.15, 0.07), std::invalid_argument);
}

TEST_CASE("table save/load round-trips and the shipped file matches the builtin") {
    const auto tmp = std::filesystem::temp_directory_path() / "burnscan_critvals_test.txt";
    CriticalValueTable::builtin().save(tmp.string());
    const CriticalValueTable loaded = CriticalValueTable::load(tmp.string());
    REQUIRE(loaded.rows().size() == CriticalValueTable::builtin().rows().size());
    for (std::size_t i = 0; i < loaded.rows().size(); ++i) {
        CHECK(loaded.rows()[i].value ==
              doctest::Approx(CriticalValueTable::builtin().rows()[i].value).epsilon(1e-8));
    }
    std::filesystem::remove(tmp);
}

#ifdef BURNSCAN_SOURCE_DIR
TEST_CASE("shipped table file matches the compiled-in values") {
    const std::string path = std::string(BURNSCAN_SOURCE_DIR) + "/data/critical_values.txt";
    const CriticalValueTable shipped = CriticalValueTable::load(path);
    const CriticalValueTable& builtin = CriticalValueTable::builtin();
    REQUIRE(shipped.rows().size() == builtin.rows().size());
    for (std::size_t i = 0; i < shipped.rows().size(); ++i) {
        CHECK(shipped.rows()[i].h == doctest::Approx(builtin.rows()[i].h));
        CHECK(shipped.rows()[i].alpha == doctest::Approx(builtin.rows()[i].alpha));
        CHECK(shipped.rows()[i].value == doctest::Approx(builtin.rows()[i].value).epsilon(1e-8));
    }
}
#endif

TEST_CASE("generator is deterministic in its seed") {
    const CriticalValueTable a = generate_critical_values({0.2}, {0.05, 0.1}, 64, 2000, 99);
    const CriticalValueTable b = generate_critical_values({0.2}, {0.05, 0.1}, 64, 2000, 99);
    REQUIRE(a.rows().size() == b.rows().size());
    for (std::size_t i = 0; i < a.rows().size(); ++i) {
        CHECK(a.rows()[i].value == b.rows()[i].value);
    }
    const CriticalValueTable c = generate_critical_values({0.2}, {0.05, 0.1}, 64, 2000, 100);
    CHECK(a.rows()[0].value != c.rows()[0].value);
}

TEST_CASE("null rejection rate calibrates to the nominal level") {
    // reduced-size version of the acceptance calibration check
    const int reps = 5000;
    const int n = 322;
    int rejections = 0;
    const double c = mosum_critical_value(0.15, 0.05);
    for (int r = 0; r < reps; ++r) {
        Rng rng(derive_stream(31337, r, StreamTag::Noise));
        std::vector<double> v(n);
        for (double& x : v) x = rng.normal();
        rejections += ols_mosum(v, 0.15).max_abs() > c;
    }
    const double rate = static_cast<double>(rejections) / reps;
    CHECK(rate > 0.035);
    CHECK(rate < 0.065);
}
