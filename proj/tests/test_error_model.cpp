#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polebound/error_model.hpp"

using namespace polebound;

TEST_CASE("p_detect closed forms") {
    // N = 2 special case: 1 - epsilon/(2 pi) = 1 - 0.0015915494309189535
    CHECK(p_detect(0.01, 2) == doctest::Approx(0.9984084505690811).epsilon(1e-12));
    // general form: 1 - 2 sqrt(pi) epsilon / (2N - 3) = 1 - 0.03544907701811032/7
    CHECK(p_detect(0.01, 5) == doctest::Approx(0.9949358461402700).epsilon(1e-12));
    // epsilon -> 0 detects always
    CHECK(p_detect(1e-15, 2) > 1.0 - 1e-14);
    CHECK(p_detect(1e-15, 9) > 1.0 - 1e-14);
    // clamped to [0, 1]
    for (double eps : {0.001, 0.1, 0.9, 0.999}) {
        for (int n : {2, 3, 4, 10, 100}) {
            const double p = p_detect(eps, n);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
    }
}

TEST_CASE("p_detect domain errors") {
    CHECK_THROWS_AS(p_detect(0.01, 1), std::domain_error);
    CHECK_THROWS_AS(p_detect(0.01, 0), std::domain_error);
    CHECK_THROWS_AS(p_detect(0.0, 2), std::domain_error);
    CHECK_THROWS_AS(p_detect(1.0, 2), std::domain_error);
}

TEST_CASE("p_detect monotonicity") {
    // decreasing in epsilon
    for (int n : {2, 3, 7}) {
        double prev = 1.0;
        for (double eps : {0.001, 0.01, 0.05, 0.2, 0.5}) {
            const double p = p_detect(eps, n);
            CHECK(p <= prev);
            prev = p;
        }
    }
    // increasing in n_poles for n >= 3
    for (double eps : {0.01, 0.2}) {
        double prev = 0.0;
        for (int n = 3; n <= 12; ++n) {
            const double p = p_detect(eps, n);
            CHECK(p >= prev);
            prev = p;
        }
    }
}

TEST_CASE("p_false_negative closed form") {
    CHECK(p_false_negative(0.05, 1) ==
          doctest::Approx(0.05 / (2.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(p_false_negative(0.01, 3) == doctest::Approx(4.0316e-9).epsilon(1e-4));
    CHECK(p_false_negative(1e-14, 2) < 1e-28);
    // strictly decreasing in M
    for (double eps : {0.01, 0.3, 0.9}) {
        for (int m = 1; m < 6; ++m)
            CHECK(p_false_negative(eps, m + 1) < p_false_negative(eps, m));
    }
    CHECK_THROWS_AS(p_false_negative(0.0, 1), std::domain_error);
    CHECK_THROWS_AS(p_false_negative(0.5, 0), std::domain_error);
}

TEST_CASE("zero trials produce an empty report") {
    const RateReport report = measure_miss_rate({}, PoleTestConfig{}, 0, 1);
    CHECK(report.trials == 0);
    CHECK(!report.measured.has_value());
    CHECK(!report.standard_error.has_value());
    CHECK(report.predicted.has_value());
}

TEST_CASE("miss rate over the cancellation family stays near zero") {
    PoleTestConfig config;
    config.samples = 1;
    config.epsilon = 0.05;
    config.n_points = 256;
    const RateReport report = measure_miss_rate({}, config, 400, 7);
    REQUIRE(report.measured.has_value());
    CHECK(*report.predicted == doctest::Approx(0.05 / (2.0 * std::numbers::pi)).epsilon(1e-12));
    // loose sanity bound; the full-scale run lives in the acceptance suite
    CHECK(*report.measured <= 10.0 * *report.predicted + 3.0 * *report.standard_error + 0.02);
    CHECK(*report.standard_error ==
          doctest::Approx(std::sqrt(*report.measured * (1.0 - *report.measured) / 400.0)));
}

TEST_CASE("miss rate measurement is deterministic") {
    PoleTestConfig config;
    config.samples = 1;
    config.epsilon = 0.05;
    config.n_points = 128;
    const RateReport a = measure_miss_rate({}, config, 300, 42);
    const RateReport b = measure_miss_rate({}, config, 300, 42);
    CHECK(*a.measured == *b.measured);
}

TEST_CASE("entire-function false positives are rare and unpredicted") {
    const RateReport report = measure_false_positive_rate(PoleTestConfig{}, 300, 3);
    CHECK(!report.predicted.has_value());
    REQUIRE(report.measured.has_value());
    CHECK(*report.measured <= 0.02);
}
