#pragma once

#include <cstdint>
#include <optional>

#include "polebound/complex.hpp"
#include "polebound/pole_test.hpp"

namespace polebound {

/// Predicted vs measured error rates. `predicted` is absent where no closed
/// form exists (false-positive measurements); `measured`/`standard_error` are
/// absent for zero-trial reports.
struct RateReport {
    std::optional<double> predicted;
    std::optional<double> measured;
    long trials = 0;
    std::optional<double> standard_error;
};

/// Chance that one random probe sees a deviation above epsilon*|R| when
/// n_poles residues could cancel. n_poles == 2 is the hardest case and uses
/// its own closed form; requires n_poles >= 2 and epsilon in (0, 1).
double p_detect(double epsilon, int n_poles);

/// Miss rate of an M-probe test: (epsilon / 2*pi)^M. epsilon in (0, 1), samples >= 1.
double p_false_negative(double epsilon, int samples);

/// Adversarial two-pole family: R/(z - z1) - R/(z - z2) with |R| = 1 and
/// z1, z2 uniform in the disk of radius disk_factor*radius about center, so
/// the opposite residues can cancel in the unprobed integral.
struct CancellationFamily {
    Complex center{0.0, 0.0};
    double radius = 1.0;
    double disk_factor = 0.9;
};

/// Runs test_contour over `trials` random family members and reports the
/// measured miss (false-negative) rate against p_false_negative.
RateReport measure_miss_rate(const CancellationFamily& family, const PoleTestConfig& config,
                             long trials, std::uint64_t seed);

/// Runs test_contour over random entire functions (polynomials of degree at
/// most 8) and reports the measured false-positive rate; no closed-form
/// prediction exists for it.
RateReport measure_false_positive_rate(const PoleTestConfig& config, long trials,
                                       std::uint64_t seed);

}  // namespace polebound
