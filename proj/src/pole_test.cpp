#include "polebound/pole_test.hpp"

#include <cmath>

namespace polebound {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PolesDetected: return "poles-detected";
        case Verdict::NoPolesDetected: return "no-poles-detected";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

void check_config(const PoleTestConfig& config) {
    if (config.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (config.n_points < 4 || config.n_points % 2 != 0)
        throw std::invalid_argument("n_points must be even and >= 4");
    if (!(config.epsilon > 0.0) || !(config.epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(config.delta_factor > 0.0)) throw std::invalid_argument("delta_factor must be positive");
}

// Deviations below this are treated as an exact zero when T itself is zero.
constexpr double zero_function_tolerance = 1e-30;

}  // namespace

Complex sample_wavenumber(Rng& rng, const Contour& contour) {
    return uniform_in_disk(rng, 1.0 / contour.radius);
}

PoleTestOutcome test_contour(const AnalyticFunction& f, const Contour& contour,
                             const PoleTestConfig& config) {
    check_config(config);

    const Complex center_value = f(contour.center);
    if (!is_finite(center_value)) throw CenterNotFinite(contour.center);

    PoleTestOutcome outcome;
    ContourSamples samples;
    try {
        samples = sample_contour(f, contour, config.n_points);
    } catch (const EvaluationFailed& failure) {
        outcome.verdict = Verdict::Inconclusive;
        outcome.note = failure.what();
        return outcome;
    }

    const double threshold = config.epsilon * magnitude_average(samples);
    outcome.threshold = threshold;

    Rng rng(config.rng_seed);
    outcome.per_sample.reserve(static_cast<std::size_t>(config.samples));
    for (int m = 0; m < config.samples; ++m) {
        const Complex k = sample_wavenumber(rng, contour);
        const IntegrationResult integral = probe_integral(samples, k);
        const double deviation = std::abs(integral.value - center_value);
        outcome.per_sample.push_back({k, deviation, integral.delta});
        outcome.max_deviation = std::max(outcome.max_deviation, deviation);

        if (threshold > 0.0) {
            // The probe value is only trusted when its quadrature error
            // estimate fits the noise budget; an unmet budget halts the test.
            if (integral.delta > config.delta_factor * threshold) {
                outcome.verdict = Verdict::Inconclusive;
                outcome.note = "quadrature delta exceeded the noise budget";
                return outcome;
            }
            if (deviation > threshold) {
                outcome.verdict = Verdict::PolesDetected;
                return outcome;
            }
        }
    }

    if (threshold == 0.0) {
        // |f| averaged to zero on the contour; only an identically zero
        // deviation profile supports a no-pole report.
        if (outcome.max_deviation <= zero_function_tolerance) {
            outcome.verdict = Verdict::NoPolesDetected;
        } else {
            outcome.verdict = Verdict::Inconclusive;
            outcome.note = "threshold degenerated to zero";
        }
        return outcome;
    }

    outcome.verdict = Verdict::NoPolesDetected;
    return outcome;
}

}  // namespace polebound
