#include "polebound/search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polebound/rng.hpp"

namespace polebound {

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Converged: return "converged";
        case SearchStatus::HaltedInconclusive: return "halted-inconclusive";
        case SearchStatus::NoPoleWithinLimit: return "no-pole-within-limit";
    }
    return "unknown";
}

namespace {

double ulp(double x) { return std::nextafter(std::abs(x), std::numeric_limits<double>::infinity()) - std::abs(x); }

}  // namespace

RadiusBounds search_radius(const AnalyticFunction& f, Complex z0, const SearchConfig& config) {
    if (!(config.limit > 0.0) || !std::isfinite(config.limit))
        throw std::invalid_argument("limit must be positive and finite");
    if (!(config.tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");

    if (!is_finite(f(z0))) throw CenterNotFinite(z0);

    RadiusBounds result;
    std::uint64_t test_index = 0;
    const auto run_test = [&](double radius) {
        PoleTestConfig test_config = config.pole_test;
        test_config.rng_seed = derive_seed(config.rng_seed, ++test_index);
        const PoleTestOutcome outcome = test_contour(f, Contour(z0, radius), test_config);
        result.transcript.push_back({radius, outcome.verdict});
        ++result.iterations;
        return outcome.verdict;
    };

    // Phase 1: expansion. The random starting radius makes a coincidental
    // node-on-pole hit unlikely.
    Rng init_rng(derive_seed(config.rng_seed, 0));
    double upper = 0.5 + init_rng.uniform01();
    double lower = 0.0;
    bool found_poles = false;
    while (upper <= config.limit) {
        const Verdict verdict = run_test(upper);
        if (verdict == Verdict::NoPolesDetected) {
            lower = upper;
            upper *= 2.0;
        } else if (verdict == Verdict::PolesDetected) {
            found_poles = true;
            break;
        } else {
            result.lower = lower;
            result.upper = upper;
            result.status = SearchStatus::HaltedInconclusive;
            return result;
        }
    }
    if (!found_poles) {
        result.lower = 0.0;
        result.upper = std::numeric_limits<double>::infinity();
        result.status = SearchStatus::NoPoleWithinLimit;
        return result;
    }

    // Phase 2: bisection on (lower, upper], upper known to contain poles.
    while (upper - lower > config.tolerance) {
        if (upper - lower <= 4.0 * ulp(upper)) break;  // float resolution reached
        const double mid = 0.5 * (lower + upper);
        const Verdict verdict = run_test(mid);
        if (verdict == Verdict::NoPolesDetected) {
            lower = mid;
        } else if (verdict == Verdict::PolesDetected) {
            upper = mid;
        } else {
            result.lower = lower;
            result.upper = upper;
            result.status = SearchStatus::HaltedInconclusive;
            return result;
        }
    }

    result.lower = lower;
    result.upper = upper;
    result.status = SearchStatus::Converged;
    return result;
}

}  // namespace polebound
