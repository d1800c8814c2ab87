#pragma once

#include <cstdint>
#include <vector>

#include "polebound/complex.hpp"
#include "polebound/function.hpp"
#include "polebound/pole_test.hpp"

namespace polebound {

struct SearchConfig {
    double limit = 1024.0;    // expansion gives up past this radius
    double tolerance = 0.0;   // 0 = bisect until inconclusive or float resolution
    PoleTestConfig pole_test{};
    std::uint64_t rng_seed = 0;
};

enum class SearchStatus { Converged, HaltedInconclusive, NoPoleWithinLimit };

const char* search_status_name(SearchStatus s);

struct TranscriptEntry {
    double radius;
    Verdict verdict;
};

/// Output of search_radius: lower < r* < upper in the absence of test errors,
/// with upper = +inf and lower = 0 when nothing was found below the limit.
struct RadiusBounds {
    double lower = 0.0;
    double upper = 0.0;
    SearchStatus status = SearchStatus::Converged;
    int iterations = 0;  // contour tests performed
    std::vector<TranscriptEntry> transcript;
};

/// Brackets the radius of convergence of f about z0: randomized initial
/// radius in [0.5, 1.5), geometric expansion while no poles are detected,
/// then bisection. Inconclusive test outcomes halt with the current bracket.
/// Each contour test runs on a fresh stream derived from (rng_seed, index).
RadiusBounds search_radius(const AnalyticFunction& f, Complex z0, const SearchConfig& config);

}  // namespace polebound
