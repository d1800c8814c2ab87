#include <cmath>

#include "doctest.h"
#include "polebound/corpus.hpp"
#include "polebound/expression.hpp"
#include "polebound/search.hpp"

using namespace polebound;

namespace {

bool bracket_contains(const RadiusBounds& bounds, double r_star) {
    if (std::isinf(r_star)) return bounds.status == SearchStatus::NoPoleWithinLimit;
    return bounds.lower < r_star && r_star < bounds.upper;
}

void check_transcript_consistency(const RadiusBounds& bounds) {
    double max_no_poles = 0.0;
    double min_poles = std::numeric_limits<double>::infinity();
    for (const auto& entry : bounds.transcript) {
        if (entry.verdict == Verdict::NoPolesDetected)
            max_no_poles = std::max(max_no_poles, entry.radius);
        if (entry.verdict == Verdict::PolesDetected)
            min_poles = std::min(min_poles, entry.radius);
    }
    CHECK(max_no_poles <= min_poles);
    CHECK(bounds.lower < bounds.upper);
    if (bounds.status != SearchStatus::NoPoleWithinLimit) {
        CHECK(bounds.lower == max_no_poles);
        if (std::isfinite(bounds.upper)) CHECK(bounds.upper == min_poles);
    }
}

}  // namespace

TEST_CASE("bracket around the simple pole of 1/(1+z)") {
    const auto f = make_function(parse_expression("1/(1+z)"));
    SearchConfig config;
    config.rng_seed = 5;
    const RadiusBounds bounds = search_radius(f, {0, 0}, config);
    CHECK(bounds.status == SearchStatus::HaltedInconclusive);
    CHECK(bracket_contains(bounds, 1.0));
    CHECK(bounds.upper / bounds.lower < 1.15);
    check_transcript_consistency(bounds);
    CHECK(bounds.iterations == static_cast<int>(bounds.transcript.size()));
}

TEST_CASE("bracket contains sqrt(2) for z0 = i") {
    const auto f = make_function(parse_expression("1/(1+z)"));
    SearchConfig config;
    config.rng_seed = 9;
    const RadiusBounds bounds = search_radius(f, {0, 1}, config);
    CHECK(bracket_contains(bounds, std::sqrt(2.0)));
}

TEST_CASE("entire function reports no pole within the limit") {
    const auto f = make_function(parse_expression("z"));
    for (std::uint64_t seed : {0ull, 1ull, 17ull}) {
        SearchConfig config;
        config.rng_seed = seed;
        const RadiusBounds bounds = search_radius(f, {0, 0}, config);
        CHECK(bounds.status == SearchStatus::NoPoleWithinLimit);
        CHECK(bounds.lower == 0.0);
        CHECK(std::isinf(bounds.upper));
        for (const auto& entry : bounds.transcript)
            CHECK(entry.verdict == Verdict::NoPolesDetected);
        // Expansion stops once doubling passes the limit.
        CHECK(bounds.transcript.back().radius <= config.limit);
        CHECK(2.0 * bounds.transcript.back().radius > config.limit);
    }
}

TEST_CASE("search is deterministic bit for bit") {
    const auto f = make_function(parse_expression("1/(1+z)+2/(1-z^2)"));
    SearchConfig config;
    config.rng_seed = 1234;
    const RadiusBounds a = search_radius(f, {0, 0}, config);
    const RadiusBounds b = search_radius(f, {0, 0}, config);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.status == b.status);
    REQUIRE(a.transcript.size() == b.transcript.size());
    for (std::size_t i = 0; i < a.transcript.size(); ++i) {
        CHECK(a.transcript[i].radius == b.transcript[i].radius);
        CHECK(a.transcript[i].verdict == b.transcript[i].verdict);
    }
}

TEST_CASE("transcript bracketing across corpus rows and seeds") {
    for (const auto& row : corpus()) {
        if (!row.oracle) continue;
        const AnalyticFunction f = corpus_function(row);
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            SearchConfig config;
            config.rng_seed = seed;
            const RadiusBounds bounds = search_radius(f, row.z0, config);
            check_transcript_consistency(bounds);
            if (bracket_contains(bounds, row.r_derived)) ++hits;
        }
        CAPTURE(row.expression);
        CHECK(hits == 5);
    }
}

TEST_CASE("positive tolerance converges to the requested width") {
    const auto f = make_function(parse_expression("1/(1+z)"));
    SearchConfig config;
    config.rng_seed = 77;
    config.tolerance = 0.25;
    const RadiusBounds bounds = search_radius(f, {0, 0}, config);
    CHECK(bounds.status == SearchStatus::Converged);
    CHECK(bounds.upper - bounds.lower <= 0.25);
    CHECK(bracket_contains(bounds, 1.0));
}

TEST_CASE("phase-1 no-pole radii all sit below the final upper bound") {
    const auto f = make_function(parse_expression("1/(1+z)"));
    SearchConfig config;
    config.rng_seed = 31;
    const RadiusBounds bounds = search_radius(f, {0, 0}, config);
    for (const auto& entry : bounds.transcript)
        if (entry.verdict == Verdict::NoPolesDetected) CHECK(entry.radius < bounds.upper);
}

TEST_CASE("search propagates a non-finite center") {
    const auto f = make_function(parse_expression("1/(1+z)"));
    SearchConfig config;
    CHECK_THROWS_AS(search_radius(f, {-1, 0}, config), CenterNotFinite);
}

TEST_CASE("search config validation") {
    const auto f = make_function(parse_expression("z"));
    SearchConfig config;
    config.limit = 0.0;
    CHECK_THROWS_AS(search_radius(f, {0, 0}, config), std::invalid_argument);
    config = {};
    config.tolerance = -1.0;
    CHECK_THROWS_AS(search_radius(f, {0, 0}, config), std::invalid_argument);
}
