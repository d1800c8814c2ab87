#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polebound/rational.hpp"
#include "polebound/rng.hpp"

using namespace polebound;

namespace {

// Independent dense mean-value reference: plain trapezoid average of
// f(z0 + r e^{i theta}) e^{i k r e^{i theta}} over the circle, no shared code
// with the quadrature module.
Complex dense_mean_value(const RationalOracle& f, Complex z0, double r, Complex k, int n = 1 << 20) {
    Complex sum{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n;
        const Complex d{r * std::cos(theta), r * std::sin(theta)};
        sum += f(z0 + d) * std::exp(Complex{0.0, 1.0} * k * d);
    }
    return sum / static_cast<double>(n);
}

}  // namespace

TEST_CASE("oracle evaluates entire part plus pole terms") {
    const RationalOracle f({{{-1.0, 0.0}, 1, {1.0, 0.0}}}, {{100.0, 0.0}});
    CHECK(std::abs(f({0.0, 0.0}) - Complex{101.0, 0.0}) < 1e-12);
    const RationalOracle g({{{2.0, 0.0}, 3, {1.0, 0.0}}}, {});
    CHECK(std::abs(g({3.0, 0.0}) - Complex{1.0, 0.0}) < 1e-15);  // 1/(3-2)^3
    CHECK(std::abs(g({4.0, 0.0}) - Complex{0.125, 0.0}) < 1e-15);
}

TEST_CASE("oracle constructor validates pole data") {
    CHECK_THROWS_AS(RationalOracle({{{0.0, 0.0}, 0, {1.0, 0.0}}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(RationalOracle({{{0.0, 0.0}, 1, {0.0, 0.0}}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        RationalOracle({{{1.0, 0.0}, 1, {1.0, 0.0}}, {{1.0, 0.0}, 1, {2.0, 0.0}}}, {}),
        std::invalid_argument);
}

TEST_CASE("nearest singularity distance") {
    const RationalOracle f({{{-1.0, 0.0}, 1, {1.0, 0.0}}, {{1.0, 0.0}, 1, {-1.0, 0.0}}}, {});
    CHECK(f.nearest_singularity({0.0, 0.0}) == 1.0);
    CHECK(f.nearest_singularity({0.5, 0.0}) == 0.5);
    const RationalOracle entire({}, {{1.0, 0.0}});
    CHECK(std::isinf(entire.nearest_singularity({0.0, 0.0})));
}

TEST_CASE("mean value with no enclosed poles is exactly f(z0)") {
    const RationalOracle f({{{-1.0, 0.0}, 1, {1.0, 0.0}}}, {});
    // r = 0.5 encloses nothing: the sum is empty by construction.
    CHECK(oracle_mean_value(f, {0.0, 0.0}, 0.5, {0.0, 0.0}) == f({0.0, 0.0}));
    CHECK(oracle_mean_value(f, {0.0, 0.0}, 0.5, {0.3, -0.2}) == f({0.0, 0.0}));
}

TEST_CASE("mean value for 1/(1+z) on r=2 at k=0 is zero") {
    const RationalOracle f({{{-1.0, 0.0}, 1, {1.0, 0.0}}}, {});
    // f(0) = 1 plus the residue term 1/(-1-0) = -1.
    const Complex v = oracle_mean_value(f, {0.0, 0.0}, 2.0, {0.0, 0.0});
    CHECK(std::abs(v) < 1e-15);
}

TEST_CASE("mean value for 1/(z^2+1) on r=2 at k=0 is zero") {
    // Residues are -i/2 at i and i/2 at -i; their probe terms R/(z_j - 0) are
    // each -1/2, so the mean-value integral is f(0) - 1 = 0. Cross-checked
    // against a dense independent quadrature below.
    const Complex half_i{0.0, 0.5};
    const RationalOracle f({{{0.0, 1.0}, 1, -half_i}, {{0.0, -1.0}, 1, half_i}}, {});
    CHECK(std::abs(f({0.0, 0.0}) - Complex{1.0, 0.0}) < 1e-15);

    const Complex via_residues = oracle_mean_value(f, {0.0, 0.0}, 2.0, {0.0, 0.0});
    CHECK(std::abs(via_residues) < 1e-15);

    const Complex via_dense = dense_mean_value(f, {0.0, 0.0}, 2.0, {0.0, 0.0}, 1 << 16);
    CHECK(std::abs(via_dense - via_residues) < 1e-12);
}

TEST_CASE("mean value matches dense quadrature for probed two-pole cases") {
    const RationalOracle f({{{0.5, 0.25}, 1, {1.0, -0.5}}, {{-0.3, -0.6}, 1, {0.25, 2.0}}},
                           {{0.5, 0.0}, {0.0, 1.0}});
    const Complex ks[] = {{0.0, 0.0}, {0.5, 0.0}, {-0.3, 0.4}, {0.0, -0.9}};
    for (Complex k : ks) {
        const Complex expected = dense_mean_value(f, {0.1, 0.0}, 1.5, k, 1 << 16);
        const Complex got = oracle_mean_value(f, {0.1, 0.0}, 1.5, k);
        CAPTURE(format_complex(k));
        CHECK(std::abs(got - expected) < 1e-10);
    }
}

TEST_CASE("oracle rejects ill-conditioned or unsupported configurations") {
    const RationalOracle simple({{{-1.0, 0.0}, 1, {1.0, 0.0}}}, {});
    // pole within 1e-9 * r of the contour
    CHECK_THROWS_AS(oracle_mean_value(simple, {0.0, 0.0}, 1.0 + 1e-10, {0.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(oracle_mean_value(simple, {-1.0, 0.0}, 1.0, {0.0, 0.0}), std::domain_error);

    const RationalOracle high_order({{{0.0, 0.0}, 2, {1.0, 0.0}}}, {});
    CHECK_THROWS_AS(oracle_mean_value(high_order, {0.5, 0.0}, 1.0, {0.0, 0.0}),
                    std::domain_error);
    // ...but a high-order pole outside the contour is fine.
    CHECK(std::abs(oracle_mean_value(high_order, {5.0, 0.0}, 1.0, {0.0, 0.0}) -
                   high_order({5.0, 0.0})) < 1e-15);
}
