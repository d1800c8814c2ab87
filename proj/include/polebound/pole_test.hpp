#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polebound/complex.hpp"
#include "polebound/function.hpp"
#include "polebound/quadrature.hpp"
#include "polebound/rng.hpp"

namespace polebound {

struct PoleTestConfig {
    int samples = 3;            // M, probe wavenumbers per contour
    int n_points = 1000;        // N, quadrature nodes (even)
    double epsilon = 0.01;      // threshold factor, T = epsilon * |R|
    std::uint64_t rng_seed = 0;
    double delta_factor = 0.1;  // halt when delta > delta_factor * T
};

enum class Verdict { PolesDetected, NoPolesDetected, Inconclusive };

const char* verdict_name(Verdict v);

struct SampleRecord {
    Complex k;
    double deviation;  // |integral - f(z0)|
    double delta;      // quadrature precision proxy for this probe
};

struct PoleTestOutcome {
    Verdict verdict;
    double max_deviation = 0.0;
    double threshold = 0.0;  // T
    std::vector<SampleRecord> per_sample;
    std::optional<std::string> note;  // diagnostics (e.g. node evaluation failure)
};

/// Thrown when f(z0) is non-finite; the test requires a finite center value.
class CenterNotFinite : public std::runtime_error {
public:
    explicit CenterNotFinite(Complex z0)
        : std::runtime_error("function is not finite at the contour center z0 = " +
                             format_complex(z0)) {}
};

/// Probe wavenumber uniform over the closed disk |k| <= 1/r, which keeps the
/// probe amplitude within [1/e, e] on and inside the contour.
Complex sample_wavenumber(Rng& rng, const Contour& contour);

/// The randomized analyticity test: M probe integrals against the mean-value
/// identity, deviations compared to T = epsilon * (arc average of |f|).
PoleTestOutcome test_contour(const AnalyticFunction& f, const Contour& contour,
                             const PoleTestConfig& config);

}  // namespace polebound
