#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "polebound/complex.hpp"
#include "polebound/function.hpp"

namespace polebound {

/// Circle |z - center| = radius, the only contour family supported.
struct Contour {
    Contour(Complex center, double radius) : center(center), radius(radius) {
        if (!is_finite(center)) throw std::invalid_argument("contour center must be finite");
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw std::invalid_argument("contour radius must be positive and finite");
    }

    Complex center;
    double radius;
};

struct IntegrationResult {
    Complex value;    // full-grid trapezoid value
    double delta;     // |I_even - I_odd|, the integration-precision proxy
    int points_used;  // even
};

/// Thrown when the integrand evaluates non-finite at a quadrature node.
class EvaluationFailed : public std::runtime_error {
public:
    EvaluationFailed(std::size_t node_index, Complex node)
        : std::runtime_error("integrand evaluation failed at node " +
                             std::to_string(node_index) + " (z = " + format_complex(node) + ")"),
          node_index_(node_index),
          node_(node) {}

    std::size_t node_index() const { return node_index_; }
    Complex node() const { return node_; }

private:
    std::size_t node_index_;
    Complex node_;
};

/// Function samples at the n uniform contour nodes z_j = center + r e^{2*pi*i*j/n},
/// stored split-component for the SIMD kernels. u_j = i*(z_j - center), so the
/// probe weight is exp(k * u_j).
struct ContourSamples {
    Complex center;
    double radius;
    int n_points;
    std::vector<double> u_re, u_im;
    std::vector<double> f_re, f_im;
};

/// Evaluates f at all nodes; throws EvaluationFailed on the first non-finite
/// value. n_points must be even and >= 4.
ContourSamples sample_contour(const AnalyticFunction& f, const Contour& contour, int n_points);

/// Probe-weighted mean-value sum over precomputed samples:
/// value ~ (1/2*pi*i) * contour integral of f(z) e^{ik(z-z0)} / (z-z0) dz.
IntegrationResult probe_integral(const ContourSamples& samples, Complex k);

/// Arc-length average of |f| over precomputed samples.
double magnitude_average(const ContourSamples& samples);

IntegrationResult mean_value_integral(const AnalyticFunction& f, const Contour& contour, Complex k,
                                      int n_points);

double magnitude_average(const AnalyticFunction& f, const Contour& contour, int n_points);

}  // namespace polebound
