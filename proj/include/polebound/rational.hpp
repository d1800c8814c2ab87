#pragma once

#include <string>
#include <vector>

#include "polebound/complex.hpp"
#include "polebound/function.hpp"

namespace polebound {

/// A singular term residue/(z - location)^order. For order 1 the residue is
/// the actual Laurent residue; higher orders carry the leading coefficient.
struct Pole {
    Complex location;
    int order = 1;
    Complex residue;
};

/// Exact rational function: entire polynomial part plus isolated pole terms.
/// Closed-form evaluation and residue calculus make it the ground-truth
/// reference for the quadrature and pole-test paths.
class RationalOracle {
public:
    RationalOracle(std::vector<Pole> poles, std::vector<Complex> entire_coeffs);

    Complex operator()(Complex z) const;

    const std::vector<Pole>& poles() const { return poles_; }
    const std::vector<Complex>& entire_coeffs() const { return entire_; }

    /// Distance from z0 to the nearest pole; +inf when there are none.
    double nearest_singularity(Complex z0) const;

    AnalyticFunction as_function(std::string name) const;

private:
    std::vector<Pole> poles_;
    std::vector<Complex> entire_;  // ascending coefficients
};

/// Exact value of (1/2*pi*i) * contour integral of f(z) e^{ik(z-z0)} / (z-z0)
/// over |z-z0| = radius, by residue calculus:
///   f(z0) + sum over enclosed poles of R_j e^{ik(z_j-z0)} / (z_j - z0).
/// Throws std::domain_error when a pole lies within 1e-9*radius of the
/// contour, when an enclosed pole is not simple, or when z0 is a pole.
Complex oracle_mean_value(const RationalOracle& oracle, Complex z0, double radius, Complex k);

}  // namespace polebound
