#include "polebound/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace polebound {

RationalOracle::RationalOracle(std::vector<Pole> poles, std::vector<Complex> entire_coeffs)
    : poles_(std::move(poles)), entire_(std::move(entire_coeffs)) {
    for (const auto& p : poles_) {
        if (!is_finite(p.location) || !is_finite(p.residue))
            throw std::invalid_argument("pole data must be finite");
        if (p.order < 1) throw std::invalid_argument("pole order must be >= 1");
        if (p.residue == Complex{0.0, 0.0})
            throw std::invalid_argument("pole residue must be nonzero");
    }
    for (std::size_t i = 0; i < poles_.size(); ++i)
        for (std::size_t j = i + 1; j < poles_.size(); ++j)
            if (poles_[i].location == poles_[j].location)
                throw std::invalid_argument("pole locations must be pairwise distinct");
    for (const auto& c : entire_)
        if (!is_finite(c)) throw std::invalid_argument("polynomial coefficients must be finite");
}

Complex RationalOracle::operator()(Complex z) const {
    Complex value{0.0, 0.0};
    // Horner over the entire part.
    for (auto it = entire_.rbegin(); it != entire_.rend(); ++it) value = value * z + *it;
    for (const auto& p : poles_) {
        const Complex d = z - p.location;
        Complex dn = d;
        for (int m = 1; m < p.order; ++m) dn *= d;
        value += p.residue / dn;
    }
    return value;
}

double RationalOracle::nearest_singularity(Complex z0) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : poles_) best = std::min(best, std::abs(p.location - z0));
    return best;
}

AnalyticFunction RationalOracle::as_function(std::string name) const {
    RationalOracle copy = *this;
    return {std::move(name), [copy](Complex z) { return copy(z); }};
}

Complex oracle_mean_value(const RationalOracle& oracle, Complex z0, double radius, Complex k) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::domain_error("contour radius must be positive and finite");
    Complex value = oracle(z0);
    if (!is_finite(value)) throw std::domain_error("oracle center evaluates non-finite");
    for (const auto& p : oracle.poles()) {
        const Complex offset = p.location - z0;
        const double dist = std::abs(offset);
        if (dist == 0.0) throw std::domain_error("reference point coincides with a pole");
        if (std::abs(dist - radius) < 1e-9 * radius)
            throw std::domain_error("pole too close to the contour for a reliable oracle");
        if (dist < radius) {
            if (p.order != 1)
                throw std::domain_error("oracle_mean_value requires enclosed poles to be simple");
            value += p.residue * std::exp(Complex{0.0, 1.0} * k * offset) / offset;
        }
    }
    return value;
}

}  // namespace polebound
