#include "polebound/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "polebound/kernels.hpp"

namespace polebound {

namespace {

void check_points(int n_points) {
    if (n_points < 4 || n_points % 2 != 0)
        throw std::invalid_argument("n_points must be even and >= 4");
}

}  // namespace

ContourSamples sample_contour(const AnalyticFunction& f, const Contour& contour, int n_points) {
    check_points(n_points);
    const std::size_t n = static_cast<std::size_t>(n_points);
    ContourSamples s;
    s.center = contour.center;
    s.radius = contour.radius;
    s.n_points = n_points;
    s.u_re.resize(n);
    s.u_im.resize(n);
    s.f_re.resize(n);
    s.f_im.resize(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_points);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = step * static_cast<double>(j);
        const Complex d{contour.radius * std::cos(theta), contour.radius * std::sin(theta)};
        const Complex value = f(contour.center + d);
        if (!is_finite(value)) throw EvaluationFailed(j, contour.center + d);
        // u_j = i * d_j
        s.u_re[j] = -d.imag();
        s.u_im[j] = d.real();
        s.f_re[j] = value.real();
        s.f_im[j] = value.imag();
    }
    return s;
}

IntegrationResult probe_integral(const ContourSamples& samples, Complex k) {
    const std::size_t n = samples.u_re.size();
    const auto sums =
        kernels::probe_sums(k, samples.u_re.data(), samples.u_im.data(), samples.f_re.data(),
                            samples.f_im.data(), n);
    const double half = static_cast<double>(n) / 2.0;
    const Complex i_even = sums.even / half;
    const Complex i_odd = sums.odd / half;
    const Complex value = (sums.even + sums.odd) / static_cast<double>(n);
    return {value, std::abs(i_even - i_odd), samples.n_points};
}

double magnitude_average(const ContourSamples& samples) {
    const std::size_t n = samples.f_re.size();
    return kernels::magnitude_sum(samples.f_re.data(), samples.f_im.data(), n) /
           static_cast<double>(n);
}

IntegrationResult mean_value_integral(const AnalyticFunction& f, const Contour& contour, Complex k,
                                      int n_points) {
    return probe_integral(sample_contour(f, contour, n_points), k);
}

double magnitude_average(const AnalyticFunction& f, const Contour& contour, int n_points) {
    return magnitude_average(sample_contour(f, contour, n_points));
}

}  // namespace polebound
