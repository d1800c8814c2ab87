#include <cmath>

#include "kernels_impl.hpp"

namespace polebound::kernels::detail {

// Reference kernels. Sequential accumulation, one even and one odd
// accumulator; SIMD variants are checked against these.

ProbeSums probe_sums_scalar(Complex k, const double* u_re, const double* u_im, const double* f_re,
                            const double* f_im, std::size_t n) {
    const double k_re = k.real();
    const double k_im = k.imag();
    double acc_re[2] = {0.0, 0.0};
    double acc_im[2] = {0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double w_re = k_re * u_re[j] - k_im * u_im[j];
        const double w_im = k_re * u_im[j] + k_im * u_re[j];
        const double mag = std::exp(w_re);
        const double h_re = mag * std::cos(w_im);
        const double h_im = mag * std::sin(w_im);
        const double t_re = f_re[j] * h_re - f_im[j] * h_im;
        const double t_im = f_re[j] * h_im + f_im[j] * h_re;
        acc_re[j & 1] += t_re;
        acc_im[j & 1] += t_im;
    }
    return {{acc_re[0], acc_im[0]}, {acc_re[1], acc_im[1]}};
}

double magnitude_sum_scalar(const double* f_re, const double* f_im, std::size_t n) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += std::hypot(f_re[j], f_im[j]);
    return sum;
}

void exp_array_scalar(const double* x, double* out, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) out[j] = std::exp(x[j]);
}

void sincos_array_scalar(const double* x, double* sin_out, double* cos_out, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        sin_out[j] = std::sin(x[j]);
        cos_out[j] = std::cos(x[j]);
    }
}

}  // namespace polebound::kernels::detail
