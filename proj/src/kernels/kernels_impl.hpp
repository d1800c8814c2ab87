#pragma once

#include <cstddef>

#include "polebound/kernels.hpp"

namespace polebound::kernels::detail {

ProbeSums probe_sums_scalar(Complex k, const double* u_re, const double* u_im, const double* f_re,
                            const double* f_im, std::size_t n);
double magnitude_sum_scalar(const double* f_re, const double* f_im, std::size_t n);
void exp_array_scalar(const double* x, double* out, std::size_t n);
void sincos_array_scalar(const double* x, double* sin_out, double* cos_out, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
#define POLEBOUND_HAVE_AVX2_KERNELS 1
ProbeSums probe_sums_avx2(Complex k, const double* u_re, const double* u_im, const double* f_re,
                          const double* f_im, std::size_t n);
double magnitude_sum_avx2(const double* f_re, const double* f_im, std::size_t n);
void exp_array_avx2(const double* x, double* out, std::size_t n);
void sincos_array_avx2(const double* x, double* sin_out, double* cos_out, std::size_t n);
#else
#define POLEBOUND_HAVE_AVX2_KERNELS 0
#endif

// The AVX2 sincos argument reduction is validated for |x| up to ~1e6; probe
// arguments are bounded by |k|*r, so dispatch falls back to scalar beyond.
inline constexpr double avx2_probe_arg_limit = 1e6;

}  // namespace polebound::kernels::detail
