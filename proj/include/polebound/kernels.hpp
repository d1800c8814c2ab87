#pragma once

#include <cstddef>

#include "polebound/complex.hpp"

namespace polebound::kernels {

/// Inner-loop backends. `scalar` is the reference implementation; SIMD
/// variants must agree with it to tight tolerance (see tests) but are not
/// bit-identical because their reduction grouping differs.
enum class Backend { scalar, avx2 };

const char* backend_name(Backend backend);
bool backend_supported(Backend backend);

/// Backend in use. Resolved once on first query: POLEBOUND_KERNEL environment
/// variable ("scalar"/"avx2") if set, otherwise the best supported variant.
Backend active_backend();

/// Overrides the active backend; throws std::invalid_argument when the
/// requested backend is not supported on this machine.
void set_backend(Backend backend);

struct ProbeSums {
    Complex even;  // sum over even-indexed nodes of f_j * exp(k * u_j)
    Complex odd;   // sum over odd-indexed nodes
};

/// Accumulates f_j * exp(k*u_j) into even/odd partial sums. Inputs are split
/// re/im arrays of length n. Reduction order is fixed per backend, so results
/// are reproducible for a given (backend, n).
ProbeSums probe_sums(Complex k, const double* u_re, const double* u_im, const double* f_re,
                     const double* f_im, std::size_t n);

/// Sum of |f_j| over all n nodes.
double magnitude_sum(const double* f_re, const double* f_im, std::size_t n);

namespace detail {

// Direct entry points and array transcendentals, exposed for equivalence and
// accuracy tests.
ProbeSums probe_sums_on(Backend backend, Complex k, const double* u_re, const double* u_im,
                        const double* f_re, const double* f_im, std::size_t n);
double magnitude_sum_on(Backend backend, const double* f_re, const double* f_im, std::size_t n);
void exp_array(Backend backend, const double* x, double* out, std::size_t n);
void sincos_array(Backend backend, const double* x, double* sin_out, double* cos_out,
                  std::size_t n);

}  // namespace detail

}  // namespace polebound::kernels
