#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace polebound::kernels {

namespace {

bool cpu_has_avx2() {
#if POLEBOUND_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend resolve_default() {
    if (const char* env = std::getenv("POLEBOUND_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::avx2))
            return Backend::avx2;
        // Unknown or unsupported request falls through to auto-detection.
    }
    return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_state() {
    static std::atomic<Backend> state{resolve_default()};
    return state;
}

}  // namespace

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool backend_supported(Backend backend) {
    switch (backend) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() { return backend_state().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (!backend_supported(backend))
        throw std::invalid_argument(std::string("kernel backend not supported here: ") +
                                    backend_name(backend));
    backend_state().store(backend, std::memory_order_relaxed);
}

ProbeSums probe_sums(Complex k, const double* u_re, const double* u_im, const double* f_re,
                     const double* f_im, std::size_t n) {
    Backend backend = active_backend();
#if POLEBOUND_HAVE_AVX2_KERNELS
    if (backend == Backend::avx2) {
        // |k*u_j| is bounded by |k| * r; beyond the validated reduction range
        // the scalar path takes over.
        const double r = n > 0 ? std::hypot(u_re[0], u_im[0]) : 0.0;
        if (!(std::abs(k) * r <= detail::avx2_probe_arg_limit)) backend = Backend::scalar;
    }
#endif
    return detail::probe_sums_on(backend, k, u_re, u_im, f_re, f_im, n);
}

double magnitude_sum(const double* f_re, const double* f_im, std::size_t n) {
    return detail::magnitude_sum_on(active_backend(), f_re, f_im, n);
}

namespace detail {

ProbeSums probe_sums_on(Backend backend, Complex k, const double* u_re, const double* u_im,
                        const double* f_re, const double* f_im, std::size_t n) {
#if POLEBOUND_HAVE_AVX2_KERNELS
    if (backend == Backend::avx2) return probe_sums_avx2(k, u_re, u_im, f_re, f_im, n);
#endif
    (void)backend;
    return probe_sums_scalar(k, u_re, u_im, f_re, f_im, n);
}

double magnitude_sum_on(Backend backend, const double* f_re, const double* f_im, std::size_t n) {
#if POLEBOUND_HAVE_AVX2_KERNELS
    if (backend == Backend::avx2) return magnitude_sum_avx2(f_re, f_im, n);
#endif
    (void)backend;
    return magnitude_sum_scalar(f_re, f_im, n);
}

void exp_array(Backend backend, const double* x, double* out, std::size_t n) {
#if POLEBOUND_HAVE_AVX2_KERNELS
    if (backend == Backend::avx2) {
        exp_array_avx2(x, out, n);
        return;
    }
#endif
    (void)backend;
    exp_array_scalar(x, out, n);
}

void sincos_array(Backend backend, const double* x, double* sin_out, double* cos_out,
                  std::size_t n) {
#if POLEBOUND_HAVE_AVX2_KERNELS
    if (backend == Backend::avx2) {
        sincos_array_avx2(x, sin_out, cos_out, n);
        return;
    }
#endif
    (void)backend;
    sincos_array_scalar(x, sin_out, cos_out, n);
}

}  // namespace detail

}  // namespace polebound::kernels
