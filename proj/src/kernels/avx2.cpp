#include "kernels_impl.hpp"

#if POLEBOUND_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace polebound::kernels::detail {

namespace {

#define PB_AVX2 __attribute__((target("avx2,fma")))

// --- vector exp --------------------------------------------------------
// Cody-Waite reduction x = n*ln2 + r, Cephes rational on r, 2^n scaling in
// two steps so subnormal results stay exact.

PB_AVX2 inline __m256d pow2_from_epi64(__m256i n) {
    const __m256i bias = _mm256_set1_epi64x(1023);
    return _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(n, bias), 52));
}

PB_AVX2 inline __m256d exp_pd(__m256d x) {
    const __m256d overflow_bound = _mm256_set1_pd(709.782712893384);
    const __m256d underflow_bound = _mm256_set1_pd(-745.1332191019412);
    const __m256d too_big = _mm256_cmp_pd(x, overflow_bound, _CMP_GT_OQ);
    const __m256d too_small = _mm256_cmp_pd(x, underflow_bound, _CMP_LT_OQ);
    const __m256d xc = _mm256_min_pd(_mm256_max_pd(x, underflow_bound), overflow_bound);

    const __m256d log2e = _mm256_set1_pd(1.4426950408889634);
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, xc);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    // e^r = 1 + 2 r P(r^2) / (Q(r^2) - r P(r^2)) on |r| <= ln2/2.
    const __m256d r2 = _mm256_mul_pd(r, r);
    __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);
    __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(2.00000000000000000005e0));
    __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

    // 2^n = 2^n1 * 2^n2 with n1 = n>>1 (arithmetic); each factor is a normal
    // double even when 2^n itself is subnormal.
    const __m128i n32 = _mm256_cvtpd_epi32(n);
    const __m128i n1_32 = _mm_srai_epi32(n32, 1);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i n1 = _mm256_cvtepi32_epi64(n1_32);
    const __m256i n2 = _mm256_sub_epi64(n64, n1);
    e = _mm256_mul_pd(e, pow2_from_epi64(n1));
    e = _mm256_mul_pd(e, pow2_from_epi64(n2));

    e = _mm256_blendv_pd(e, _mm256_set1_pd(std::numeric_limits<double>::infinity()), too_big);
    e = _mm256_blendv_pd(e, _mm256_setzero_pd(), too_small);
    return e;
}

// --- vector sincos -----------------------------------------------------
// Quadrant reduction by pi/2 (two-part Cody-Waite; fine for |x| <= ~1e6),
// fdlibm minimax polynomials on [-pi/4, pi/4].

PB_AVX2 inline void sincos_pd(__m256d x, __m256d* s_out, __m256d* c_out) {
    const __m256d two_over_pi = _mm256_set1_pd(6.36619772367581382433e-1);
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m256d pio2_hi = _mm256_set1_pd(1.57079632673412561417e+0);
    const __m256d pio2_lo = _mm256_set1_pd(6.07710050650619224932e-11);
    __m256d r = _mm256_fnmadd_pd(n, pio2_hi, x);
    r = _mm256_fnmadd_pd(n, pio2_lo, r);

    const __m256d r2 = _mm256_mul_pd(r, r);

    __m256d sp = _mm256_set1_pd(1.58969099521155010221e-10);
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(-2.50507602534068634195e-8));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(2.75573137070700676789e-6));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(-1.98412698298579493134e-4));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(8.33333333332248946124e-3));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(-1.66666666666666324348e-1));
    const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, r2), sp, r);

    __m256d cp = _mm256_set1_pd(-1.13596475577881948265e-11);
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(2.08757232129817482790e-9));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(-2.75573143513906633035e-7));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(2.48015872894767294178e-5));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(-1.38888888888741095749e-3));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(4.16666666666666019037e-2));
    __m256d cos_r = _mm256_fmadd_pd(_mm256_mul_pd(r2, r2), cp,
                                    _mm256_fnmadd_pd(r2, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0)));

    // Quadrant fixup: q = n mod 4. sin swaps with cos when q is odd; signs
    // flip for q in {2,3} (sin) and {1,2} (cos).
    const __m128i q32 = _mm256_cvtpd_epi32(n);
    const __m256i q = _mm256_cvtepi32_epi64(q32);
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i two = _mm256_set1_epi64x(2);
    const __m256d swap =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
    const __m256d sin_flip =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, two), two));
    const __m256d cos_flip = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), two));

    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
    __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
    s = _mm256_xor_pd(s, _mm256_and_pd(sin_flip, sign_bit));
    c = _mm256_xor_pd(c, _mm256_and_pd(cos_flip, sign_bit));
    *s_out = s;
    *c_out = c;
}

}  // namespace

PB_AVX2 ProbeSums probe_sums_avx2(Complex k, const double* u_re, const double* u_im,
                                  const double* f_re, const double* f_im, std::size_t n) {
    const __m256d k_re = _mm256_set1_pd(k.real());
    const __m256d k_im = _mm256_set1_pd(k.imag());
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();

    const std::size_t n4 = n - n % 4;
    for (std::size_t j = 0; j < n4; j += 4) {
        const __m256d ur = _mm256_loadu_pd(u_re + j);
        const __m256d ui = _mm256_loadu_pd(u_im + j);
        const __m256d w_re = _mm256_fnmadd_pd(k_im, ui, _mm256_mul_pd(k_re, ur));
        const __m256d w_im = _mm256_fmadd_pd(k_re, ui, _mm256_mul_pd(k_im, ur));
        const __m256d mag = exp_pd(w_re);
        __m256d s, c;
        sincos_pd(w_im, &s, &c);
        const __m256d h_re = _mm256_mul_pd(mag, c);
        const __m256d h_im = _mm256_mul_pd(mag, s);
        const __m256d fr = _mm256_loadu_pd(f_re + j);
        const __m256d fi = _mm256_loadu_pd(f_im + j);
        const __m256d t_re = _mm256_fnmadd_pd(fi, h_im, _mm256_mul_pd(fr, h_re));
        const __m256d t_im = _mm256_fmadd_pd(fr, h_im, _mm256_mul_pd(fi, h_re));
        acc_re = _mm256_add_pd(acc_re, t_re);
        acc_im = _mm256_add_pd(acc_im, t_im);
    }

    // Lanes 0/2 hold even-indexed terms, lanes 1/3 odd-indexed ones.
    alignas(32) double lanes_re[4], lanes_im[4];
    _mm256_store_pd(lanes_re, acc_re);
    _mm256_store_pd(lanes_im, acc_im);
    double even_re = lanes_re[0] + lanes_re[2];
    double even_im = lanes_im[0] + lanes_im[2];
    double odd_re = lanes_re[1] + lanes_re[3];
    double odd_im = lanes_im[1] + lanes_im[3];

    const ProbeSums tail =
        probe_sums_scalar(k, u_re + n4, u_im + n4, f_re + n4, f_im + n4, n - n4);
    even_re += tail.even.real();
    even_im += tail.even.imag();
    odd_re += tail.odd.real();
    odd_im += tail.odd.imag();
    return {{even_re, even_im}, {odd_re, odd_im}};
}

PB_AVX2 double magnitude_sum_avx2(const double* f_re, const double* f_im, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n - n % 4;
    for (std::size_t j = 0; j < n4; j += 4) {
        const __m256d fr = _mm256_loadu_pd(f_re + j);
        const __m256d fi = _mm256_loadu_pd(f_im + j);
        const __m256d mag2 = _mm256_fmadd_pd(fi, fi, _mm256_mul_pd(fr, fr));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(mag2));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
    for (std::size_t j = n4; j < n; ++j) sum += std::hypot(f_re[j], f_im[j]);
    return sum;
}

PB_AVX2 void exp_array_avx2(const double* x, double* out, std::size_t n) {
    const std::size_t n4 = n - n % 4;
    for (std::size_t j = 0; j < n4; j += 4)
        _mm256_storeu_pd(out + j, exp_pd(_mm256_loadu_pd(x + j)));
    for (std::size_t j = n4; j < n; ++j) {
        alignas(32) double tmp[4] = {x[j], 0.0, 0.0, 0.0};
        alignas(32) double res[4];
        _mm256_store_pd(res, exp_pd(_mm256_load_pd(tmp)));
        out[j] = res[0];
    }
}

PB_AVX2 void sincos_array_avx2(const double* x, double* sin_out, double* cos_out, std::size_t n) {
    const std::size_t n4 = n - n % 4;
    for (std::size_t j = 0; j < n4; j += 4) {
        __m256d s, c;
        sincos_pd(_mm256_loadu_pd(x + j), &s, &c);
        _mm256_storeu_pd(sin_out + j, s);
        _mm256_storeu_pd(cos_out + j, c);
    }
    for (std::size_t j = n4; j < n; ++j) {
        alignas(32) double tmp[4] = {x[j], 0.0, 0.0, 0.0};
        __m256d s, c;
        sincos_pd(_mm256_load_pd(tmp), &s, &c);
        alignas(32) double sr[4], cr[4];
        _mm256_store_pd(sr, s);
        _mm256_store_pd(cr, c);
        sin_out[j] = sr[0];
        cos_out[j] = cr[0];
    }
}

}  // namespace polebound::kernels::detail

#endif  // POLEBOUND_HAVE_AVX2_KERNELS
