// AVX2/FMA variants. Compiled with -mavx2 -mfma; only reached through the
// dispatcher after a CPUID check.

#include <immintrin.h>

#include <cmath>

#include "tzeta/kernels/row_sums.hpp"

namespace tzeta::kernels::avx2 {

namespace {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// e^x for x in [-700, 709]; lanes below -700 return 0.
inline __m256d vexp(__m256d x) {
    const __m256d lo = splat(-700.0);
    const __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    x = _mm256_max_pd(x, lo);
    x = _mm256_min_pd(x, splat(709.0));

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, splat(1.4426950408889634)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, splat(6.93147180369123816490e-01), x);
    r = _mm256_fnmadd_pd(n, splat(1.90821492927058770002e-10), r);

    // Taylor to degree 13; |r| <= ln2/2.
    __m256d p = splat(1.0 / 6227020800.0);
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, splat(0.5));
    p = _mm256_fmadd_pd(p, r, splat(1.0));
    p = _mm256_fmadd_pd(p, r, splat(1.0));

    const __m128i ni = _mm256_cvtpd_epi32(n);
    __m256i bits = _mm256_cvtepi32_epi64(ni);
    bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
    bits = _mm256_slli_epi64(bits, 52);
    const __m256d res = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
    return _mm256_andnot_pd(under, res);
}

// Natural log for positive normal x.
inline __m256d vlog(__m256d x) {
    const __m256i xi = _mm256_castpd_si256(x);
    const __m256i exp_bits = _mm256_srli_epi64(xi, 52);
    const __m256i mant_bits = _mm256_or_si256(
        _mm256_and_si256(xi, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
        _mm256_set1_epi64x(0x3FF0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mant_bits);

    // Exponent to double via the 2^52 magic-number trick.
    const __m256d magic = splat(4503599627370496.0);
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(exp_bits, _mm256_castpd_si256(magic))), magic);
    e = _mm256_sub_pd(e, splat(1023.0));

    const __m256d big = _mm256_cmp_pd(m, splat(1.4142135623730951), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, splat(1.0)));

    const __m256d f = _mm256_div_pd(_mm256_sub_pd(m, splat(1.0)), _mm256_add_pd(m, splat(1.0)));
    const __m256d f2 = _mm256_mul_pd(f, f);
    __m256d p = splat(1.0 / 25.0);
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 23.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 21.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 19.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 17.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, f2, splat(1.0 / 3.0));
    // log m = 2f + 2f^3 p
    const __m256d lm = _mm256_fmadd_pd(_mm256_mul_pd(f2, f), _mm256_mul_pd(splat(2.0), p),
                                       _mm256_add_pd(f, f));
    const __m256d hi = _mm256_mul_pd(e, splat(6.93147180369123816490e-01));
    return _mm256_add_pd(hi, _mm256_fmadd_pd(e, splat(1.90821492927058770002e-10), lm));
}

inline void vsincos(__m256d y, __m256d* s, __m256d* c) {
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(y, splat(0.63661977236758134308)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, splat(1.57079632673412561417e+00), y);
    r = _mm256_fnmadd_pd(n, splat(6.07710050630396597660e-11), r);
    r = _mm256_fnmadd_pd(n, splat(2.02226624871116645580e-21), r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    __m256d ps = splat(1.0 / 355687428096000.0);
    ps = _mm256_fmadd_pd(ps, r2, splat(-1.0 / 1307674368000.0));
    ps = _mm256_fmadd_pd(ps, r2, splat(1.0 / 6227020800.0));
    ps = _mm256_fmadd_pd(ps, r2, splat(-1.0 / 39916800.0));
    ps = _mm256_fmadd_pd(ps, r2, splat(1.0 / 362880.0));
    ps = _mm256_fmadd_pd(ps, r2, splat(-1.0 / 5040.0));
    ps = _mm256_fmadd_pd(ps, r2, splat(1.0 / 120.0));
    ps = _mm256_fmadd_pd(ps, r2, splat(-1.0 / 6.0));
    const __m256d sr = _mm256_fmadd_pd(_mm256_mul_pd(ps, r2), r, r);

    __m256d pc = splat(1.0 / 6402373705728000.0);
    pc = _mm256_fmadd_pd(pc, r2, splat(-1.0 / 20922789888000.0));
    pc = _mm256_fmadd_pd(pc, r2, splat(1.0 / 87178291200.0));
    pc = _mm256_fmadd_pd(pc, r2, splat(-1.0 / 479001600.0));
    pc = _mm256_fmadd_pd(pc, r2, splat(1.0 / 3628800.0));
    pc = _mm256_fmadd_pd(pc, r2, splat(-1.0 / 40320.0));
    pc = _mm256_fmadd_pd(pc, r2, splat(1.0 / 720.0));
    pc = _mm256_fmadd_pd(pc, r2, splat(-1.0 / 24.0));
    pc = _mm256_fmadd_pd(pc, r2, splat(0.5));
    const __m256d cr = _mm256_fnmadd_pd(pc, r2, splat(1.0));

    // Quadrant q = n mod 4 selects (sin, cos) among (+-sr, +-cr).
    const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i swap = _mm256_cmpeq_epi64(_mm256_and_si256(q, one), one);
    const __m256i two = _mm256_set1_epi64x(2);
    const __m256i q1 = _mm256_add_epi64(q, one);
    const __m256d sign_s = _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_srli_epi64(_mm256_and_si256(q, two), 1), 63));
    const __m256d sign_c = _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_srli_epi64(_mm256_and_si256(q1, two), 1), 63));
    const __m256d swapd = _mm256_castsi256_pd(swap);
    *s = _mm256_xor_pd(_mm256_blendv_pd(sr, cr, swapd), sign_s);
    *c = _mm256_xor_pd(_mm256_blendv_pd(cr, sr, swapd), sign_c);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

bool available() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

Complex power_row_sum(double a, double b, double c, long j0, long j1, Complex s) {
    const __m256d va = splat(a), vb = splat(b), vc = splat(c);
    const __m256d sr = splat(-s.real()), si = splat(s.imag());
    __m256d acc_re = _mm256_setzero_pd(), acc_im = _mm256_setzero_pd();
    __m256d x = _mm256_add_pd(splat(static_cast<double>(j0)), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
    const __m256d step = splat(4.0);
    long j = j0;
    for (; j + 3 <= j1; j += 4) {
        const __m256d q = _mm256_fmadd_pd(_mm256_fmadd_pd(va, x, vb), x, vc);
        const __m256d l = vlog(q);
        const __m256d mag = vexp(_mm256_mul_pd(sr, l));
        __m256d sn, cs;
        vsincos(_mm256_mul_pd(si, l), &sn, &cs);
        acc_re = _mm256_fmadd_pd(mag, cs, acc_re);
        acc_im = _mm256_fnmadd_pd(mag, sn, acc_im);
        x = _mm256_add_pd(x, step);
    }
    Complex tail{};
    if (j <= j1) tail = scalar::power_row_sum(a, b, c, j, j1, s);
    return Complex(hsum(acc_re), hsum(acc_im)) + tail;
}

double gaussian_row_sum(double a, double b, double c, long j0, long j1, double scale) {
    const __m256d va = splat(a), vb = splat(b), vc = splat(c), vs = splat(-scale);
    __m256d acc = _mm256_setzero_pd();
    __m256d x = _mm256_add_pd(splat(static_cast<double>(j0)), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
    const __m256d step = splat(4.0);
    long j = j0;
    for (; j + 3 <= j1; j += 4) {
        const __m256d q = _mm256_fmadd_pd(_mm256_fmadd_pd(va, x, vb), x, vc);
        acc = _mm256_add_pd(acc, vexp(_mm256_mul_pd(vs, q)));
        x = _mm256_add_pd(x, step);
    }
    double tail = 0.0;
    if (j <= j1) tail = scalar::gaussian_row_sum(a, b, c, j, j1, scale);
    return hsum(acc) + tail;
}

}  // namespace tzeta::kernels::avx2
