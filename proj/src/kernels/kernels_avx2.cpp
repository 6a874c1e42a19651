// AVX2 kernel variants. Compiled with -mavx2 -mfma on x86-64 only; runtime
// dispatch lives in dispatch.cpp. Elementwise kernels replicate the scalar
// operation order exactly (explicit mul/add intrinsics, no FMA contraction),
// so they are bitwise-equal to the reference path; tails defer to the scalar
// table for the same reason.

#include "frontflow/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace frontflow::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_min_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_min_sd(lo, sh));
}

const __m256d kZero = _mm256_setzero_pd();
const __m256d kOne = _mm256_set1_pd(1.0);
const __m256d kAbsMask =
    _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double dot_avx2(const double* a, const double* b, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  __m256d acc = kZero;
  for (std::size_t i = 0; i < nv; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  return hsum(acc) + scalar_ops().dot(a + nv, b + nv, n - nv);
}

double sum_avx2(const double* a, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  __m256d acc = kZero;
  for (std::size_t i = 0; i < nv; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  }
  return hsum(acc) + scalar_ops().sum(a + nv, n - nv);
}

double l1_diff_avx2(const double* a, const double* b, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  __m256d acc = kZero;
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_and_pd(d, kAbsMask));
  }
  return hsum(acc) + scalar_ops().l1_diff(a + nv, b + nv, n - nv);
}

double max_abs_avx2(const double* a, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  __m256d acc = kZero;
  for (std::size_t i = 0; i < nv; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(a + i), kAbsMask));
  }
  double m = hmax(acc);
  const double tail = scalar_ops().max_abs(a + nv, n - nv);
  return m > tail ? m : tail;
}

double max_val_avx2(const double* a, std::size_t n) {
  if (n < 4) return scalar_ops().max_val(a, n);
  const std::size_t nv = n & ~std::size_t(3);
  __m256d acc = _mm256_loadu_pd(a);
  for (std::size_t i = 4; i < nv; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_loadu_pd(a + i));
  }
  double m = hmax(acc);
  for (std::size_t i = nv; i < n; ++i) m = a[i] > m ? a[i] : m;
  return m;
}

double min_val_avx2(const double* a, std::size_t n) {
  if (n < 4) return scalar_ops().min_val(a, n);
  const std::size_t nv = n & ~std::size_t(3);
  __m256d acc = _mm256_loadu_pd(a);
  for (std::size_t i = 4; i < nv; i += 4) {
    acc = _mm256_min_pd(acc, _mm256_loadu_pd(a + i));
  }
  double m = hmin(acc);
  for (std::size_t i = nv; i < n; ++i) m = a[i] < m ? a[i] : m;
  return m;
}

void threshold_ge0_avx2(const double* u, double* out, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(u + i), kZero, _CMP_GE_OQ);
    _mm256_storeu_pd(out + i, _mm256_and_pd(mask, kOne));
  }
  scalar_ops().threshold_ge0(u + nv, out + nv, n - nv);
}

void linear_ramp_avx2(const double* u, double eps, double* out,
                      std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  const __m256d veps = _mm256_set1_pd(eps);
  const __m256d vinv = _mm256_set1_pd(1.0 / (2.0 * eps));
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d r =
        _mm256_mul_pd(_mm256_add_pd(_mm256_loadu_pd(u + i), veps), vinv);
    r = _mm256_min_pd(_mm256_max_pd(r, kZero), kOne);
    _mm256_storeu_pd(out + i, r);
  }
  scalar_ops().linear_ramp(u + nv, eps, out + nv, n - nv);
}

void transport_update_avx2(double* out, const double* u, const double* c,
                           const double* g, double dt, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  const __m256d vdt = _mm256_set1_pd(dt);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d cg = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(g + i));
    _mm256_storeu_pd(
        out + i, _mm256_add_pd(_mm256_loadu_pd(u + i), _mm256_mul_pd(vdt, cg)));
  }
  scalar_ops().transport_update(out + nv, u + nv, c + nv, g + nv, dt, n - nv);
}

void upwind_quad_accum_avx2(double* acc, const double* um, const double* uc,
                            const double* up, const double* c, double inv_h,
                            std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  const __m256d vih = _mm256_set1_pd(inv_h);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d vuc = _mm256_loadu_pd(uc + i);
    __m256d dm =
        _mm256_mul_pd(_mm256_sub_pd(vuc, _mm256_loadu_pd(um + i)), vih);
    __m256d dp =
        _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(up + i), vuc), vih);
    __m256d expanding = _mm256_cmp_pd(_mm256_loadu_pd(c + i), kZero,
                                      _CMP_GE_OQ);
    __m256d a = _mm256_blendv_pd(_mm256_max_pd(dm, kZero),
                                 _mm256_min_pd(dm, kZero), expanding);
    __m256d b = _mm256_blendv_pd(_mm256_min_pd(dp, kZero),
                                 _mm256_max_pd(dp, kZero), expanding);
    __m256d q = _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), q));
  }
  scalar_ops().upwind_quad_accum(acc + nv, um + nv, uc + nv, up + nv, c + nv,
                                 inv_h, n - nv);
}

void laplacian_accum_avx2(double* acc, const double* um, const double* uc,
                          const double* up, double inv_h2, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  const __m256d vih2 = _mm256_set1_pd(inv_h2);
  const __m256d vtwo = _mm256_set1_pd(2.0);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d s = _mm256_add_pd(_mm256_loadu_pd(um + i), _mm256_loadu_pd(up + i));
    __m256d t = _mm256_sub_pd(s, _mm256_mul_pd(vtwo, _mm256_loadu_pd(uc + i)));
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i),
                                            _mm256_mul_pd(t, vih2)));
  }
  scalar_ops().laplacian_accum(acc + nv, um + nv, uc + nv, up + nv, inv_h2,
                               n - nv);
}

void reaction_update_avx2(double* out, const double* v, const double* lap,
                          const double* gpv, const double* gmv,
                          const double* chi, double dt, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  const __m256d vdt = _mm256_set1_pd(dt);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d vchi = _mm256_loadu_pd(chi + i);
    __m256d src = _mm256_add_pd(
        _mm256_mul_pd(_mm256_loadu_pd(gpv + i), vchi),
        _mm256_mul_pd(_mm256_loadu_pd(gmv + i), _mm256_sub_pd(kOne, vchi)));
    __m256d r = _mm256_add_pd(_mm256_loadu_pd(lap + i), src);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(v + i),
                                            _mm256_mul_pd(vdt, r)));
  }
  scalar_ops().reaction_update(out + nv, v + nv, lap + nv, gpv + nv, gmv + nv,
                               chi + nv, dt, n - nv);
}

void relax_mix_avx2(double* out, const double* a, const double* b,
                    double theta, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  const __m256d vth = _mm256_set1_pd(theta);
  const __m256d vom = _mm256_set1_pd(1.0 - theta);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_mul_pd(vom, _mm256_loadu_pd(a + i)),
                              _mm256_mul_pd(vth, _mm256_loadu_pd(b + i)));
    r = _mm256_min_pd(_mm256_max_pd(r, kZero), kOne);
    _mm256_storeu_pd(out + i, r);
  }
  scalar_ops().relax_mix(out + nv, a + nv, b + nv, theta, n - nv);
}

void elementwise_sqrt_avx2(double* out, const double* a, std::size_t n) {
  const std::size_t nv = n & ~std::size_t(3);
  for (std::size_t i = 0; i < nv; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(_mm256_loadu_pd(a + i)));
  }
  scalar_ops().elementwise_sqrt(out + nv, a + nv, n - nv);
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops table = {
      "avx2",
      dot_avx2,
      sum_avx2,
      l1_diff_avx2,
      max_abs_avx2,
      max_val_avx2,
      min_val_avx2,
      threshold_ge0_avx2,
      linear_ramp_avx2,
      transport_update_avx2,
      upwind_quad_accum_avx2,
      laplacian_accum_avx2,
      reaction_update_avx2,
      relax_mix_avx2,
      elementwise_sqrt_avx2,
  };
  return &table;
}

}  // namespace frontflow::kernels
