// Compiled with -mavx2 -mfma; only reached through the dispatch table after a
// CPU feature check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace dynlie::kernels::avx2 {

namespace {

// Sum of products for one complex output pair: given acc_re = sum(ar * b) and
// acc_im = sum(ai * swap(b)), the complex result is addsub(acc_re, acc_im).
inline __m256d finish(__m256d acc_re, __m256d acc_im) {
  return _mm256_addsub_pd(acc_re, acc_im);
}

inline __m128d finish(__m128d acc_re, __m128d acc_im) {
  return _mm_addsub_pd(acc_re, acc_im);
}

inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }
inline __m128d swap_pairs(__m128d v) { return _mm_permute_pd(v, 0b01); }

}  // namespace

void matmul(const double* a, const double* b, double* c, std::size_t n) {
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double* arow = a + 2 * i * n;
    double* crow = c + 2 * i * n;
    for (std::size_t jp = 0; jp < pairs; ++jp) {
      __m256d acc_re = _mm256_setzero_pd();
      __m256d acc_im = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d bv = _mm256_loadu_pd(b + 2 * (k * n + 2 * jp));
        acc_re = _mm256_fmadd_pd(_mm256_broadcast_sd(arow + 2 * k), bv, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_broadcast_sd(arow + 2 * k + 1), swap_pairs(bv), acc_im);
      }
      _mm256_storeu_pd(crow + 4 * jp, finish(acc_re, acc_im));
    }
    if (n % 2 != 0) {
      const std::size_t j = n - 1;
      __m128d acc_re = _mm_setzero_pd();
      __m128d acc_im = _mm_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m128d bv = _mm_loadu_pd(b + 2 * (k * n + j));
        acc_re = _mm_fmadd_pd(_mm_set1_pd(arow[2 * k]), bv, acc_re);
        acc_im = _mm_fmadd_pd(_mm_set1_pd(arow[2 * k + 1]), swap_pairs(bv), acc_im);
      }
      _mm_storeu_pd(crow + 2 * j, finish(acc_re, acc_im));
    }
  }
}

void commutator(const double* a, const double* b, double* c, std::size_t n) {
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double* arow = a + 2 * i * n;
    const double* brow = b + 2 * i * n;
    double* crow = c + 2 * i * n;
    for (std::size_t jp = 0; jp < pairs; ++jp) {
      __m256d ab_re = _mm256_setzero_pd();
      __m256d ab_im = _mm256_setzero_pd();
      __m256d ba_re = _mm256_setzero_pd();
      __m256d ba_im = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d bv = _mm256_loadu_pd(b + 2 * (k * n + 2 * jp));
        const __m256d av = _mm256_loadu_pd(a + 2 * (k * n + 2 * jp));
        ab_re = _mm256_fmadd_pd(_mm256_broadcast_sd(arow + 2 * k), bv, ab_re);
        ab_im = _mm256_fmadd_pd(_mm256_broadcast_sd(arow + 2 * k + 1), swap_pairs(bv), ab_im);
        ba_re = _mm256_fmadd_pd(_mm256_broadcast_sd(brow + 2 * k), av, ba_re);
        ba_im = _mm256_fmadd_pd(_mm256_broadcast_sd(brow + 2 * k + 1), swap_pairs(av), ba_im);
      }
      _mm256_storeu_pd(crow + 4 * jp,
                       _mm256_sub_pd(finish(ab_re, ab_im), finish(ba_re, ba_im)));
    }
    if (n % 2 != 0) {
      const std::size_t j = n - 1;
      __m128d ab_re = _mm_setzero_pd();
      __m128d ab_im = _mm_setzero_pd();
      __m128d ba_re = _mm_setzero_pd();
      __m128d ba_im = _mm_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m128d bv = _mm_loadu_pd(b + 2 * (k * n + j));
        const __m128d av = _mm_loadu_pd(a + 2 * (k * n + j));
        ab_re = _mm_fmadd_pd(_mm_set1_pd(arow[2 * k]), bv, ab_re);
        ab_im = _mm_fmadd_pd(_mm_set1_pd(arow[2 * k + 1]), swap_pairs(bv), ab_im);
        ba_re = _mm_fmadd_pd(_mm_set1_pd(brow[2 * k]), av, ba_re);
        ba_im = _mm_fmadd_pd(_mm_set1_pd(brow[2 * k + 1]), swap_pairs(av), ba_im);
      }
      _mm_storeu_pd(crow + 2 * j, _mm_sub_pd(finish(ab_re, ab_im), finish(ba_re, ba_im)));
    }
  }
}

double dot(const double* x, const double* y, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= len; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d half = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double total = _mm_cvtsd_f64(_mm_add_sd(half, _mm_unpackhi_pd(half, half)));
  for (; i < len; ++i) total += x[i] * y[i];
  return total;
}

void axpy(double alpha, const double* x, double* y, std::size_t len) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < len; ++i) y[i] += alpha * x[i];
}

}  // namespace dynlie::kernels::avx2
