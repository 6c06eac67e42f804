// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "msd/simd/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace msd::simd::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(
        acc0, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i),
                                   _mm256_loadu_pd(b + i))));
    acc1 = _mm256_add_pd(
        acc1, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i + 4),
                                   _mm256_loadu_pd(b + i + 4))));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(
        acc0, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i),
                                   _mm256_loadu_pd(b + i))));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += std::fabs(a[i] - b[i]);
  return acc;
}

double scaled_abs_diff_sum(const double* a, const double* b, double sa,
                           double sb, std::size_t n) {
  const __m256d va = _mm256_set1_pd(sa);
  const __m256d vb = _mm256_set1_pd(sb);
  __m256d acc0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // Keep mul/sub separate (no FMA) so rounding matches the reference.
    const __m256d x = _mm256_mul_pd(va, _mm256_loadu_pd(a + i));
    const __m256d y = _mm256_mul_pd(vb, _mm256_loadu_pd(b + i));
    acc0 = _mm256_add_pd(acc0, abs_pd(_mm256_sub_pd(x, y)));
  }
  double acc = hsum(acc0);
  for (; i < n; ++i) acc += std::fabs(sa * a[i] - sb * b[i]);
  return acc;
}

void scale(const double* src, double s, double* dst, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(vs, _mm256_loadu_pd(src + i)));
  }
  for (; i < n; ++i) dst[i] = s * src[i];
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

inline __m128i load_idx4(const std::uint32_t* idx) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx));
}

// Indices are reinterpreted as signed 32-bit offsets by the gather; tables
// are far below 2^31 entries.
double gather_sum(const double* table, const std::uint32_t* idx,
                  std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_i32gather_pd(table, load_idx4(idx + i), 8));
    acc1 = _mm256_add_pd(acc1,
                         _mm256_i32gather_pd(table, load_idx4(idx + i + 4), 8));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_i32gather_pd(table, load_idx4(idx + i), 8));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += table[idx[i]];
  return acc;
}

double gather_dot(const double* table, const std::uint32_t* idx,
                  const double* values, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_i32gather_pd(table, load_idx4(idx + i), 8);
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(values + i), t, acc0);
  }
  double acc = hsum(acc0);
  for (; i < n; ++i) acc += values[i] * table[idx[i]];
  return acc;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::Avx2,  abs_diff_sum, scaled_abs_diff_sum,
                                 scale,      dot,          axpy,
                                 gather_sum, gather_dot};
  return table;
}

}  // namespace msd::simd::detail
