// AArch64 only; Advanced SIMD is part of the base ISA there.

#include "msd/simd/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace msd::simd::detail {
namespace {

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc1 = vaddq_f64(acc1,
                     vabdq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += std::fabs(a[i] - b[i]);
  return acc;
}

double scaled_abs_diff_sum(const double* a, const double* b, double sa,
                           double sb, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(sa);
  const float64x2_t vb = vdupq_n_f64(sb);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vmulq_f64(va, vld1q_f64(a + i));
    const float64x2_t y = vmulq_f64(vb, vld1q_f64(b + i));
    acc0 = vaddq_f64(acc0, vabdq_f64(x, y));
  }
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) acc += std::fabs(sa * a[i] - sb * b[i]);
  return acc;
}

void scale(const double* src, double s, double* dst, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vmulq_f64(vs, vld1q_f64(src + i)));
  for (; i < n; ++i) dst[i] = s * src[i];
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

inline float64x2_t gather2(const double* table, const std::uint32_t* idx) {
  float64x2_t v = vdupq_n_f64(table[idx[0]]);
  return vsetq_lane_f64(table[idx[1]], v, 1);
}

double gather_sum(const double* table, const std::uint32_t* idx,
                  std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, gather2(table, idx + i));
    acc1 = vaddq_f64(acc1, gather2(table, idx + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += table[idx[i]];
  return acc;
}

double gather_dot(const double* table, const std::uint32_t* idx,
                  const double* values, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(values + i), gather2(table, idx + i));
  }
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) acc += values[i] * table[idx[i]];
  return acc;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Isa::Neon,  abs_diff_sum, scaled_abs_diff_sum,
                                 scale,      dot,          axpy,
                                 gather_sum, gather_dot};
  return table;
}

}  // namespace msd::simd::detail
