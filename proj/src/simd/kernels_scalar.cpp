#include "msd/simd/kernels.hpp"

#include <cmath>

namespace msd::simd::detail {
namespace {

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(a[i] - b[i]);
  return acc;
}

double scaled_abs_diff_sum(const double* a, const double* b, double sa,
                           double sb, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(sa * a[i] - sb * b[i]);
  return acc;
}

void scale(const double* src, double s, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = s * src[i];
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double gather_sum(const double* table, const std::uint32_t* idx,
                  std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += table[idx[i]];
  return acc;
}

double gather_dot(const double* table, const std::uint32_t* idx,
                  const double* values, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += values[i] * table[idx[i]];
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, abs_diff_sum, scaled_abs_diff_sum,
                                 scale,       dot,          axpy,
                                 gather_sum,  gather_dot};
  return table;
}

}  // namespace msd::simd::detail
