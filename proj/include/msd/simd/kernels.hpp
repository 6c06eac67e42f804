#pragma once

// Data-parallel inner loops shared by the distribution, detector and
// classifier code. Every kernel has a scalar reference implementation; the
// vector variants (AVX2 on x86-64, NEON on AArch64) are selected once at
// runtime and must agree with the reference up to summation-order rounding.
//
// The active variant can be overridden with MSD_SIMD=scalar|avx2|neon|auto
// or with select().

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace msd::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

struct KernelTable {
  Isa isa;
  // sum |a[i] - b[i]|
  double (*abs_diff_sum)(const double* a, const double* b, std::size_t n);
  // sum |sa * a[i] - sb * b[i]|
  double (*scaled_abs_diff_sum)(const double* a, const double* b, double sa,
                                double sb, std::size_t n);
  // dst[i] = s * src[i]
  void (*scale)(const double* src, double s, double* dst, std::size_t n);
  // sum a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // sum table[idx[i]]
  double (*gather_sum)(const double* table, const std::uint32_t* idx,
                       std::size_t n);
  // sum values[i] * table[idx[i]]
  double (*gather_dot)(const double* table, const std::uint32_t* idx,
                       const double* values, std::size_t n);
};

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Kernel table of a specific variant; throws std::invalid_argument when the
/// variant is unavailable.
const KernelTable& table_for(Isa isa);

/// Currently selected kernel table.
const KernelTable& active();

/// Best variant supported by this CPU.
Isa best_available();

/// Force a variant. Throws std::invalid_argument when it is unavailable.
void select(Isa isa);

// Span front-ends over the active table. Sizes of paired spans must match;
// mismatches throw msd::DimensionError. Gather indices are not range-checked
// and must be < table.size().
double abs_diff_sum(std::span<const double> a, std::span<const double> b);
double scaled_abs_diff_sum(std::span<const double> a,
                           std::span<const double> b, double sa, double sb);
void scale(std::span<const double> src, double s, std::span<double> dst);
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double gather_sum(std::span<const double> table,
                  std::span<const std::uint32_t> idx);
double gather_dot(std::span<const double> table,
                  std::span<const std::uint32_t> idx,
                  std::span<const double> values);

namespace detail {
const KernelTable& scalar_table();
#if defined(MSD_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(MSD_HAVE_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

}  // namespace msd::simd
