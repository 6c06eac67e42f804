#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "msd/errors.hpp"
#include "msd/simd/kernels.hpp"

namespace msd::simd {
namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(MSD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(MSD_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* initial_table() {
  Isa isa = best_available();
  if (const char* env = std::getenv("MSD_SIMD")) {
    const std::string_view name(env);
    if (name != "auto") {
      // Unknown or unsupported requests fall back to auto-detection.
      if (auto parsed = parse_isa(name); parsed && isa_available(*parsed)) {
        isa = *parsed;
      }
    }
  }
  return &table_for(isa);
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": operand sizes differ (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "neon") return Isa::Neon;
  return std::nullopt;
}

bool isa_available(Isa isa) { return cpu_supports(isa); }

const KernelTable& table_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("SIMD variant '" + std::string(isa_name(isa)) +
                                "' is not available on this machine");
  }
  switch (isa) {
#if defined(MSD_HAVE_AVX2)
    case Isa::Avx2:
      return detail::avx2_table();
#endif
#if defined(MSD_HAVE_NEON)
    case Isa::Neon:
      return detail::neon_table();
#endif
    default:
      return detail::scalar_table();
  }
}

Isa best_available() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const KernelTable& active() {
  return *active_slot().load(std::memory_order_acquire);
}

void select(Isa isa) {
  active_slot().store(&table_for(isa), std::memory_order_release);
}

double abs_diff_sum(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size(), "abs_diff_sum");
  return active().abs_diff_sum(a.data(), b.data(), a.size());
}

double scaled_abs_diff_sum(std::span<const double> a,
                           std::span<const double> b, double sa, double sb) {
  require_same_size(a.size(), b.size(), "scaled_abs_diff_sum");
  return active().scaled_abs_diff_sum(a.data(), b.data(), sa, sb, a.size());
}

void scale(std::span<const double> src, double s, std::span<double> dst) {
  require_same_size(src.size(), dst.size(), "scale");
  active().scale(src.data(), s, dst.data(), src.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size(), "dot");
  return active().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  require_same_size(x.size(), y.size(), "axpy");
  active().axpy(alpha, x.data(), y.data(), x.size());
}

double gather_sum(std::span<const double> table,
                  std::span<const std::uint32_t> idx) {
  return active().gather_sum(table.data(), idx.data(), idx.size());
}

double gather_dot(std::span<const double> table,
                  std::span<const std::uint32_t> idx,
                  std::span<const double> values) {
  require_same_size(idx.size(), values.size(), "gather_dot");
  return active().gather_dot(table.data(), idx.data(), values.data(),
                             idx.size());
}

}  // namespace msd::simd
