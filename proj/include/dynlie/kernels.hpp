#pragma once

// Inner-loop kernels over interleaved complex storage (re, im, re, im, ...).
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2/FMA variant is compiled in a separate translation unit and selected at
// first use when the CPU reports both features. The choice can be forced with
// the DYNLIE_KERNELS environment variable ("scalar" or "avx2") or, in tests,
// with set_backend().

#include <cstddef>
#include <string_view>

namespace dynlie::kernels {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  /// c = a * b for n x n row-major complex matrices.
  void (*matmul)(const double* a, const double* b, double* c, std::size_t n);
  /// c = a * b - b * a.
  void (*commutator)(const double* a, const double* b, double* c, std::size_t n);
  /// Real dot product over len doubles.
  double (*dot)(const double* x, const double* y, std::size_t len);
  /// y += alpha * x over len doubles.
  void (*axpy)(double alpha, const double* x, double* y, std::size_t len);
};

const KernelTable& scalar_table() noexcept;

/// Null when the AVX2 variant was not compiled in.
const KernelTable* avx2_table() noexcept;

bool cpu_supports_avx2() noexcept;

/// The table used by the library.
const KernelTable& active() noexcept;
Backend active_backend() noexcept;

/// Returns false (and leaves the selection unchanged) when the backend is
/// unavailable on this build or CPU.
bool set_backend(Backend backend) noexcept;

std::string_view to_string(Backend backend) noexcept;

}  // namespace dynlie::kernels
