#include <atomic>
#include <cstdlib>
#include <string_view>

#include "dynlie/kernels.hpp"
#include "kernels_impl.hpp"

namespace dynlie::kernels {

namespace {

constexpr KernelTable kScalar{&scalar::matmul, &scalar::commutator, &scalar::dot,
                              &scalar::axpy};

#if defined(DYNLIE_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{&avx2::matmul, &avx2::commutator, &avx2::dot, &avx2::axpy};
#endif

const KernelTable* initial_selection() noexcept {
  const char* env = std::getenv("DYNLIE_KERNELS");
  const std::string_view request = env != nullptr ? env : "";
  if (request == "scalar") return &kScalar;
  if (const KernelTable* simd = avx2_table(); simd != nullptr && cpu_supports_avx2()) {
    return simd;
  }
  return &kScalar;
}

std::atomic<const KernelTable*>& selection() noexcept {
  static std::atomic<const KernelTable*> current{initial_selection()};
  return current;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(DYNLIE_HAVE_AVX2_KERNELS)
  return &kAvx2;
#else
  return nullptr;
#endif
}

bool cpu_supports_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& active() noexcept { return *selection().load(std::memory_order_acquire); }

Backend active_backend() noexcept {
  return &active() == &kScalar ? Backend::Scalar : Backend::Avx2;
}

bool set_backend(Backend backend) noexcept {
  if (backend == Backend::Scalar) {
    selection().store(&kScalar, std::memory_order_release);
    return true;
  }
  const KernelTable* simd = avx2_table();
  if (simd == nullptr || !cpu_supports_avx2()) return false;
  selection().store(simd, std::memory_order_release);
  return true;
}

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::Scalar ? "scalar" : "avx2";
}

}  // namespace dynlie::kernels
