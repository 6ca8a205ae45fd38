#pragma once

#include <cstddef>

namespace dynlie::kernels {

namespace scalar {
void matmul(const double* a, const double* b, double* c, std::size_t n);
void commutator(const double* a, const double* b, double* c, std::size_t n);
double dot(const double* x, const double* y, std::size_t len);
void axpy(double alpha, const double* x, double* y, std::size_t len);
}  // namespace scalar

#if defined(DYNLIE_HAVE_AVX2_KERNELS)
namespace avx2 {
void matmul(const double* a, const double* b, double* c, std::size_t n);
void commutator(const double* a, const double* b, double* c, std::size_t n);
double dot(const double* x, const double* y, std::size_t len);
void axpy(double alpha, const double* x, double* y, std::size_t len);
}  // namespace avx2
#endif

}  // namespace dynlie::kernels
