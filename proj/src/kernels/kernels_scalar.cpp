#include "kernels_impl.hpp"

namespace dynlie::kernels::scalar {

void matmul(const double* a, const double* b, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = c + 2 * i * n;
    for (std::size_t j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[2 * (i * n + k)];
      const double ai = a[2 * (i * n + k) + 1];
      const double* brow = b + 2 * k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void commutator(const double* a, const double* b, double* c, std::size_t n) {
  // c = ab accumulated directly, then ba subtracted row by row.
  matmul(a, b, c, n);
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = c + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double br = b[2 * (i * n + k)];
      const double bi = b[2 * (i * n + k) + 1];
      const double* arow = a + 2 * k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double ar = arow[2 * j];
        const double ai = arow[2 * j + 1];
        crow[2 * j] -= br * ar - bi * ai;
        crow[2 * j + 1] -= br * ai + bi * ar;
      }
    }
  }
}

double dot(const double* x, const double* y, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

}  // namespace dynlie::kernels::scalar
