#pragma once
// Shared helpers for the test executables: seeded random matrices and
// systems, plus conversions.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dynlie/criteria.hpp"
#include "dynlie/hamiltonian.hpp"
#include "dynlie/matrix.hpp"

namespace testing {

using dynlie::Complex;
using dynlie::ComplexMatrix;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611ULL);
  return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline ComplexMatrix random_matrix(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {uniform(-1, 1), uniform(-1, 1)};
  return m;
}

inline ComplexMatrix random_skew_hermitian(std::size_t n) {
  const ComplexMatrix a = random_matrix(n);
  return (a - a.adjoint()) * 0.5;
}

inline ComplexMatrix random_unitary(std::size_t n) {
  Eigen::MatrixXcd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = {uniform(-1, 1), uniform(-1, 1)};
  const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
  ComplexMatrix u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = q(i, j);
  return u;
}

inline ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return dynlie::multiply(dynlie::multiply(u, m), u.adjoint());
}

/// Energies with the given gaps starting at a random offset.
inline std::vector<double> energies_from_gaps(const std::vector<double>& gaps) {
  std::vector<double> e{uniform(-2, 2)};
  for (double g : gaps) e.push_back(e.back() + g);
  return e;
}

inline dynlie::SystemSpec random_generic_spec(std::size_t n) {
  dynlie::SystemSpec s;
  std::vector<double> gaps;
  for (std::size_t k = 0; k + 1 < n; ++k) gaps.push_back(uniform(0.3, 3.0));
  s.energies = energies_from_gaps(gaps);
  for (std::size_t k = 0; k + 1 < n; ++k) s.dipoles.push_back(uniform(0.3, 2.0) * (uniform(0, 1) < 0.2 ? -1 : 1));
  return s;
}

/// Palindromic gaps and dipoles; energies are centred on zero so that
/// E_k + E_{N-1-k} = 0 holds exactly.
inline dynlie::SystemSpec random_symmetric_spec(std::size_t n) {
  dynlie::SystemSpec s;
  const std::size_t m = n - 1;
  std::vector<double> half(n / 2);
  double x = n % 2 ? 0.0 : uniform(0.3, 3.0) / 2;
  for (std::size_t k = 0; k < n / 2; ++k) {
    if (k > 0 || n % 2) x += uniform(0.3, 3.0);
    half[k] = x;
  }
  s.energies.assign(n, 0.0);
  for (std::size_t k = 0; k < n / 2; ++k) {
    s.energies[n / 2 - 1 - k] = -half[k];
    s.energies[n - n / 2 + k] = half[k];
  }
  s.dipoles.assign(m, 0.0);
  for (std::size_t k = 0; k < (m + 1) / 2; ++k) s.dipoles[k] = s.dipoles[m - 1 - k] = uniform(0.3, 2.0);
  return s;
}

inline dynlie::SystemSpec uniform_spec(std::size_t n) {
  dynlie::SystemSpec s;
  for (std::size_t k = 0; k < n; ++k) s.energies.push_back(static_cast<double>(k + 1));
  s.dipoles.assign(n - 1, 1.0);
  return s;
}

/// Equal spacing with d_m = sqrt(m) mirrored about the centre.
inline dynlie::SystemSpec sqrt_pattern_spec(std::size_t n) {
  dynlie::SystemSpec s = uniform_spec(n);
  for (std::size_t k = 0; k < n - 1; ++k) {
    const std::size_t m = std::min(k + 1, n - 1 - k);
    s.dipoles[k] = std::sqrt(static_cast<double>(m));
  }
  return s;
}

}  // namespace testing
