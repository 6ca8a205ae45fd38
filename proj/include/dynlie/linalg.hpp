#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynlie/matrix.hpp"

namespace dynlie {

inline constexpr double kDefaultTolerance = 1e-9;
/// Candidates at or below this norm are treated as analytically zero.
inline constexpr double kAbsoluteFloor = 1e-12;

/// [a, b] = ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real Hilbert-Schmidt inner product Re Tr(a^dagger b).
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

inline double hs_norm(const ComplexMatrix& a) { return a.frobenius_norm(); }

/// Orthonormal (under hs_inner) list of matrices spanning a real subspace.
class OrthoBasis {
 public:
  struct Offer {
    bool accepted = false;
    double residual_norm = 0.0;
  };

  OrthoBasis() = default;
  OrthoBasis(std::size_t matrix_dim, double tolerance = kDefaultTolerance);

  std::size_t matrix_dim() const noexcept { return matrix_dim_; }
  double tolerance() const noexcept { return tolerance_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const ComplexMatrix& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const ComplexMatrix> elements() const noexcept { return elements_; }

  /// Projects the candidate off the span (two modified Gram-Schmidt passes)
  /// and appends the normalised residual when it exceeds both
  /// tolerance * |candidate| and kAbsoluteFloor.
  Offer offer(const ComplexMatrix& candidate);

  /// Residual of the candidate after projection onto the span; the basis is
  /// left untouched.
  ComplexMatrix project_out(const ComplexMatrix& candidate) const;

  /// Real coordinates of the orthogonal projection of m onto the span.
  std::vector<double> coordinates(const ComplexMatrix& m) const;

 private:
  std::size_t matrix_dim_ = 0;
  double tolerance_ = kDefaultTolerance;
  std::vector<ComplexMatrix> elements_;
};

struct ExtendResult {
  bool accepted = false;
  OrthoBasis basis;
  double residual_norm = 0.0;
};

/// Value-returning form of OrthoBasis::offer.
ExtendResult extend_orthonormal(const OrthoBasis& basis, const ComplexMatrix& candidate);

/// Common kernel of a family of linear functionals on N x N complex
/// matrices. Row R acts as S -> sum_{ij} R_ij S_ij (no conjugation).
/// Matrices are vectorised column-major (index j * N + i) before the SVD;
/// singular values below tolerance * sigma_max count as zero. The returned
/// matrices are orthonormal under the complex Frobenius inner product.
std::vector<ComplexMatrix> nullspace(std::span<const ComplexMatrix> rows,
                                     double tolerance = kDefaultTolerance);

}  // namespace dynlie
