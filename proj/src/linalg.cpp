#include "dynlie/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dynlie/error.hpp"
#include "dynlie/kernels.hpp"

namespace dynlie {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator: dimension mismatch (" +
                                                  std::to_string(a.dim()) + " vs " +
                                                  std::to_string(b.dim()) + ")");
  }
  ComplexMatrix c(a.dim());
  kernels::active().commutator(a.raw(), b.raw(), c.raw(), a.dim());
  return c;
}

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "hs_inner: dimension mismatch");
  }
  // Re(conj(a) b) = a.re * b.re + a.im * b.im, so the inner product is a
  // plain dot product over the interleaved storage.
  return kernels::active().dot(a.raw(), b.raw(), a.raw_size());
}

OrthoBasis::OrthoBasis(std::size_t matrix_dim, double tolerance)
    : matrix_dim_(matrix_dim), tolerance_(tolerance) {
  if (!(tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "OrthoBasis: tolerance must be positive");
  }
}

ComplexMatrix OrthoBasis::project_out(const ComplexMatrix& candidate) const {
  if (candidate.dim() != matrix_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "OrthoBasis: candidate dimension " +
                                                  std::to_string(candidate.dim()) +
                                                  " != basis dimension " +
                                                  std::to_string(matrix_dim_));
  }
  const auto& k = kernels::active();
  ComplexMatrix residual = candidate;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : elements_) {
      const double c = k.dot(e.raw(), residual.raw(), residual.raw_size());
      k.axpy(-c, e.raw(), residual.raw(), residual.raw_size());
    }
  }
  return residual;
}

OrthoBasis::Offer OrthoBasis::offer(const ComplexMatrix& candidate) {
  if (!candidate.all_finite()) {
    throw Error(ErrorCode::NonFinite, "OrthoBasis: candidate has non-finite entries");
  }
  const double original = candidate.frobenius_norm();
  if (original <= kAbsoluteFloor) return {false, original};

  ComplexMatrix residual = project_out(candidate);
  const double rnorm = residual.frobenius_norm();
  if (rnorm <= std::max(tolerance_ * original, kAbsoluteFloor)) return {false, rnorm};

  residual *= 1.0 / rnorm;
  elements_.push_back(std::move(residual));
  return {true, rnorm};
}

std::vector<double> OrthoBasis::coordinates(const ComplexMatrix& m) const {
  std::vector<double> coords;
  coords.reserve(elements_.size());
  for (const auto& e : elements_) coords.push_back(hs_inner(e, m));
  return coords;
}

ExtendResult extend_orthonormal(const OrthoBasis& basis, const ComplexMatrix& candidate) {
  ExtendResult out{false, basis, 0.0};
  const auto offer = out.basis.offer(candidate);
  out.accepted = offer.accepted;
  out.residual_norm = offer.residual_norm;
  return out;
}

}  // namespace dynlie
