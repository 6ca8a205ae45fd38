#include "dynlie/classifier.hpp"

#include <cmath>
#include <vector>

#include "dynlie/error.hpp"
#include "dynlie/linalg.hpp"

namespace dynlie {

const char* to_string(AlgebraFamily f) noexcept {
  switch (f) {
    case AlgebraFamily::SuN: return "SU_N";
    case AlgebraFamily::SoOdd: return "SO_ODD";
    case AlgebraFamily::Sp: return "SP";
    case AlgebraFamily::ProperSubalgebra: return "PROPER_SUBALGEBRA";
    case AlgebraFamily::Decomposable: return "DECOMPOSABLE";
    case AlgebraFamily::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

const char* to_string(FormSymmetry s) noexcept {
  switch (s) {
    case FormSymmetry::Symmetric: return "SYMMETRIC";
    case FormSymmetry::Antisymmetric: return "ANTISYMMETRIC";
    case FormSymmetry::Mixed: return "MIXED";
  }
  return "MIXED";
}

namespace {

constexpr double kDominantShare = 0.999;

// Row (p,q) of X^T S + S X: coefficient X_kp on S_kq and X_kq on S_pk.
void append_rows(const ComplexMatrix& x, std::vector<ComplexMatrix>& rows) {
  const std::size_t n = x.dim();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      ComplexMatrix r(n);
      for (std::size_t k = 0; k < n; ++k) {
        r(k, q) += x(k, p);
        r(p, k) += x(k, q);
      }
      rows.push_back(std::move(r));
    }
  }
}

ComplexMatrix normalised(const ComplexMatrix& s) {
  Complex pivot{0.0, 0.0};
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (std::abs(s(i, j)) > std::abs(pivot)) pivot = s(i, j);
  ComplexMatrix out = s;
  if (pivot == Complex{0.0, 0.0}) return out;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) out(i, j) /= pivot;
  return out;
}

}  // namespace

std::optional<FormEvidence> invariant_form(std::span<const ComplexMatrix> basis, double tolerance) {
  if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "invariant_form needs a nonempty basis");
  std::vector<ComplexMatrix> rows;
  rows.reserve(basis.size() * basis.front().dim() * basis.front().dim());
  for (const auto& x : basis) {
    if (x.dim() != basis.front().dim())
      throw Error(ErrorCode::DimensionMismatch, "basis elements differ in size");
    append_rows(x, rows);
  }
  const auto kernel = nullspace(rows, tolerance);
  if (kernel.empty()) return std::nullopt;

  FormEvidence ev;
  ev.kernel_dim = kernel.size();
  ev.form = normalised(kernel.front());
  const ComplexMatrix t = ev.form.transpose();
  const double sym = ((ev.form + t) * 0.5).frobenius_norm();
  const double anti = ((ev.form - t) * 0.5).frobenius_norm();
  const double total = sym * sym + anti * anti;
  ev.symmetric_fraction = total > 0.0 ? sym * sym / total : 0.0;
  if (ev.symmetric_fraction > kDominantShare)
    ev.symmetry = FormSymmetry::Symmetric;
  else if (1.0 - ev.symmetric_fraction > kDominantShare)
    ev.symmetry = FormSymmetry::Antisymmetric;
  else
    ev.symmetry = FormSymmetry::Mixed;
  return ev;
}

Classification classify(const ClosureResult& result, const ClassifyContext& context) {
  if (!result.converged) throw Error(ErrorCode::NotConverged, "closure did not converge");
  Classification c;
  c.dim = result.dim;
  c.ambient = result.basis.matrix_dim();
  const std::size_t n = c.ambient;

  if (context.zero_dipoles) {
    c.family = AlgebraFamily::Decomposable;
    c.note = "a vanishing dipole splits the level ladder into uncoupled blocks";
    return c;
  }
  if (c.dim == n * n - 1) {
    c.family = AlgebraFamily::SuN;
    return c;
  }
  if (c.dim > 0) c.form = invariant_form(result.basis.elements(), result.basis.tolerance());

  const std::size_t l = n / 2;
  const bool odd = n % 2 == 1;
  const FormSymmetry wanted = odd ? FormSymmetry::Symmetric : FormSymmetry::Antisymmetric;
  if (c.dim == l * (2 * l + 1) && c.form && c.form->kernel_dim == 1 && c.form->symmetry == wanted) {
    c.family = odd ? AlgebraFamily::SoOdd : AlgebraFamily::Sp;
    return c;
  }
  if (c.form && (c.form->kernel_dim > 1 || c.form->symmetry == FormSymmetry::Mixed)) {
    c.family = AlgebraFamily::Indeterminate;
    c.note = c.form->kernel_dim > 1 ? "invariant forms span more than one dimension; the action is reducible"
                                    : "invariant form is neither symmetric nor antisymmetric";
    return c;
  }
  c.family = AlgebraFamily::ProperSubalgebra;
  c.note = "proper subalgebra; no isomorphism type is asserted";
  return c;
}

}  // namespace dynlie
