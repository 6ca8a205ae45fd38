#pragma once

#include <optional>
#include <span>
#include <string>

#include "dynlie/closure.hpp"
#include "dynlie/matrix.hpp"

namespace dynlie {

enum class AlgebraFamily { SuN, SoOdd, Sp, ProperSubalgebra, Decomposable, Indeterminate };

const char* to_string(AlgebraFamily f) noexcept;

enum class FormSymmetry { Symmetric, Antisymmetric, Mixed };

const char* to_string(FormSymmetry s) noexcept;

struct FormEvidence {
  /// First kernel element, scaled so its largest-magnitude entry is 1.
  ComplexMatrix form;
  FormSymmetry symmetry = FormSymmetry::Mixed;
  std::size_t kernel_dim = 0;
  /// Share of the squared Frobenius norm carried by the symmetric part.
  double symmetric_fraction = 0.0;
};

/// Common kernel of S -> X^T S + S X over the basis; empty when only S = 0
/// solves it.
std::optional<FormEvidence> invariant_form(std::span<const ComplexMatrix> basis,
                                           double tolerance = kDefaultTolerance);

struct ClassifyContext {
  bool zero_dipoles = false;
};

struct Classification {
  AlgebraFamily family = AlgebraFamily::Indeterminate;
  std::size_t dim = 0;
  std::size_t ambient = 0;
  std::optional<FormEvidence> form;
  std::string note;
};

Classification classify(const ClosureResult& result, const ClassifyContext& context = {});

}  // namespace dynlie
