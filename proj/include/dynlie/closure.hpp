#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dynlie/linalg.hpp"

namespace dynlie {

struct ClosureOptions {
  double tolerance = kDefaultTolerance;
  /// Early-exit bound; defaults to N^2 - 1 (N^2 when traces are allowed).
  std::optional<std::size_t> max_dim;
  /// Reject generators with nonzero trace. Turning this off lets the engine
  /// close sets that include a u(1) part such as iH0 itself.
  bool require_traceless = true;
};

struct ClosureResult {
  OrthoBasis basis;
  std::size_t dim = 0;
  bool converged = false;
  /// The bound was hit before the queue drained.
  bool reached_max_dim = false;
  std::size_t brackets_evaluated = 0;
  std::vector<ComplexMatrix> generators;
};

/// Real Lie algebra generated by the given skew-Hermitian matrices.
ClosureResult lie_closure(std::span<const ComplexMatrix> generators,
                          const ClosureOptions& options = {});

struct Membership {
  bool member = false;
  double residual = 0.0;
};

/// Projects the element onto the span of the closure basis. A zero element
/// is reported as a member with residual 0.
Membership membership(const ComplexMatrix& element, const ClosureResult& result);

}  // namespace dynlie
