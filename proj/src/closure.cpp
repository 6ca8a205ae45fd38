#include "dynlie/closure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "dynlie/error.hpp"

namespace dynlie {

namespace {

using Wide = long double;

// Interleaved (re, im) row-major storage in extended precision.
struct WideMatrix {
  std::size_t n = 0;
  std::vector<Wide> v;

  explicit WideMatrix(std::size_t dim) : n(dim), v(2 * dim * dim, 0.0L) {}
};

WideMatrix widen(const ComplexMatrix& m) {
  WideMatrix w(m.dim());
  const double* r = m.raw();
  for (std::size_t i = 0; i < w.v.size(); ++i) w.v[i] = r[i];
  return w;
}

ComplexMatrix narrow(const WideMatrix& w) {
  ComplexMatrix m(w.n);
  double* r = m.raw();
  for (std::size_t i = 0; i < w.v.size(); ++i) r[i] = static_cast<double>(w.v[i]);
  return m;
}

WideMatrix bracket(const WideMatrix& a, const WideMatrix& b) {
  const std::size_t n = a.n;
  WideMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Wide re = 0.0L;
      Wide im = 0.0L;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t ik = 2 * (i * n + k);
        const std::size_t kj = 2 * (k * n + j);
        re += a.v[ik] * b.v[kj] - a.v[ik + 1] * b.v[kj + 1];
        im += a.v[ik] * b.v[kj + 1] + a.v[ik + 1] * b.v[kj];
        re -= b.v[ik] * a.v[kj] - b.v[ik + 1] * a.v[kj + 1];
        im -= b.v[ik] * a.v[kj + 1] + b.v[ik + 1] * a.v[kj];
      }
      c.v[2 * (i * n + j)] = re;
      c.v[2 * (i * n + j) + 1] = im;
    }
  }
  return c;
}

Wide dot(const WideMatrix& a, const WideMatrix& b) {
  Wide s = 0.0L;
  for (std::size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * b.v[i];
  return s;
}

bool finite(const WideMatrix& m) {
  return std::all_of(m.v.begin(), m.v.end(), [](Wide x) { return std::isfinite(x); });
}

// Working basis for the closure loop; same acceptance rule as OrthoBasis.
class WideBasis {
 public:
  explicit WideBasis(double tolerance) : tolerance_(tolerance) {}

  std::size_t size() const { return elements_.size(); }
  const WideMatrix& operator[](std::size_t i) const { return elements_[i]; }

  bool offer(WideMatrix candidate) {
    const Wide original = std::sqrt(dot(candidate, candidate));
    if (original <= kAbsoluteFloor) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : elements_) {
        const Wide c = dot(e, candidate);
        for (std::size_t i = 0; i < candidate.v.size(); ++i) candidate.v[i] -= c * e.v[i];
      }
    }
    const Wide rnorm = std::sqrt(dot(candidate, candidate));
    if (rnorm <= std::max<Wide>(tolerance_ * original, kAbsoluteFloor)) return false;
    for (auto& x : candidate.v) x /= rnorm;
    elements_.push_back(std::move(candidate));
    return true;
  }

 private:
  Wide tolerance_;
  std::vector<WideMatrix> elements_;
};

void check_generators(std::span<const ComplexMatrix> generators, const ClosureOptions& options) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "lie_closure: no generators");
  const std::size_t n = generators.front().dim();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "lie_closure: empty generator");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& m = generators[g];
    const std::string which = "generator " + std::to_string(g + 1);
    if (m.dim() != n) throw Error(ErrorCode::DimensionMismatch, "lie_closure: " + which + " size");
    if (!m.all_finite()) throw Error(ErrorCode::NonFinite, "lie_closure: " + which + " non-finite");
    if (!is_skew_hermitian(m, options.tolerance)) {
      throw Error(ErrorCode::NotSkewHermitian, "lie_closure: " + which + " is not skew-Hermitian");
    }
    if (options.require_traceless &&
        std::abs(m.trace()) > options.tolerance * std::max(m.frobenius_norm(), 1.0)) {
      throw Error(ErrorCode::NotTraceless, "lie_closure: " + which + " has nonzero trace");
    }
  }
}

}  // namespace

// The loop runs in extended precision; the public basis is the rounded,
// re-orthonormalised copy.
ClosureResult lie_closure(std::span<const ComplexMatrix> generators, const ClosureOptions& options) {
  check_generators(generators, options);
  const std::size_t n = generators.front().dim();
  const std::size_t full = options.require_traceless ? n * n - 1 : n * n;
  const std::size_t bound = options.max_dim.value_or(full);

  ClosureResult result;
  result.basis = OrthoBasis(n, options.tolerance);
  result.generators.assign(generators.begin(), generators.end());
  WideBasis work(options.tolerance);

  auto finish = [&](bool hit_bound) {
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (!result.basis.offer(narrow(work[i])).accepted) {
        throw Error(ErrorCode::NotConverged, "lie_closure: rounded basis lost rank");
      }
    }
    result.dim = result.basis.size();
    // A bound below the full ambient dimension leaves the span unclosed.
    result.converged = !hit_bound || bound >= full;
    result.reached_max_dim = hit_bound;
    return result;
  };

  std::deque<std::size_t> queue;
  for (const auto& g : generators) {
    if (work.offer(widen(g))) {
      queue.push_back(work.size() - 1);
      if (work.size() >= bound) return finish(true);
    }
  }

  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    const std::size_t snapshot = work.size();
    for (std::size_t j = 0; j < snapshot; ++j) {
      if (j == k) continue;
      WideMatrix c = bracket(work[k], work[j]);
      ++result.brackets_evaluated;
      if (!finite(c)) throw Error(ErrorCode::NonFinite, "lie_closure: non-finite bracket");
      if (work.offer(std::move(c))) {
        queue.push_back(work.size() - 1);
        if (work.size() >= bound) return finish(true);
      }
    }
  }
  return finish(false);
}

Membership membership(const ComplexMatrix& element, const ClosureResult& result) {
  if (element.dim() != result.basis.matrix_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "membership: dimension mismatch");
  }
  const double norm = element.frobenius_norm();
  if (norm == 0.0) return {true, 0.0};
  const double residual = result.basis.project_out(element).frobenius_norm();
  return {residual <= std::max(result.basis.tolerance() * norm, kAbsoluteFloor), residual};
}

}  // namespace dynlie
