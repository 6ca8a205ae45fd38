#pragma once
// Exact-arithmetic reference implementations used as test oracles.
// Everything here works over the Gaussian rationals Q[i] and shares no code
// with the floating-point library.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

struct GQ {
  Q re = 0;
  Q im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  friend GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GQ operator*(const GQ& a, const GQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GQ operator/(const GQ& a, const GQ& b) {
    const Q den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
};

struct QMat {
  std::size_t n = 0;
  std::vector<GQ> a;

  explicit QMat(std::size_t dim = 0) : n(dim), a(dim * dim) {}
  GQ& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const GQ& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline QMat mul(const QMat& x, const QMat& y) {
  QMat c(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.n; ++j) c(i, j) = c(i, j) + x(i, k) * y(k, j);
    }
  return c;
}

inline QMat bracket(const QMat& x, const QMat& y) {
  QMat p = mul(x, y);
  const QMat q = mul(y, x);
  for (std::size_t i = 0; i < p.a.size(); ++i) p.a[i] = p.a[i] - q.a[i];
  return p;
}

/// Row-echelon span over Q of real vectors; insert reports independence.
class RationalSpan {
 public:
  bool insert(std::vector<Q> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Q& f = v[pivots_[r]];
      if (f == 0) continue;
      const Q scale = f / rows_[r][pivots_[r]];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= scale * rows_[r][k];
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) {
        rows_.push_back(std::move(v));
        pivots_.push_back(k);
        return true;
      }
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::vector<Q>> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::vector<Q> realify(const QMat& m) {
  std::vector<Q> v;
  v.reserve(2 * m.a.size());
  for (const auto& z : m.a) {
    v.push_back(z.re);
    v.push_back(z.im);
  }
  return v;
}

/// Dimension of the real Lie algebra generated by the matrices, by
/// exhaustive bracketing with exact independence tests.
inline std::size_t closure_dim(const std::vector<QMat>& gens) {
  RationalSpan span;
  std::vector<QMat> basis;
  for (const auto& g : gens)
    if (span.insert(realify(g))) basis.push_back(g);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      QMat b = bracket(basis[k], basis[j]);
      if (span.insert(realify(b))) basis.push_back(std::move(b));
    }
  }
  return basis.size();
}

/// Nullity of a complex linear system given as rows over Q[i], by exact
/// Gaussian elimination.
inline std::size_t nullity(std::vector<std::vector<GQ>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const GQ f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return cols - rank;
}

/// Nullity of S -> X^T S + S X over the given matrices.
inline std::size_t invariant_form_nullity(const std::vector<QMat>& xs) {
  const std::size_t n = xs.front().n;
  std::vector<std::vector<GQ>> rows;
  for (const auto& x : xs) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        std::vector<GQ> r(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          r[k * n + q] = r[k * n + q] + x(k, p);
          r[p * n + k] = r[p * n + k] + x(k, q);
        }
        rows.push_back(std::move(r));
      }
  }
  return nullity(std::move(rows), n * n);
}

/// i * diag(E) with the mean removed, and i * tridiagonal(d).
inline QMat h0_prime(const std::vector<Q>& e) {
  const std::size_t n = e.size();
  Q mean = 0;
  for (const auto& x : e) mean += x;
  mean /= static_cast<long>(n);
  QMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GQ{0, e[i] - mean};
  return m;
}

inline QMat h1(const std::vector<Q>& d) {
  const std::size_t n = d.size() + 1;
  QMat m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = GQ{0, d[i]};
    m(i + 1, i) = GQ{0, d[i]};
  }
  return m;
}

}  // namespace oracle
