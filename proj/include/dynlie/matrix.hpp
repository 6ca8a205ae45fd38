#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dynlie {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The storage is a contiguous
/// array of std::complex<double>, which the kernels view as interleaved
/// (re, im) doubles.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);
  /// Matrix unit e_{row,col} (0-based indices).
  static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  /// Interleaved (re, im) view of length 2 * dim * dim.
  double* raw() noexcept { return reinterpret_cast<double*>(data_.data()); }
  const double* raw() const noexcept { return reinterpret_cast<const double*>(data_.data()); }
  std::size_t raw_size() const noexcept { return 2 * data_.size(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;
  bool is_zero() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);
  ComplexMatrix& operator*=(double scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator/(ComplexMatrix a, double s) { return a *= (1.0 / s); }

  /// Exact entrywise equality.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Matrix product a * b.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||A + A^dagger||_F <= tol * max(||A||_F, 1).
bool is_skew_hermitian(const ComplexMatrix& a, double tol);

}  // namespace dynlie
