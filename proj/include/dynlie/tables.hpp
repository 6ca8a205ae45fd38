#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dynlie/matrix.hpp"

namespace dynlie {

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussianInt, GaussianInt) = default;
  bool is_zero() const noexcept { return re == 0 && im == 0; }
};

/// Square matrix over the Gaussian integers; exact arithmetic only.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  /// e_{row,col} with 1-based indices.
  static IntMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t dim() const noexcept { return dim_; }
  GaussianInt& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const GaussianInt& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  GaussianInt trace() const;
  std::size_t nonzero_count() const;
  bool is_skew_hermitian() const;
  bool is_zero() const;
  ComplexMatrix to_complex() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  IntMatrix& operator*=(std::int64_t s);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator-(IntMatrix a) { return a *= -1; }
  friend IntMatrix operator*(std::int64_t s, IntMatrix a) { return a *= s; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianInt> data_;
};

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);

enum class Family { SU, SoOdd, Sp, SoEven };

const char* to_string(Family f) noexcept;
/// Accepts "SU", "SO_ODD", "SP", "SO_EVEN" (case-insensitive).
Family parse_family(const std::string& name);

enum class Part { X, Y, H };

enum class RootKind {
  Cartan,  // h_m
  Single,  // e_m
  Double,  // 2 e_m
  Plus,    // e_m + e_n
  Minus,   // e_m - e_n
  SuPair,  // (m, n) of the su(N) table
};

/// Structured root label with 1-based indices; n is unused for Cartan,
/// Single and Double.
struct RootLabel {
  Part part = Part::H;
  RootKind kind = RootKind::Cartan;
  int m = 1;
  int n = 0;

  std::string str() const;
  friend bool operator==(const RootLabel&, const RootLabel&) = default;
};

struct TableElement {
  RootLabel label;
  IntMatrix matrix;
};

class GeneratorTable {
 public:
  GeneratorTable(Family family, int rank);

  Family family() const noexcept { return family_; }
  /// l for the orthogonal and symplectic families, N for SU.
  int rank() const noexcept { return rank_; }
  std::size_t matrix_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<TableElement>& elements() const noexcept { return elements_; }

  /// Table element with the given label; throws NotMember if absent.
  const IntMatrix& at(const RootLabel& label) const;
  /// Evaluates the defining formula for any label, including m > n forms
  /// of Plus/Minus roots that are not stored in the table.
  IntMatrix make(const RootLabel& label) const;

  const IntMatrix& h(int m) const;
  /// Designated ladder generators x_m, y_m (1-based).
  RootLabel ladder_label(Part part, int m) const;
  IntMatrix ladder_x(int m) const { return make(ladder_label(Part::X, m)); }
  IntMatrix ladder_y(int m) const { return make(ladder_label(Part::Y, m)); }
  /// Number of Cartan elements (and of ladder pairs).
  int cartan_count() const noexcept { return family_ == Family::SU ? rank_ - 1 : rank_; }

  std::vector<ComplexMatrix> complex_elements() const;

 private:
  Family family_;
  int rank_;
  std::size_t dim_;
  std::vector<TableElement> elements_;
};

GeneratorTable su_basis(int n);
GeneratorTable so_odd_basis(int l);
GeneratorTable sp_basis(int l);
GeneratorTable so_even_basis(int l);
GeneratorTable make_table(Family family, int rank);

struct RuleCheck {
  std::string identity;
  int m = 0;
  int n = 0;
  bool passed = false;
  /// The stored identity differs in sign from its commonly printed form.
  bool sign_corrected = false;
  bool as_printed_passed = false;
};

/// Evaluates every instance (all m != n, plus the diagonal rules) of the
/// commutation identities for SO_ODD or SP tables with exact arithmetic.
std::vector<RuleCheck> verify_commutation_rules(const GeneratorTable& table);

struct EntryObstruction {
  std::size_t required = 0;
  std::size_t available = 0;
  bool feasible = false;
};

/// Compares the nonzero entries needed by the so(2l) ladder y_m with the
/// 2(2l - 1) off-diagonal slots of a nearest-neighbour coupling.
EntryObstruction nn_entry_obstruction(int l);

}  // namespace dynlie
