#include "dynlie/tables.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <utility>

#include "dynlie/error.hpp"

namespace dynlie {

IntMatrix IntMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  IntMatrix m(dim);
  m(row - 1, col - 1) = {1, 0};
  return m;
}

GaussianInt IntMatrix::trace() const {
  GaussianInt t;
  for (std::size_t i = 0; i < dim_; ++i) t = t + (*this)(i, i);
  return t;
}

std::size_t IntMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](GaussianInt z) { return !z.is_zero(); }));
}

bool IntMatrix::is_skew_hermitian() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto a = (*this)(i, j);
      const auto b = (*this)(j, i);
      if (a.re != -b.re || a.im != b.im) return false;
    }
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](GaussianInt z) { return z.is_zero(); });
}

ComplexMatrix IntMatrix::to_complex() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.entries()[i] = Complex(static_cast<double>(data_[i].re), static_cast<double>(data_[i].im));
  return out;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "IntMatrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] + o.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "IntMatrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] - o.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator*=(std::int64_t s) {
  for (auto& z : data_) z = {z.re * s, z.im * s};
  return *this;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "IntMatrix: dimension mismatch");
  const std::size_t n = a.dim_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const GaussianInt aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) = c(i, j) + aik * b(k, j);
    }
  return c;
}

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) {
  return multiply(a, b) - multiply(b, a);
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::SU: return "SU";
    case Family::SoOdd: return "SO_ODD";
    case Family::Sp: return "SP";
    case Family::SoEven: return "SO_EVEN";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "SU") return Family::SU;
  if (up == "SO_ODD") return Family::SoOdd;
  if (up == "SP") return Family::Sp;
  if (up == "SO_EVEN") return Family::SoEven;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "'");
}

std::string RootLabel::str() const {
  const std::string ms = std::to_string(m);
  const std::string ns = std::to_string(n);
  if (kind == RootKind::Cartan) return "h_" + ms;
  std::string s = part == Part::X ? "x_" : "y_";
  switch (kind) {
    case RootKind::Single: return s + "{e" + ms + "}";
    case RootKind::Double: return s + "{2e" + ms + "}";
    case RootKind::Plus: return s + "{e" + ms + "+e" + ns + "}";
    case RootKind::Minus: return s + "{e" + ms + "-e" + ns + "}";
    case RootKind::SuPair: return s + "{" + ms + "," + ns + "}";
    case RootKind::Cartan: break;
  }
  return s;
}

namespace {

// x_{m,n} = e_mn - e_nm, y_{m,n} = i (e_mn + e_nm); 1-based.
IntMatrix xmn(std::size_t dim, int m, int n) {
  return IntMatrix::unit(dim, m, n) - IntMatrix::unit(dim, n, m);
}

IntMatrix ymn(std::size_t dim, int m, int n) {
  IntMatrix out = IntMatrix::unit(dim, m, n) + IntMatrix::unit(dim, n, m);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = out(r, c) * GaussianInt{0, 1};
  return out;
}

IntMatrix pick(Part p, std::size_t dim, int m, int n) {
  return p == Part::X ? xmn(dim, m, n) : ymn(dim, m, n);
}

IntMatrix ih(std::size_t dim, int a, int b) {
  IntMatrix out(dim);
  out(a - 1, a - 1) = {0, 1};
  out(b - 1, b - 1) = {0, -1};
  return out;
}

std::size_t matrix_size(Family f, int rank) {
  switch (f) {
    case Family::SU: return static_cast<std::size_t>(rank);
    case Family::SoOdd: return static_cast<std::size_t>(2 * rank + 1);
    case Family::Sp:
    case Family::SoEven: return static_cast<std::size_t>(2 * rank);
  }
  return 0;
}

void check_rank(Family f, int rank) {
  const int minimum = f == Family::SU ? 2 : (f == Family::SoEven ? 2 : 1);
  if (rank < minimum) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(f)) + " table needs rank >= " +
                                                std::to_string(minimum) + ", got " +
                                                std::to_string(rank));
  }
}

}  // namespace

GeneratorTable::GeneratorTable(Family family, int rank)
    : family_(family), rank_(rank), dim_(0) {
  check_rank(family, rank);
  dim_ = matrix_size(family, rank);

  auto add = [this](RootLabel label) { elements_.push_back({label, make(label)}); };
  const int l = rank;
  if (family == Family::SU) {
    for (int m = 1; m < l; ++m) add({Part::H, RootKind::Cartan, m, 0});
    for (int m = 1; m <= l; ++m)
      for (int n = m + 1; n <= l; ++n) {
        add({Part::X, RootKind::SuPair, m, n});
        add({Part::Y, RootKind::SuPair, m, n});
      }
    return;
  }
  for (int m = 1; m <= l; ++m) add({Part::H, RootKind::Cartan, m, 0});
  if (family == Family::SoOdd || family == Family::Sp) {
    const RootKind k = family == Family::SoOdd ? RootKind::Single : RootKind::Double;
    for (int m = 1; m <= l; ++m) {
      add({Part::X, k, m, 0});
      add({Part::Y, k, m, 0});
    }
  }
  for (int m = 1; m <= l; ++m)
    for (int n = m + 1; n <= l; ++n)
      for (RootKind k : {RootKind::Plus, RootKind::Minus}) {
        add({Part::X, k, m, n});
        add({Part::Y, k, m, n});
      }
}

IntMatrix GeneratorTable::make(const RootLabel& label) const {
  const std::size_t d = dim_;
  const int l = rank_;
  const int m = label.m;
  const int n = label.n;
  const auto bad = [&]() {
    return Error(ErrorCode::InvalidArgument,
                 "label " + label.str() + " is not defined for " + to_string(family_));
  };
  const int cartan_max = cartan_count();
  if (m < 1 || m > l) throw bad();
  const bool two_index = label.kind == RootKind::Plus || label.kind == RootKind::Minus ||
                         label.kind == RootKind::SuPair;
  if (two_index && (n < 1 || n > l || n == m)) throw bad();
  if (label.kind == RootKind::Cartan && m > cartan_max) throw bad();
  if (label.kind != RootKind::Cartan && label.part == Part::H) throw bad();

  const Part p = label.part;
  switch (family_) {
    case Family::SU:
      if (label.kind == RootKind::Cartan) return ih(d, m, m + 1);
      if (label.kind == RootKind::SuPair && m < n) return pick(p, d, m, n);
      throw bad();
    case Family::SoOdd:
      switch (label.kind) {
        case RootKind::Cartan: return ih(d, m + 1, m + l + 1);
        case RootKind::Single: return pick(p, d, 1, m + 1) - pick(p, d, m + l + 1, 1);
        case RootKind::Plus: return pick(p, d, m + l + 1, n + 1) - pick(p, d, n + l + 1, m + 1);
        case RootKind::Minus: return pick(p, d, n + 1, m + 1) - pick(p, d, m + l + 1, n + l + 1);
        default: throw bad();
      }
    case Family::Sp:
      switch (label.kind) {
        case RootKind::Cartan: return ih(d, m, m + l);
        case RootKind::Double: return pick(p, d, m + l, m);
        case RootKind::Plus: return pick(p, d, m + l, n) + pick(p, d, n + l, m);
        case RootKind::Minus: return pick(p, d, n, m) - pick(p, d, m + l, n + l);
        default: throw bad();
      }
    case Family::SoEven:
      switch (label.kind) {
        case RootKind::Cartan: return ih(d, m, m + l);
        case RootKind::Plus: return pick(p, d, m + l, n) - pick(p, d, n + l, m);
        case RootKind::Minus: return pick(p, d, n, m) - pick(p, d, m + l, n + l);
        default: throw bad();
      }
  }
  throw bad();
}

const IntMatrix& GeneratorTable::at(const RootLabel& label) const {
  for (const auto& e : elements_)
    if (e.label == label) return e.matrix;
  throw Error(ErrorCode::NotMember, "label " + label.str() + " is not stored in the table");
}

const IntMatrix& GeneratorTable::h(int m) const { return at({Part::H, RootKind::Cartan, m, 0}); }

RootLabel GeneratorTable::ladder_label(Part part, int m) const {
  const int count = cartan_count();
  if (part == Part::H || m < 1 || m > count) {
    throw Error(ErrorCode::InvalidArgument, "ladder index out of range");
  }
  const int l = rank_;
  switch (family_) {
    case Family::SU: return {part, RootKind::SuPair, m, m + 1};
    case Family::SoOdd:
      if (m == 1) return {part, RootKind::Single, 1, 0};
      return {part, RootKind::Minus, m - 1, m};
    case Family::Sp:
      if (m == l) return {part, RootKind::Double, l, 0};
      return {part, RootKind::Minus, m, m + 1};
    case Family::SoEven:
      if (m == l) return {part, RootKind::Plus, l - 1, l};
      return {part, RootKind::Minus, m, m + 1};
  }
  return {};
}

std::vector<ComplexMatrix> GeneratorTable::complex_elements() const {
  std::vector<ComplexMatrix> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.matrix.to_complex());
  return out;
}

GeneratorTable su_basis(int n) { return GeneratorTable(Family::SU, n); }
GeneratorTable so_odd_basis(int l) { return GeneratorTable(Family::SoOdd, l); }
GeneratorTable sp_basis(int l) { return GeneratorTable(Family::Sp, l); }
GeneratorTable so_even_basis(int l) { return GeneratorTable(Family::SoEven, l); }
GeneratorTable make_table(Family family, int rank) { return GeneratorTable(family, rank); }

namespace {

struct Rule {
  std::string identity;
  bool diagonal;  // instance runs over m only
  bool sign_corrected;
  // lhs, rhs as stored (corrected); the printed rhs is -rhs when corrected.
  std::function<std::pair<IntMatrix, IntMatrix>(const GeneratorTable&, int, int)> eval;
};

RootLabel lab(Part p, RootKind k, int m, int n = 0) { return {p, k, m, n}; }

std::vector<Rule> rules_for(Family f) {
  using P = Part;
  using K = RootKind;
  std::vector<Rule> rules;
  auto pm_rules = [&rules](const char* sign, K k, int s) {
    const std::string sg = sign;
    rules.push_back({"[x_{em" + sg + "en}, y_{em" + sg + "en}] = -2(h_m " + sg + " h_n)", false,
                     false, [k, s](const GeneratorTable& t, int m, int n) {
                       IntMatrix rhs = t.h(m);
                       if (s > 0) rhs += t.h(n); else rhs -= t.h(n);
                       return std::pair{commutator(t.make(lab(P::X, k, m, n)),
                                                   t.make(lab(P::Y, k, m, n))),
                                        -2 * rhs};
                     }});
    rules.push_back({"[h_m, x_{em" + sg + "en}] = -y_{em" + sg + "en}", false, false,
                     [k](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.h(m), t.make(lab(P::X, k, m, n))),
                                        -t.make(lab(P::Y, k, m, n))};
                     }});
    rules.push_back({"[h_m, y_{em" + sg + "en}] = x_{em" + sg + "en}", false, false,
                     [k](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.h(m), t.make(lab(P::Y, k, m, n))),
                                        t.make(lab(P::X, k, m, n))};
                     }});
  };

  if (f == Family::SoOdd) {
    rules.push_back({"[x_{em}, x_{em-en}] = -x_{en}", false, true,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Single, m)),
                                                   t.make(lab(P::X, K::Minus, m, n))),
                                        -t.make(lab(P::X, K::Single, n))};
                     }});
    rules.push_back({"[x_{em}, y_{em-en}] = y_{en}", false, false,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Single, m)),
                                                   t.make(lab(P::Y, K::Minus, m, n))),
                                        t.make(lab(P::Y, K::Single, n))};
                     }});
    rules.push_back({"[x_{em}, x_{en}] = x_{em-en} - x_{em+en}", false, false,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Single, m)),
                                                   t.make(lab(P::X, K::Single, n))),
                                        t.make(lab(P::X, K::Minus, m, n)) -
                                            t.make(lab(P::X, K::Plus, m, n))};
                     }});
    rules.push_back({"[x_{em}, y_{en}] = -(y_{em-en} + y_{em+en})", false, true,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Single, m)),
                                                   t.make(lab(P::Y, K::Single, n))),
                                        -(t.make(lab(P::Y, K::Minus, m, n)) +
                                          t.make(lab(P::Y, K::Plus, m, n)))};
                     }});
    rules.push_back({"[x_{em}, y_{em}] = -2h_m", true, false,
                     [](const GeneratorTable& t, int m, int) {
                       return std::pair{commutator(t.make(lab(P::X, K::Single, m)),
                                                   t.make(lab(P::Y, K::Single, m))),
                                        -2 * t.h(m)};
                     }});
  } else if (f == Family::Sp) {
    rules.push_back({"[x_{2en}, x_{em-en}] = x_{em+en}", false, false,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Double, n)),
                                                   t.make(lab(P::X, K::Minus, m, n))),
                                        t.make(lab(P::X, K::Plus, m, n))};
                     }});
    rules.push_back({"[x_{2en}, y_{em-en}] = y_{em+en}", false, false,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Double, n)),
                                                   t.make(lab(P::Y, K::Minus, m, n))),
                                        t.make(lab(P::Y, K::Plus, m, n))};
                     }});
    rules.push_back({"[x_{em+en}, x_{em-en}] = 2(x_{2em} - x_{2en})", false, false,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Plus, m, n)),
                                                   t.make(lab(P::X, K::Minus, m, n))),
                                        2 * (t.make(lab(P::X, K::Double, m)) -
                                             t.make(lab(P::X, K::Double, n)))};
                     }});
    rules.push_back({"[x_{em+en}, y_{em-en}] = 2(y_{2em} + y_{2en})", false, false,
                     [](const GeneratorTable& t, int m, int n) {
                       return std::pair{commutator(t.make(lab(P::X, K::Plus, m, n)),
                                                   t.make(lab(P::Y, K::Minus, m, n))),
                                        2 * (t.make(lab(P::Y, K::Double, m)) +
                                             t.make(lab(P::Y, K::Double, n)))};
                     }});
    rules.push_back({"[x_{2em}, y_{2em}] = -2h_m", true, false,
                     [](const GeneratorTable& t, int m, int) {
                       return std::pair{commutator(t.make(lab(P::X, K::Double, m)),
                                                   t.make(lab(P::Y, K::Double, m))),
                                        -2 * t.h(m)};
                     }});
  } else {
    throw Error(ErrorCode::InvalidArgument,
                std::string("no commutation rule list for family ") + to_string(f));
  }
  pm_rules("+", K::Plus, +1);
  pm_rules("-", K::Minus, -1);
  return rules;
}

}  // namespace

std::vector<RuleCheck> verify_commutation_rules(const GeneratorTable& table) {
  const auto rules = rules_for(table.family());
  const int l = table.rank();
  std::vector<RuleCheck> out;
  for (const auto& rule : rules) {
    for (int m = 1; m <= l; ++m) {
      for (int n = 1; n <= l; ++n) {
        if (rule.diagonal ? n != 1 : n == m) continue;
        const int nn = rule.diagonal ? m : n;
        const auto [lhs, rhs] = rule.eval(table, m, nn);
        RuleCheck c;
        c.identity = rule.identity;
        c.m = m;
        c.n = nn;
        c.passed = lhs == rhs;
        c.sign_corrected = rule.sign_corrected;
        c.as_printed_passed = rule.sign_corrected ? lhs == -rhs : c.passed;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

EntryObstruction nn_entry_obstruction(int l) {
  if (l < 2) throw Error(ErrorCode::InvalidArgument, "obstruction count needs l >= 2");
  const auto table = so_even_basis(l);
  std::set<std::pair<std::size_t, std::size_t>> positions;
  for (int m = 1; m <= l; ++m) {
    const IntMatrix y = table.ladder_y(m);
    for (std::size_t r = 0; r < y.dim(); ++r)
      for (std::size_t c = 0; c < y.dim(); ++c)
        if (!y(r, c).is_zero()) positions.insert({r, c});
  }
  EntryObstruction o;
  o.required = positions.size();
  o.available = 2 * (2 * static_cast<std::size_t>(l) - 1);
  o.feasible = o.required <= o.available;
  return o;
}

}  // namespace dynlie
