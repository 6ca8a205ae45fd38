#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <utility>

#include "dynlie/closure.hpp"
#include "dynlie/error.hpp"
#include "dynlie/tables.hpp"

using namespace dynlie;

namespace {

std::size_t expected_size(Family f, int r) {
  const auto l = static_cast<std::size_t>(r);
  switch (f) {
    case Family::SU: return l * l - 1;
    case Family::SoOdd: return l * (2 * l + 1);
    case Family::Sp: return l * (2 * l + 1);
    case Family::SoEven: return l * (2 * l - 1);
  }
  return 0;
}

std::size_t closure_dim(const std::vector<ComplexMatrix>& g) { return lie_closure(g).dim; }

std::vector<ComplexMatrix> ladder(const GeneratorTable& t) {
  std::vector<ComplexMatrix> g;
  for (int m = 1; m <= t.cartan_count(); ++m) {
    g.push_back(t.ladder_x(m).to_complex());
    g.push_back(t.ladder_y(m).to_complex());
  }
  return g;
}

}  // namespace

TEST_CASE("table cardinalities") {
  CHECK(su_basis(2).size() == 3);
  CHECK(su_basis(4).size() == 15);
  CHECK(so_odd_basis(3).size() == 21);
  CHECK(so_odd_basis(1).size() == 3);
  CHECK(sp_basis(3).size() == 21);
  CHECK(sp_basis(1).size() == 3);
  CHECK(so_even_basis(3).size() == 15);
  CHECK(so_even_basis(2).size() == 6);
  for (int n = 2; n <= 10; ++n) CHECK(su_basis(n).size() == expected_size(Family::SU, n));
  for (int l = 1; l <= 5; ++l) {
    CHECK(so_odd_basis(l).size() == expected_size(Family::SoOdd, l));
    CHECK(sp_basis(l).size() == expected_size(Family::Sp, l));
    if (l >= 2) CHECK(so_even_basis(l).size() == expected_size(Family::SoEven, l));
  }
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(su_basis(1), Error);
  CHECK_THROWS_AS(so_odd_basis(0), Error);
  CHECK_THROWS_AS(sp_basis(0), Error);
  CHECK_THROWS_AS(so_even_basis(1), Error);
  CHECK_THROWS_AS(parse_family("so9"), Error);
  CHECK(parse_family("so_odd") == Family::SoOdd);
}

TEST_CASE("table elements are exactly traceless and skew-Hermitian") {
  for (Family f : {Family::SU, Family::SoOdd, Family::Sp, Family::SoEven}) {
    for (int r = 2; r <= 5; ++r) {
      const auto t = make_table(f, r);
      CHECK(t.matrix_dim() == (f == Family::SU ? static_cast<std::size_t>(r) : f == Family::SoOdd ? 2u * r + 1 : 2u * r));
      for (const auto& e : t.elements()) {
        CHECK(e.matrix.trace().is_zero());
        CHECK(e.matrix.is_skew_hermitian());
        CHECK_FALSE(e.matrix.is_zero());
      }
    }
  }
}

TEST_CASE("table elements are pairwise orthogonal under the trace form") {
  for (Family f : {Family::SoOdd, Family::Sp, Family::SoEven}) {
    const auto t = make_table(f, 3);
    const auto m = t.complex_elements();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        // Cartan elements of the su table overlap; the others do not.
        CHECK(hs_inner(m[i], m[j]) == 0.0);
      }
  }
}

TEST_CASE("su Cartan overlaps are tridiagonal") {
  const auto t = su_basis(5);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const double v = hs_inner(t.h(a).to_complex(), t.h(b).to_complex());
      const double want = a == b ? 2.0 : (std::abs(a - b) == 1 ? -1.0 : 0.0);
      CHECK(v == want);
    }
}

TEST_CASE("labels are unique and at() finds them") {
  for (Family f : {Family::SU, Family::SoOdd, Family::Sp, Family::SoEven}) {
    const auto t = make_table(f, 3);
    std::set<std::string> seen;
    for (const auto& e : t.elements()) {
      CHECK(seen.insert(e.label.str()).second);
      CHECK(t.at(e.label) == e.matrix);
    }
  }
  CHECK(so_odd_basis(2).elements().front().label.str() == "h_1");
  CHECK_THROWS_AS(so_odd_basis(2).at(RootLabel{Part::X, RootKind::Double, 1, 0}), Error);
}

TEST_CASE("tables are closed under the bracket") {
  for (Family f : {Family::SU, Family::SoOdd, Family::Sp, Family::SoEven}) {
    for (int r = 2; r <= 3; ++r) {
      const auto t = make_table(f, r);
      CHECK(closure_dim(t.complex_elements()) == t.size());
    }
  }
  CHECK(closure_dim(so_odd_basis(1).complex_elements()) == 3);
  CHECK(closure_dim(sp_basis(1).complex_elements()) == 3);
}

TEST_CASE("designated ladder generators generate the full table") {
  CHECK(closure_dim(ladder(so_odd_basis(2))) == 10);
  CHECK(closure_dim(ladder(sp_basis(2))) == 10);
  CHECK(closure_dim(ladder(so_even_basis(3))) == 15);
  for (int l = 1; l <= 4; ++l) {
    CHECK(closure_dim(ladder(so_odd_basis(l))) == so_odd_basis(l).size());
    CHECK(closure_dim(ladder(sp_basis(l))) == sp_basis(l).size());
  }
}

TEST_CASE("worked commutation identities") {
  const auto b = so_odd_basis(2);
  const IntMatrix x1 = b.make({Part::X, RootKind::Single, 1, 0});
  const IntMatrix y1 = b.make({Part::Y, RootKind::Single, 1, 0});
  CHECK(commutator(x1, y1) == -2 * b.h(1));
  const IntMatrix xm = b.make({Part::X, RootKind::Minus, 1, 2});
  const IntMatrix ym = b.make({Part::Y, RootKind::Minus, 1, 2});
  CHECK(commutator(b.h(1), xm) == -ym);

  const auto c = sp_basis(2);
  CHECK(commutator(c.make({Part::X, RootKind::Double, 2, 0}), c.make({Part::Y, RootKind::Double, 2, 0})) ==
        -2 * c.h(2));
}

TEST_CASE("every rule instance holds exactly for l <= 4") {
  for (int l = 1; l <= 4; ++l) {
    for (Family f : {Family::SoOdd, Family::Sp}) {
      const auto checks = verify_commutation_rules(make_table(f, l));
      CHECK_FALSE(checks.empty());
      for (const auto& c : checks) {
        INFO(to_string(f), " l=", l, " ", c.identity, " m=", c.m, " n=", c.n);
        CHECK(c.passed);
        if (!c.sign_corrected) CHECK(c.as_printed_passed);
        if (c.sign_corrected) CHECK_FALSE(c.as_printed_passed);
      }
    }
  }
  CHECK_THROWS_AS(verify_commutation_rules(su_basis(3)), Error);
}

TEST_CASE("nearest-neighbour entry obstruction") {
  auto r = nn_entry_obstruction(2);
  CHECK(r.required == 8);
  CHECK(r.available == 6);
  CHECK_FALSE(r.feasible);
  r = nn_entry_obstruction(3);
  CHECK(r.required == 12);
  CHECK(r.available == 10);
  for (int l = 2; l <= 6; ++l) {
    // Recount the support of the ladder y_m directly.
    const auto t = so_even_basis(l);
    std::set<std::pair<std::size_t, std::size_t>> support;
    for (int m = 1; m <= l; ++m) {
      const IntMatrix y = t.ladder_y(m);
      for (std::size_t i = 0; i < y.dim(); ++i)
        for (std::size_t j = 0; j < y.dim(); ++j)
          if (!y(i, j).is_zero()) support.insert({i, j});
    }
    const auto o = nn_entry_obstruction(l);
    CHECK(o.required == support.size());
    CHECK(o.required == 4u * l);
    CHECK(o.available == 4u * l - 2);
    CHECK_FALSE(o.feasible);
  }
  CHECK_THROWS_AS(nn_entry_obstruction(1), Error);
}
