#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dynlie/closure.hpp"
#include "dynlie/error.hpp"
#include "dynlie/hamiltonian.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dynlie;

namespace {

const Complex I{0.0, 1.0};

std::vector<ComplexMatrix> generators(const SystemSpec& s) { return {build_h0_prime(s), build_h1(s)}; }

SystemSpec example_odd() {
  SystemSpec s;
  s.energies = {1, 2, 3, 4, 5, 6, 7};
  s.dipoles = {std::sqrt(3.0), std::sqrt(5.0), std::sqrt(6.0), std::sqrt(6.0), std::sqrt(5.0), std::sqrt(3.0)};
  return s;
}

}  // namespace

TEST_CASE("two-level closure matches the exact oracle") {
  const std::vector<ComplexMatrix> g{I * (ComplexMatrix::unit(2, 0, 0) - ComplexMatrix::unit(2, 1, 1)),
                                     I * (ComplexMatrix::unit(2, 0, 1) + ComplexMatrix::unit(2, 1, 0))};
  oracle::QMat a(2);
  a(0, 0) = {0, 1};
  a(1, 1) = {0, -1};
  oracle::QMat b(2);
  b(0, 1) = {0, 1};
  b(1, 0) = {0, 1};
  const auto exact = oracle::closure_dim({a, b});
  CHECK(exact == 3);
  CHECK(lie_closure(g).dim == exact);
}

TEST_CASE("odd example closes in three dimensions spanned by the generators and their bracket") {
  const auto g = generators(example_odd());
  const auto r = lie_closure(g);
  CHECK(r.converged);
  REQUIRE(r.dim == 3);
  CHECK(membership(commutator(g[0], g[1]), r).member);
  OrthoBasis span(7);
  span.offer(g[0]);
  span.offer(g[1]);
  span.offer(commutator(g[0], g[1]));
  CHECK(span.size() == 3);
  for (const auto& b : r.basis.elements()) CHECK(span.project_out(b).frobenius_norm() < 1e-9);

  ComplexMatrix probe(7);
  probe(0, 0) = I;
  probe(6, 6) = -I;
  const auto m = membership(probe, r);
  CHECK_FALSE(m.member);
  CHECK(m.residual > 0.1);
}

TEST_CASE("uniform seven-level system closes to dimension 21") {
  CHECK(lie_closure(generators(testing::uniform_spec(7))).dim == 21);
}

TEST_CASE("closure input validation") {
  CHECK_THROWS_AS(lie_closure(std::vector<ComplexMatrix>{}), Error);
  const std::vector<ComplexMatrix> mixed{ComplexMatrix(2), ComplexMatrix(3)};
  CHECK_THROWS_AS(lie_closure(mixed), Error);
  const std::vector<ComplexMatrix> hermitian{ComplexMatrix::unit(2, 0, 1) + ComplexMatrix::unit(2, 1, 0)};
  try {
    lie_closure(hermitian);
    FAIL("accepted a Hermitian generator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSkewHermitian);
  }
  const std::vector<ComplexMatrix> traced{I * ComplexMatrix::unit(2, 0, 0)};
  try {
    lie_closure(traced);
    FAIL("accepted a generator with trace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTraceless);
  }
  ClosureOptions loose;
  loose.require_traceless = false;
  CHECK(lie_closure(traced, loose).dim == 1);
}

TEST_CASE("early exit at the full dimension still counts as converged") {
  SystemSpec s;
  s.energies = {1, 2, 4, 7};
  s.dipoles = {1, 1, 1};
  const auto r = lie_closure(generators(s));
  CHECK(r.dim == 15);
  CHECK(r.converged);
  CHECK(r.reached_max_dim);
}

TEST_CASE("a lowered bound that is hit leaves the result unconverged") {
  ClosureOptions opts;
  opts.max_dim = 5;
  const auto r = lie_closure(generators(testing::uniform_spec(5)), opts);
  CHECK(r.dim == 5);
  CHECK(r.reached_max_dim);
  CHECK_FALSE(r.converged);
  opts.max_dim = 50;
  CHECK(lie_closure(generators(example_odd()), opts).converged);
}

TEST_CASE("closure is idempotent") {
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(2, 6));
    const auto s = trial % 2 ? testing::random_symmetric_spec(n) : testing::random_generic_spec(n);
    const auto r = lie_closure(generators(s));
    const std::vector<ComplexMatrix> basis(r.basis.elements().begin(), r.basis.elements().end());
    CHECK(lie_closure(basis).dim == r.dim);
  }
}

TEST_CASE("dimension is invariant under scaling and permutation of generators") {
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(3, 7));
    const auto s = trial % 2 ? testing::random_symmetric_spec(n) : testing::random_generic_spec(n);
    auto g = generators(s);
    const std::size_t dim = lie_closure(g).dim;
    g[0] *= testing::uniform(0.2, 5.0);
    g[1] *= -testing::uniform(0.2, 5.0);
    CHECK(lie_closure(g).dim == dim);
    std::swap(g[0], g[1]);
    CHECK(lie_closure(g).dim == dim);
  }
}

TEST_CASE("dimension is invariant under unitary conjugation") {
  ClosureOptions opts;
  opts.tolerance = 1e-7;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(3, 6));
    const auto s = trial % 2 ? testing::random_symmetric_spec(n) : testing::random_generic_spec(n);
    const auto g = generators(s);
    const ComplexMatrix u = testing::random_unitary(n);
    const std::vector<ComplexMatrix> gu{testing::conjugate(u, g[0]), testing::conjugate(u, g[1])};
    CHECK(lie_closure(gu, opts).dim == lie_closure(g, opts).dim);
  }
}

TEST_CASE("brackets of basis elements stay in the span") {
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(3, 7));
    const auto s = trial % 2 ? testing::random_symmetric_spec(n) : testing::random_generic_spec(n);
    const auto r = lie_closure(generators(s));
    REQUIRE(r.converged);
    for (int pair = 0; pair < 50; ++pair) {
      const auto i = static_cast<std::size_t>(testing::uniform_int(0, static_cast<int>(r.dim) - 1));
      const auto j = static_cast<std::size_t>(testing::uniform_int(0, static_cast<int>(r.dim) - 1));
      CHECK(membership(commutator(r.basis[i], r.basis[j]), r).member);
    }
  }
}

TEST_CASE("closure with iH0 adds exactly the u(1) direction") {
  ClosureOptions opts;
  opts.require_traceless = false;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(2, 6));
    auto s = trial % 2 ? testing::random_symmetric_spec(n) : testing::random_generic_spec(n);
    if (trial == 0) {
      // Shift so that Tr H0 = 0 and iH0 = iH0'.
      double mean = 0;
      for (double e : s.energies) mean += e;
      mean /= static_cast<double>(n);
      for (auto& e : s.energies) e -= mean;
    }
    const std::vector<ComplexMatrix> full{build_h0(s), build_h1(s)};
    double trace = 0;
    for (double e : s.energies) trace += e;
    const std::size_t extra = std::abs(trace) > 1e-9 ? 1 : 0;
    CHECK(lie_closure(full, opts).dim == lie_closure(generators(s)).dim + extra);
  }
}

TEST_CASE("membership of zero and of a mismatched element") {
  const auto r = lie_closure(generators(example_odd()));
  const auto z = membership(ComplexMatrix(7), r);
  CHECK(z.member);
  CHECK(z.residual == 0.0);
  CHECK_THROWS_AS(membership(ComplexMatrix(3), r), Error);
}
