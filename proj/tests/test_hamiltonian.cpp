#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynlie/error.hpp"
#include "dynlie/hamiltonian.hpp"
#include "support.hpp"

using namespace dynlie;

namespace {

SystemSpec example_odd() {
  SystemSpec s;
  s.energies = {1, 2, 3, 4, 5, 6, 7};
  s.dipoles = {std::sqrt(3.0), std::sqrt(5.0), std::sqrt(6.0), std::sqrt(6.0), std::sqrt(5.0), std::sqrt(3.0)};
  return s;
}

SystemSpec example_even() {
  SystemSpec s;
  s.energies = {1, 2, 3, 4, 5, 6};
  s.dipoles = {std::sqrt(5.0), 2 * std::sqrt(2.0), 3.0, 2 * std::sqrt(2.0), std::sqrt(5.0)};
  return s;
}

ErrorCode code_of(const SystemSpec& s) {
  try {
    s.validate();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("validate accepted an invalid spec");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("build_h0 is i diag(E)") {
  for (const auto& s : {example_odd(), example_even()}) {
    const ComplexMatrix h0 = build_h0(s);
    for (std::size_t i = 0; i < s.levels(); ++i)
      for (std::size_t j = 0; j < s.levels(); ++j)
        CHECK(h0(i, j) == (i == j ? Complex{0.0, static_cast<double>(i + 1)} : Complex{}));
  }
}

TEST_CASE("build_h0_prime is traceless and differs from h0 by i c I") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_generic_spec(static_cast<std::size_t>(testing::uniform_int(2, 9)));
    const ComplexMatrix h0 = build_h0(s);
    const ComplexMatrix hp = build_h0_prime(s);
    CHECK(std::abs(hp.trace()) < 1e-12);
    const ComplexMatrix diff = hp - h0;
    const Complex c = diff(0, 0);
    CHECK(std::abs(c.real()) < 1e-12);
    CHECK(max_abs_diff(diff, c * ComplexMatrix::identity(s.levels())) < 1e-12);
  }
}

TEST_CASE("build_h1 for the odd example is tridiagonal with i d") {
  const auto s = example_odd();
  const ComplexMatrix h1 = build_h1(s);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      Complex want{};
      if (j == i + 1) want = {0.0, s.dipoles[i]};
      if (i == j + 1) want = {0.0, s.dipoles[j]};
      CHECK(h1(i, j) == want);
    }
}

TEST_CASE("builders produce skew-Hermitian matrices; h1 support is 2(N-1) entries") {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(2, 9));
    const auto s = testing::random_generic_spec(n);
    CHECK(is_skew_hermitian(build_h0(s), 0.0));
    CHECK(is_skew_hermitian(build_h0_prime(s), 1e-15));
    const ComplexMatrix h1 = build_h1(s);
    CHECK(is_skew_hermitian(h1, 0.0));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(h1(i, i) == Complex{});
      for (std::size_t j = 0; j < n; ++j) nonzero += h1(i, j) != Complex{} ? 1 : 0;
    }
    CHECK(nonzero <= 2 * (n - 1));
  }
}

TEST_CASE("transition gaps") {
  CHECK(transition_gaps(example_odd()).gaps == std::vector<double>(6, 1.0));
  SystemSpec s;
  s.energies = {0, 1, 1, 4};
  s.dipoles = {1, 1, 1};
  CHECK(transition_gaps(s).gaps == std::vector<double>{1, 0, 3});
}

TEST_CASE("symmetric coupling detection") {
  CHECK(detect_symmetric_coupling(example_odd()));
  CHECK(detect_symmetric_coupling(example_even()));
  SystemSpec s;
  s.energies = {1, 2, 4, 7};
  s.dipoles = {1, 1, 1};
  CHECK_FALSE(detect_symmetric_coupling(s));
  s.energies = {1, 2, 3, 4};
  s.dipoles = {1, 2, 1.5};
  CHECK_FALSE(detect_symmetric_coupling(s));
}

TEST_CASE("symmetric coupling is invariant under an energy shift") {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(2, 9));
    auto s = trial % 2 ? testing::random_symmetric_spec(n) : testing::random_generic_spec(n);
    const bool before = detect_symmetric_coupling(s);
    const double c = testing::uniform(-50, 50);
    for (auto& e : s.energies) e += c;
    CHECK(detect_symmetric_coupling(s) == before);
    if (trial % 2) CHECK(before);
  }
}

TEST_CASE("decomposability flags") {
  CHECK(decomposability_flags(example_odd()).empty());
  SystemSpec s;
  s.energies = {1, 2, 3, 4};
  s.dipoles = {1, 0, 1};
  CHECK(decomposability_flags(s) == std::vector<std::size_t>{2});
}

TEST_CASE("spec validation error codes") {
  SystemSpec s;
  s.energies = {1};
  s.dipoles = {};
  CHECK(code_of(s) == ErrorCode::InvalidArgument);
  s.energies = {1, 2, 3};
  s.dipoles = {1};
  CHECK(code_of(s) == ErrorCode::LengthMismatch);
  s.energies = {2, 1};
  s.dipoles = {1};
  CHECK(code_of(s) == ErrorCode::EnergiesDecreasing);
  s.energies = {1, std::nan("")};
  CHECK(code_of(s) == ErrorCode::NonFinite);
  s.energies = {1, 2};
  s.tolerance = 0.0;
  CHECK(code_of(s) == ErrorCode::InvalidArgument);
}

TEST_CASE("dipole tokens") {
  CHECK(parse_dipole_token("2.5") == 2.5);
  CHECK(parse_dipole_token("sqrt(3)") == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(parse_dipole_token("-sqrt(2)") == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  CHECK(parse_dipole_token("2*sqrt(2)") == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(parse_dipole_token(" 3 ") == 3.0);
  for (const char* bad : {"", "sqrt(-1)", "sqrt(3", "abc", "2*", "1e400"}) {
    CHECK_THROWS_AS(parse_dipole_token(bad), Error);
  }
}
