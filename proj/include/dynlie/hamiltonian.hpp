#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dynlie/linalg.hpp"
#include "dynlie/matrix.hpp"

namespace dynlie {

/// Level energies E_1..E_N and nearest-neighbour couplings d_1..d_{N-1}.
struct SystemSpec {
  std::vector<double> energies;
  std::vector<double> dipoles;
  double tolerance = kDefaultTolerance;

  std::size_t levels() const noexcept { return energies.size(); }

  /// Throws on N < 2, length mismatch, decreasing energies, non-finite
  /// values or a non-positive tolerance.
  void validate() const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// mu_n = E_{n+1} - E_n.
struct GapSequence {
  std::vector<double> gaps;
};

/// iH0 = sum_n E_n i e_nn.
ComplexMatrix build_h0(const SystemSpec& spec);
/// iH0 with the trace removed.
ComplexMatrix build_h0_prime(const SystemSpec& spec);
/// iH1 = sum_n d_n i (e_{n,n+1} + e_{n+1,n}).
ComplexMatrix build_h1(const SystemSpec& spec);

GapSequence transition_gaps(const SystemSpec& spec);

/// Palindromic gaps and dipoles: mu_n = mu_{N-n} and d_n = d_{N-n}. Each
/// comparison uses spec.tolerance scaled by the largest gap (resp. dipole)
/// magnitude.
bool detect_symmetric_coupling(const SystemSpec& spec);

/// 1-based indices n with |d_n| <= spec.tolerance.
std::vector<std::size_t> decomposability_flags(const SystemSpec& spec);

/// Parses "2.5", "sqrt(3)", "2*sqrt(2)" style coupling tokens.
double parse_dipole_token(std::string_view token);

}  // namespace dynlie
