#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dynlie/closure.hpp"
#include "dynlie/hamiltonian.hpp"
#include "dynlie/matrix.hpp"
#include "dynlie/tables.hpp"

namespace dynlie {

/// iH0' = sum eps_m h_m and iH1 = sum delta_m y_m over the so(2l+1)
/// (family SoOdd) or sp(l) (family Sp) table.
struct GenericCartanSystem {
  Family family = Family::SoOdd;
  int rank = 1;
  std::vector<double> eps;
  std::vector<double> delta;

  /// Checks family, rank and lengths; zero entries are allowed here and
  /// reported by the individual checks.
  void validate() const;
  GeneratorTable table() const;
  ComplexMatrix h0() const;
  ComplexMatrix h1() const;
};

/// Complex copies of a table's Cartan and designated ladder elements,
/// 0-based (h[m-1] is h_m).
struct LadderSet {
  std::vector<ComplexMatrix> h;
  std::vector<ComplexMatrix> x;
  std::vector<ComplexMatrix> y;
};

LadderSet ladder_set(const GeneratorTable& table);

enum class Direction { Odd, Even };

const char* to_string(Direction d) noexcept;

/// Signed permutation carrying a symmetric physical system onto the
/// Cartan/ladder form.
struct BasisMap {
  ComplexMatrix unitary;
  Direction direction = Direction::Odd;
  std::vector<double> tilde_e;
  std::vector<double> tilde_d;
  /// ||U iH0' U^T - sum tilde_e h||_F and the iH1 analogue.
  double h0_residual = 0.0;
  double h1_residual = 0.0;

  GenericCartanSystem system() const;
};

BasisMap sigma_transform(const SystemSpec& spec);

/// omega[k] holds omega_{k + omega_first_index}: omega_0..omega_{l-1} for
/// SoOdd, omega_1..omega_l for Sp. set_m is 1-based and ascending.
struct OmegaV {
  std::vector<double> omega;
  int omega_first_index = 0;
  std::vector<int> set_m;
  std::vector<double> delta_tilde;
  std::vector<double> v;
  /// Every m in M carries the same-sign coincidence the dipole ladder needs.
  bool sign_condition = false;
  /// eps lies in the sign-definite monotone regime.
  bool monotone = false;
};

OmegaV omega_v_sequences(const GenericCartanSystem& g);

enum class Conclusion { SuN, SoOdd, Sp, Inconclusive };

const char* to_string(Conclusion c) noexcept;

struct DescentStep {
  std::string label;
  ComplexMatrix matrix;
  /// Closed-form and measured coefficient on the step's reference element.
  double predicted = 0.0;
  double measured = 0.0;
  /// Distance from the closed-form prediction for the whole matrix.
  double residual = 0.0;
  std::optional<double> membership_residual;
};

struct DescentTrace {
  std::string procedure;
  std::vector<DescentStep> steps;
  double final_predicted = 0.0;
  double final_measured = 0.0;
  /// Final-step relative deviation; for reconstructions, the worst over all steps.
  double relative_error = 0.0;
};

struct TheoremVerdict {
  std::string id;
  bool applies = false;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<std::string> notes;
  std::optional<DescentTrace> witness;
};

struct Theorem1Result {
  bool dipoles_nonzero = false;
  /// Reading "gaps mu_m nonzero" of the nonvanishing hypothesis; gates the conclusion.
  bool gaps_nonzero = false;
  /// Reading "energies E_m nonzero"; reported only.
  bool energies_nonzero = false;
  bool uniform_gaps = false;
  std::vector<double> v;
  /// 1-based indices p that satisfy the respective criterion, including
  /// the extra mirror condition when p = N/2.
  std::vector<int> criterion_i_p;
  std::vector<int> criterion_ii_p;
  bool criterion_i = false;
  bool criterion_ii = false;
  /// Verdict under the energy reading, for comparison.
  Conclusion conclusion_energy_reading = Conclusion::Inconclusive;
  TheoremVerdict verdict;
};

Theorem1Result theorem1_check(const SystemSpec& spec);

/// Spectral (omega distinctness), dipole (v distinctness on M) and uniform
/// criteria, in that order; the first definite verdict wins.
std::vector<TheoremVerdict> theorem_b_suite(const GenericCartanSystem& g);
std::vector<TheoremVerdict> theorem_c_suite(const GenericCartanSystem& g);
Conclusion suite_conclusion(const std::vector<TheoremVerdict>& verdicts);

DescentTrace descent_b1(const GenericCartanSystem& g);
DescentTrace descent_c1(const GenericCartanSystem& g);
DescentTrace descent_b2(const GenericCartanSystem& g);
DescentTrace descent_c2(const GenericCartanSystem& g);
/// Rebuilds every h_m, x_m, y_m of an equally spaced, uniformly coupled system.
DescentTrace uniform_reconstruct(const GenericCartanSystem& g);
/// Starting from the anchor ladder element (y_1 for SoOdd, y_l for Sp),
/// rebuilds the remaining ladder and Cartan elements and records the
/// membership residual of each against the closure.
DescentTrace lemma_reconstruct(const GenericCartanSystem& g, const ClosureResult& closure,
                               int seed);

struct CriteriaReport {
  Theorem1Result theorem1;
  bool symmetric = false;
  std::optional<BasisMap> sigma;
  std::optional<OmegaV> omega_v;
  std::vector<TheoremVerdict> suite;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<std::string> notes;
};

/// Runs the su(N) check and, for symmetric systems, the orthogonal or
/// symplectic suite on the sigma-transformed system.
CriteriaReport evaluate_criteria(const SystemSpec& spec);

}  // namespace dynlie
