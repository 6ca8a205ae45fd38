#include "dynlie/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "criteria_internal.hpp"
#include "dynlie/error.hpp"
#include "dynlie/linalg.hpp"

namespace dynlie {

namespace detail {

bool v_distinct_from(const OmegaV& ov, int anchor) {
  const double scale = max_abs(ov.v);
  const double va = ov.v[static_cast<std::size_t>(anchor - 1)];
  for (int m : ov.set_m) {
    if (m == anchor) continue;
    if (std::abs(ov.v[static_cast<std::size_t>(m - 1)] - va) <= kDefaultTolerance * std::max(scale, 1e-300))
      return false;
  }
  return true;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool all_nonzero(const std::vector<double>& v) {
  const double floor = kAbsoluteFloor * max_abs(v);
  if (max_abs(v) == 0.0) return false;
  return std::all_of(v.begin(), v.end(), [floor](double x) { return std::abs(x) > floor; });
}

bool same_square(double a, double b) {
  const double a2 = a * a;
  const double b2 = b * b;
  return std::abs(a2 - b2) <= kDefaultTolerance * std::max({a2, b2, 1e-300});
}

bool close(double a, double b, double scale) {
  return std::abs(a - b) <= kDefaultTolerance * std::max(scale, 1e-300);
}

}  // namespace detail

using detail::all_nonzero;
using detail::close;
using detail::max_abs;
using detail::same_square;
using detail::v_distinct_from;

const char* to_string(Direction d) noexcept { return d == Direction::Odd ? "ODD" : "EVEN"; }

const char* to_string(Conclusion c) noexcept {
  switch (c) {
    case Conclusion::SuN: return "SU_N";
    case Conclusion::SoOdd: return "SO_ODD";
    case Conclusion::Sp: return "SP";
    case Conclusion::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

void GenericCartanSystem::validate() const {
  if (family != Family::SoOdd && family != Family::Sp) {
    throw Error(ErrorCode::InvalidArgument, "generic system family must be SO_ODD or SP");
  }
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "generic system rank must be >= 1");
  const auto l = static_cast<std::size_t>(rank);
  if (eps.size() != l || delta.size() != l) {
    throw Error(ErrorCode::LengthMismatch, "generic system needs l values of eps and delta");
  }
  for (double x : eps)
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "non-finite eps");
  for (double x : delta)
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "non-finite delta");
}

GeneratorTable GenericCartanSystem::table() const {
  validate();
  return make_table(family, rank);
}

LadderSet ladder_set(const GeneratorTable& table) {
  LadderSet s;
  for (int m = 1; m <= table.cartan_count(); ++m) {
    s.h.push_back(table.h(m).to_complex());
    s.x.push_back(table.ladder_x(m).to_complex());
    s.y.push_back(table.ladder_y(m).to_complex());
  }
  return s;
}

ComplexMatrix GenericCartanSystem::h0() const {
  const auto lad = ladder_set(table());
  ComplexMatrix out(lad.h.front().dim());
  for (int m = 0; m < rank; ++m) out += eps[m] * lad.h[m];
  return out;
}

ComplexMatrix GenericCartanSystem::h1() const {
  const auto lad = ladder_set(table());
  ComplexMatrix out(lad.y.front().dim());
  for (int m = 0; m < rank; ++m) out += delta[m] * lad.y[m];
  return out;
}

GenericCartanSystem BasisMap::system() const {
  GenericCartanSystem g;
  g.family = direction == Direction::Odd ? Family::SoOdd : Family::Sp;
  g.rank = static_cast<int>(tilde_e.size());
  g.eps = tilde_e;
  g.delta = tilde_d;
  return g;
}

BasisMap sigma_transform(const SystemSpec& spec) {
  spec.validate();
  if (!detect_symmetric_coupling(spec)) {
    throw Error(ErrorCode::HypothesisViolated,
                "basis map needs mirror-symmetric gaps and couplings");
  }
  const std::size_t n = spec.levels();
  const auto mu = transition_gaps(spec).gaps;
  const auto& d = spec.dipoles;
  // 1-based accessors.
  auto mu_at = [&](int s) { return mu[static_cast<std::size_t>(s - 1)]; };
  auto d_at = [&](int s) { return d[static_cast<std::size_t>(s - 1)]; };
  auto sign = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };

  BasisMap map;
  map.unitary = ComplexMatrix(n);
  const int N = static_cast<int>(n);
  if (n % 2 == 1) {
    const int l = (N - 1) / 2;
    map.direction = Direction::Odd;
    for (int k = 1; k <= N; ++k) {
      if (k <= l + 1) map.unitary(l + 2 - k - 1, k - 1) = 1.0;
      else map.unitary(k - 1, k - 1) = sign(k - l - 1);
    }
    for (int m = 1; m <= l; ++m) {
      double e = 0.0;
      for (int s = l + 1 - m; s <= l; ++s) e -= mu_at(s);
      map.tilde_e.push_back(e);
      map.tilde_d.push_back(d_at(l + 1 - m));
    }
  } else {
    const int l = N / 2;
    map.direction = Direction::Even;
    for (int k = 1; k <= N; ++k) {
      if (k <= l) map.unitary(k - 1, k - 1) = 1.0;
      else map.unitary(3 * l + 1 - k - 1, k - 1) = sign(k - l - 1);
    }
    for (int m = 1; m <= l; ++m) {
      double e = -0.5 * mu_at(l);
      for (int s = m; s <= l - 1; ++s) e -= mu_at(s);
      map.tilde_e.push_back(e);
      map.tilde_d.push_back(d_at(m));
    }
  }

  const auto g = map.system();
  const ComplexMatrix ut = map.unitary.transpose();
  const ComplexMatrix a = multiply(map.unitary, multiply(build_h0_prime(spec), ut));
  const ComplexMatrix b = multiply(map.unitary, multiply(build_h1(spec), ut));
  map.h0_residual = (a - g.h0()).frobenius_norm();
  map.h1_residual = (b - g.h1()).frobenius_norm();
  return map;
}

OmegaV omega_v_sequences(const GenericCartanSystem& g) {
  g.validate();
  const int l = g.rank;
  const auto& e = g.eps;
  OmegaV out;
  const double escale = max_abs(e);
  const double slack = kDefaultTolerance * escale;

  // dt(k) is the masked coupling with 1-based k and family boundary values.
  std::vector<double> dt(static_cast<std::size_t>(l), 0.0);
  if (g.family == Family::SoOdd) {
    out.omega_first_index = 0;
    out.omega.push_back(e[0]);
    for (int k = 1; k < l; ++k) out.omega.push_back(e[k] - e[k - 1]);
    const double w0 = out.omega[0];
    out.sign_condition = true;
    for (int m = 1; m <= l; ++m) {
      const double w = out.omega[static_cast<std::size_t>(m - 1)];
      if (!same_square(w, w0)) continue;
      out.set_m.push_back(m);
      dt[m - 1] = g.delta[m - 1];
      if (!close(w, w0, std::abs(w0))) out.sign_condition = false;
    }
    bool up = true;
    bool down = true;
    for (int m = 0; m < l; ++m) {
      if (e[m] < -slack) up = false;
      if (e[m] > slack) down = false;
      if (m + 1 < l) {
        if (e[m] > e[m + 1] + slack) up = false;
        if (e[m] < e[m + 1] - slack) down = false;
      }
    }
    out.monotone = up || down;
    auto at = [&](int k) {
      if (k == 0) return dt[0];
      if (k == l + 1) return 0.0;
      return dt[static_cast<std::size_t>(k - 1)];
    };
    for (int m = 1; m <= l; ++m)
      out.v.push_back(2 * at(m) * at(m) - at(m + 1) * at(m + 1) - at(m - 1) * at(m - 1));
  } else {
    out.omega_first_index = 1;
    for (int k = 1; k < l; ++k) out.omega.push_back(e[k] - e[k - 1]);
    out.omega.push_back(2 * e[l - 1]);
    const double wl = out.omega.back();
    out.sign_condition = true;
    for (int m = 1; m <= l; ++m) {
      const double w = out.omega[static_cast<std::size_t>(m - 1)];
      if (!same_square(w, wl)) continue;
      out.set_m.push_back(m);
      dt[m - 1] = g.delta[m - 1];
      if (m < l && !close(w, -wl, std::abs(wl))) out.sign_condition = false;
    }
    bool ok = true;
    for (int m = 0; m < l; ++m) {
      if (e[m] > slack) ok = false;
      if (m + 1 < l && e[m] > e[m + 1] + slack) ok = false;
    }
    out.monotone = ok;
    auto at = [&](int k) {
      if (k == 0) return 0.0;
      if (k == l + 1) return l >= 2 ? dt[static_cast<std::size_t>(l - 2)] : 0.0;
      return dt[static_cast<std::size_t>(k - 1)];
    };
    for (int m = 1; m <= l; ++m)
      out.v.push_back(2 * at(m) * at(m) - at(m + 1) * at(m + 1) - at(m - 1) * at(m - 1));
  }
  out.delta_tilde = dt;
  return out;
}

Theorem1Result theorem1_check(const SystemSpec& spec) {
  spec.validate();
  Theorem1Result r;
  r.verdict.id = "su_generic";
  const auto mu = transition_gaps(spec).gaps;
  const auto& d = spec.dipoles;
  const int n = static_cast<int>(spec.levels());
  const double tol = spec.tolerance;

  const double dscale = max_abs(d);
  const double mscale = max_abs(mu);
  auto nonzero = [](double x, double scale, double t) { return std::abs(x) > t * scale && x != 0.0; };

  r.dipoles_nonzero = dscale > 0.0;
  for (double x : d) r.dipoles_nonzero = r.dipoles_nonzero && nonzero(x, dscale, tol);
  r.gaps_nonzero = mscale > 0.0;
  for (double x : mu) r.gaps_nonzero = r.gaps_nonzero && nonzero(x, mscale, tol);
  const double escale = max_abs(spec.energies);
  r.energies_nonzero = escale > 0.0;
  for (int m = 0; m < n - 1; ++m)
    r.energies_nonzero = r.energies_nonzero && nonzero(spec.energies[m], escale, tol);

  // v_m with d_0 = d_N = 0.
  auto d_at = [&](int k) { return (k < 1 || k > n - 1) ? 0.0 : d[static_cast<std::size_t>(k - 1)]; };
  for (int m = 1; m <= n - 1; ++m)
    r.v.push_back(2 * d_at(m) * d_at(m) - d_at(m + 1) * d_at(m + 1) - d_at(m - 1) * d_at(m - 1));

  r.uniform_gaps = true;
  for (double x : mu) r.uniform_gaps = r.uniform_gaps && std::abs(x - mu[0]) <= tol * std::max(mscale, 1e-300);

  // Extra condition at the midpoint: d_{p-k} != +-d_{p+k} for some k > 0.
  auto mirror_ok = [&](int p) {
    if (2 * p != n) return true;
    for (int k = 1; k < p; ++k)
      if (std::abs(std::abs(d_at(p - k)) - std::abs(d_at(p + k))) > tol * std::max(dscale, 1e-300))
        return true;
    return false;
  };
  auto unique_at = [&](const std::vector<double>& seq, int p, double scale) {
    const double x = seq[static_cast<std::size_t>(p - 1)];
    if (!nonzero(x, scale, tol)) return false;
    for (std::size_t m = 0; m < seq.size(); ++m)
      if (static_cast<int>(m) != p - 1 && std::abs(seq[m] - x) <= tol * std::max(scale, 1e-300))
        return false;
    return true;
  };

  bool midpoint_blocked = false;
  for (int p = 1; p <= n - 1; ++p) {
    if (unique_at(mu, p, mscale)) {
      if (mirror_ok(p)) r.criterion_i_p.push_back(p);
      else midpoint_blocked = true;
    }
  }
  const double vscale = max_abs(r.v);
  if (r.uniform_gaps) {
    for (int p = 1; p <= n - 1; ++p) {
      if (unique_at(r.v, p, vscale)) {
        if (mirror_ok(p)) r.criterion_ii_p.push_back(p);
        else midpoint_blocked = true;
      }
    }
  }
  r.criterion_i = !r.criterion_i_p.empty();
  r.criterion_ii = !r.criterion_ii_p.empty();

  const bool criterion = r.criterion_i || r.criterion_ii;
  r.verdict.applies = r.dipoles_nonzero && r.gaps_nonzero && criterion;
  r.verdict.conclusion = r.verdict.applies ? Conclusion::SuN : Conclusion::Inconclusive;
  r.conclusion_energy_reading = r.dipoles_nonzero && r.energies_nonzero && criterion
                                    ? Conclusion::SuN
                                    : Conclusion::Inconclusive;

  auto& notes = r.verdict.notes;
  notes.push_back(
      "nonvanishing hypothesis evaluated on transition gaps mu_m (gates the verdict); the "
      "energy reading E_m != 0 is reported separately");
  if (!r.dipoles_nonzero) notes.push_back("a coupling d_m vanishes");
  if (!r.gaps_nonzero) notes.push_back("a transition gap mu_m vanishes");
  if (!criterion) notes.push_back("no unique nonzero gap and no unique nonzero v_p");
  if (midpoint_blocked) notes.push_back("candidate p = N/2 rejected: d_{p-k} = +-d_{p+k} for all k");
  return r;
}

namespace {

TheoremVerdict run_if(std::string id, bool applies, Conclusion target,
                      std::vector<std::string> notes, DescentTrace (*descent)(const GenericCartanSystem&),
                      const GenericCartanSystem& g) {
  TheoremVerdict v;
  v.id = std::move(id);
  v.notes = std::move(notes);
  v.applies = applies;
  if (applies) {
    v.conclusion = target;
    v.witness = descent(g);
  }
  return v;
}


}  // namespace

namespace detail {

bool uniform_hypothesis(const GenericCartanSystem& g) {
  const int l = g.rank;
  const double scale = max_abs(g.eps);
  if (!all_nonzero(g.eps) || !all_nonzero(g.delta)) return false;
  for (int m = 1; m < l; ++m)
    if (!close(g.delta[m], g.delta[0], std::abs(g.delta[0]))) return false;
  if (g.family == Family::SoOdd) {
    for (int m = 1; m <= l; ++m)
      if (!close(g.eps[m - 1], m * g.eps[0], scale)) return false;
  } else {
    const double gap = -2 * g.eps[l - 1];
    for (int m = 1; m < l; ++m)
      if (!close(g.eps[m] - g.eps[m - 1], gap, scale)) return false;
  }
  return true;
}

}  // namespace detail

std::vector<TheoremVerdict> theorem_b_suite(const GenericCartanSystem& g) {
  g.validate();
  if (g.family != Family::SoOdd) throw Error(ErrorCode::InvalidArgument, "orthogonal suite needs SO_ODD");
  const auto ov = omega_v_sequences(g);
  const bool nz = all_nonzero(g.eps) && all_nonzero(g.delta);
  std::vector<TheoremVerdict> out;

  std::vector<std::string> n1;
  if (!nz) n1.push_back("eps and delta must all be nonzero");
  const bool spectral = ov.set_m.size() == 1;
  if (!spectral) n1.push_back("omega_m^2 = omega_0^2 for some m >= 1");
  out.push_back(run_if("so_odd_spectral", nz && spectral, Conclusion::SoOdd, n1, descent_b1, g));

  std::vector<std::string> n2;
  if (!nz) n2.push_back("eps and delta must all be nonzero");
  if (!ov.monotone) n2.push_back("eps outside the sign-definite monotone regime; not evaluated");
  if (!ov.sign_condition) n2.push_back("omega_{m-1} != omega_0 for some m in M");
  const bool distinct = v_distinct_from(ov, 1);
  if (!distinct) n2.push_back("v_m = v_1 for some m in M minus {1}");
  out.push_back(run_if("so_odd_dipole", nz && ov.monotone && ov.sign_condition && distinct,
                       Conclusion::SoOdd, n2, descent_b2, g));

  std::vector<std::string> n3;
  const bool uniform = detail::uniform_hypothesis(g);
  if (!uniform) n3.push_back("levels not equally spaced with uniform couplings");
  out.push_back(run_if("so_odd_uniform", uniform, Conclusion::SoOdd, n3, uniform_reconstruct, g));
  return out;
}

std::vector<TheoremVerdict> theorem_c_suite(const GenericCartanSystem& g) {
  g.validate();
  if (g.family != Family::Sp) throw Error(ErrorCode::InvalidArgument, "symplectic suite needs SP");
  const int l = g.rank;
  const auto ov = omega_v_sequences(g);
  const bool nz = all_nonzero(g.eps) && all_nonzero(g.delta);
  std::vector<TheoremVerdict> out;

  std::vector<std::string> n1;
  if (!nz) n1.push_back("eps and delta must all be nonzero");
  const bool spectral = ov.set_m.size() == 1;
  if (!spectral) n1.push_back("omega_m^2 = omega_l^2 for some m < l");
  out.push_back(run_if("sp_spectral", nz && spectral, Conclusion::Sp, n1, descent_c1, g));

  std::vector<std::string> n2;
  n2.push_back(
      "coincidence condition evaluated as omega_m = -omega_l = -2 eps_l on M; a phrasing in "
      "terms of transition gaps mu is not used");
  if (!nz) n2.push_back("eps and delta must all be nonzero");
  if (!ov.monotone) n2.push_back("eps outside the negative non-decreasing regime; not evaluated");
  if (!ov.sign_condition) n2.push_back("omega_m != -omega_l for some m in M");
  const bool distinct = v_distinct_from(ov, l);
  if (!distinct) n2.push_back("v_m = v_l for some m in M minus {l}");
  out.push_back(run_if("sp_dipole", nz && ov.monotone && ov.sign_condition && distinct,
                       Conclusion::Sp, n2, descent_c2, g));

  std::vector<std::string> n3;
  const bool uniform = detail::uniform_hypothesis(g);
  if (!uniform) n3.push_back("levels not equally spaced with uniform couplings");
  out.push_back(run_if("sp_uniform", uniform, Conclusion::Sp, n3, uniform_reconstruct, g));
  return out;
}

Conclusion suite_conclusion(const std::vector<TheoremVerdict>& verdicts) {
  for (const auto& v : verdicts)
    if (v.applies) return v.conclusion;
  return Conclusion::Inconclusive;
}

CriteriaReport evaluate_criteria(const SystemSpec& spec) {
  CriteriaReport r;
  r.theorem1 = theorem1_check(spec);
  r.symmetric = detect_symmetric_coupling(spec);
  r.conclusion = r.theorem1.verdict.conclusion;
  if (!r.symmetric) {
    r.notes.push_back("couplings are not mirror-symmetric; orthogonal/symplectic suite skipped");
    return r;
  }
  r.sigma = sigma_transform(spec);
  const auto g = r.sigma->system();
  r.omega_v = omega_v_sequences(g);
  r.suite = g.family == Family::SoOdd ? theorem_b_suite(g) : theorem_c_suite(g);
  if (r.conclusion == Conclusion::Inconclusive) r.conclusion = suite_conclusion(r.suite);
  if (r.conclusion == Conclusion::Inconclusive) {
    r.notes.push_back(
        "no criterion applies; the criteria are sufficient only, so no proper-subalgebra "
        "conclusion is drawn here");
  }
  return r;
}

}  // namespace dynlie
