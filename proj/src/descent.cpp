#include <algorithm>
#include <cmath>
#include <string>

#include "criteria_internal.hpp"
#include "dynlie/criteria.hpp"
#include "dynlie/error.hpp"
#include "dynlie/linalg.hpp"

namespace dynlie {

namespace {

using detail::all_nonzero;
using detail::max_abs;

struct Context {
  int l = 0;
  LadderSet lad;
  ComplexMatrix h0;
  ComplexMatrix h1;
};

Context context(const GenericCartanSystem& g, Family expected, const char* who) {
  g.validate();
  if (g.family != expected) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(who) + " needs a " + to_string(expected) + " system");
  }
  Context c;
  c.l = g.rank;
  c.lad = ladder_set(g.table());
  c.h0 = ComplexMatrix(c.lad.h.front().dim());
  c.h1 = ComplexMatrix(c.lad.h.front().dim());
  for (int m = 0; m < c.l; ++m) {
    c.h0 += g.eps[m] * c.lad.h[m];
    c.h1 += g.delta[m] * c.lad.y[m];
  }
  return c;
}

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::HypothesisViolated, what);
}

bool nonzero_entry(const std::vector<double>& v, int one_based) {
  const double scale = max_abs(v);
  return scale > 0.0 && std::abs(v[one_based - 1]) > kAbsoluteFloor * scale;
}

double coefficient(const ComplexMatrix& m, const ComplexMatrix& ref) {
  return hs_inner(ref, m) / hs_inner(ref, ref);
}

void record(DescentTrace& t, std::string label, const ComplexMatrix& m, const ComplexMatrix& predicted,
            const ComplexMatrix& ref) {
  DescentStep s;
  s.label = std::move(label);
  s.matrix = m;
  s.predicted = coefficient(predicted, ref);
  s.measured = coefficient(m, ref);
  s.residual = (m - predicted).frobenius_norm();
  t.steps.push_back(std::move(s));
}

void finish(DescentTrace& t) {
  const auto& last = t.steps.back();
  t.final_predicted = last.predicted;
  t.final_measured = last.measured;
  t.relative_error = last.predicted != 0.0
                         ? std::abs(last.measured - last.predicted) / std::abs(last.predicted)
                         : std::abs(last.measured);
}

ComplexMatrix bb(const ComplexMatrix& h0, const ComplexMatrix& v) {
  return commutator(commutator(h0, v), h0);
}


}  // namespace

DescentTrace descent_b1(const GenericCartanSystem& g) {
  const Context c = context(g, Family::SoOdd, "descent_b1");
  const auto ov = omega_v_sequences(g);
  if (ov.set_m.size() != 1) violated("omega_m^2 = omega_0^2 for some m >= 1");
  if (!nonzero_entry(g.eps, 1)) violated("omega_0 = eps_1 must be nonzero");
  if (!nonzero_entry(g.delta, 1)) violated("delta_1 must be nonzero");
  const int l = c.l;
  auto w2 = [&](int k) { return ov.omega[k] * ov.omega[k]; };

  DescentTrace t;
  t.procedure = "so_odd_spectral_descent";
  ComplexMatrix v = bb(c.h0, c.h1);
  for (int k = 0; k < l; ++k) {
    if (k > 0) v = bb(c.h0, v) - w2(l - k) * v;
    ComplexMatrix predicted(v.dim());
    for (int m = 1; m <= l - k; ++m) {
      double coef = g.delta[m - 1] * w2(m - 1);
      for (int j = 1; j <= k; ++j) coef *= w2(m - 1) - w2(l - j);
      predicted += coef * c.lad.y[m - 1];
    }
    record(t, "V(" + std::to_string(k) + ")", v, predicted, c.lad.y[0]);
  }
  finish(t);
  return t;
}

DescentTrace descent_c1(const GenericCartanSystem& g) {
  const Context c = context(g, Family::Sp, "descent_c1");
  const auto ov = omega_v_sequences(g);
  const int l = c.l;
  if (ov.set_m.size() != 1) violated("omega_m^2 = omega_l^2 for some m < l");
  if (!nonzero_entry(g.delta, l)) violated("delta_l must be nonzero");
  auto w2 = [&](int m) { return ov.omega[m - 1] * ov.omega[m - 1]; };

  DescentTrace t;
  t.procedure = "sp_spectral_descent";
  ComplexMatrix v = c.h1;
  for (int k = 0; k < l; ++k) {
    if (k > 0) v = bb(c.h0, v) - w2(k) * v;
    ComplexMatrix predicted(v.dim());
    for (int m = k + 1; m <= l; ++m) {
      double coef = g.delta[m - 1];
      for (int j = 1; j <= k; ++j) coef *= w2(m) - w2(j);
      predicted += coef * c.lad.y[m - 1];
    }
    record(t, "V(" + std::to_string(k) + ")", v, predicted, c.lad.y[l - 1]);
  }
  finish(t);
  return t;
}

namespace {

// Shared dipole-ladder descent. x_sign[m-1] is the sign of x_m in
// omega_anchor^{-1} [iH0', y_m]; order lists M minus the anchor in the
// sequence the ladder consumes them.
DescentTrace dipole_ladder(const Context& c, const OmegaV& ov, double omega_anchor, int anchor,
                           const std::vector<double>& x_sign, const std::vector<double>& z_coef,
                           const std::vector<int>& order, const char* procedure) {
  const auto& dt = ov.delta_tilde;
  const int l = c.l;
  DescentTrace t;
  t.procedure = procedure;

  ComplexMatrix y(c.h0.dim());
  for (int m = 1; m <= l; ++m) y += dt[m - 1] * c.lad.y[m - 1];
  ComplexMatrix x = commutator(c.h0, y) * (1.0 / omega_anchor);
  const ComplexMatrix z = commutator(x, y) * 0.5;

  ComplexMatrix px(y.dim());
  ComplexMatrix pz(y.dim());
  for (int m = 1; m <= l; ++m) {
    px += (x_sign[m - 1] * dt[m - 1]) * c.lad.x[m - 1];
    pz += z_coef[m - 1] * c.lad.h[m - 1];
  }
  const ComplexMatrix& ya = c.lad.y[anchor - 1];
  const ComplexMatrix& xa = c.lad.x[anchor - 1];
  record(t, "X(0)", x, px, xa);
  record(t, "Z", z, pz, c.lad.h[anchor - 1]);

  std::vector<double> weight(dt.begin(), dt.end());
  std::vector<bool> alive(static_cast<std::size_t>(l), false);
  for (int m : ov.set_m) alive[m - 1] = true;

  auto predicted_y = [&]() {
    ComplexMatrix p(y.dim());
    for (int m = 1; m <= l; ++m)
      if (alive[m - 1]) p += weight[m - 1] * c.lad.y[m - 1];
    return p;
  };
  auto predicted_x = [&]() {
    ComplexMatrix p(y.dim());
    for (int m = 1; m <= l; ++m)
      if (alive[m - 1]) p += (x_sign[m - 1] * weight[m - 1]) * c.lad.x[m - 1];
    return p;
  };

  record(t, "Y(0)", y, predicted_y(), ya);
  int k = 0;
  for (int mk : order) {
    ++k;
    const double vk = ov.v[mk - 1];
    const ComplexMatrix ny = commutator(z, x) - vk * y;
    const ComplexMatrix nx = commutator(y, z) - vk * x;
    y = ny;
    x = nx;
    alive[mk - 1] = false;
    for (int m = 1; m <= l; ++m) weight[m - 1] *= ov.v[m - 1] - vk;
    record(t, "X(" + std::to_string(k) + ")", x, predicted_x(), xa);
    record(t, "Y(" + std::to_string(k) + ")", y, predicted_y(), ya);
  }
  finish(t);
  return t;
}

}  // namespace

DescentTrace descent_b2(const GenericCartanSystem& g) {
  const Context c = context(g, Family::SoOdd, "descent_b2");
  const auto ov = omega_v_sequences(g);
  const int l = c.l;
  if (!nonzero_entry(g.eps, 1)) violated("omega_0 = eps_1 must be nonzero");
  if (!nonzero_entry(ov.delta_tilde, 1)) violated("delta_1 must be nonzero");
  if (!ov.sign_condition) violated("omega_{m-1} != omega_0 for some m in M");
  if (!detail::v_distinct_from(ov, 1)) violated("v_m = v_1 for some m in M minus {1}");

  std::vector<double> xs(static_cast<std::size_t>(l), -1.0);
  xs[0] = 1.0;
  std::vector<double> zc;
  const auto& dt = ov.delta_tilde;
  for (int m = 1; m <= l; ++m) {
    const double next = m < l ? dt[m] : 0.0;
    zc.push_back(next * next - dt[m - 1] * dt[m - 1]);
  }
  std::vector<int> order;
  for (auto it = ov.set_m.rbegin(); it != ov.set_m.rend(); ++it)
    if (*it != 1) order.push_back(*it);
  return dipole_ladder(c, ov, ov.omega[0], 1, xs, zc, order, "so_odd_dipole_descent");
}

DescentTrace descent_c2(const GenericCartanSystem& g) {
  const Context c = context(g, Family::Sp, "descent_c2");
  const auto ov = omega_v_sequences(g);
  const int l = c.l;
  const double wl = ov.omega.back();
  if (!nonzero_entry(g.eps, l)) violated("omega_l = 2 eps_l must be nonzero");
  if (!nonzero_entry(ov.delta_tilde, l)) violated("delta_l must be nonzero");
  if (!ov.sign_condition) violated("omega_m != -omega_l for some m in M");
  if (!detail::v_distinct_from(ov, l)) violated("v_m = v_l for some m in M minus {l}");

  std::vector<double> xs(static_cast<std::size_t>(l), 1.0);
  std::vector<double> zc;
  const auto& dt = ov.delta_tilde;
  for (int m = 1; m <= l; ++m) {
    const double prev = m > 1 ? dt[m - 2] : 0.0;
    zc.push_back(prev * prev - dt[m - 1] * dt[m - 1]);
  }
  std::vector<int> order;
  for (int m : ov.set_m)
    if (m != l) order.push_back(m);
  return dipole_ladder(c, ov, wl, l, xs, zc, order, "sp_dipole_descent");
}

namespace {

void record_element(DescentTrace& t, std::string label, const ComplexMatrix& produced,
                    const ComplexMatrix& expected) {
  record(t, std::move(label), produced, expected, expected);
}

void finish_elements(DescentTrace& t) {
  // Worst relative deviation from the table over all produced elements.
  double worst = 0.0;
  for (const auto& s : t.steps) {
    const double scale = std::max(s.predicted != 0.0 ? std::abs(s.predicted) : 1.0, 1.0);
    worst = std::max(worst, std::abs(s.measured - s.predicted) / scale);
  }
  t.final_predicted = t.steps.back().predicted;
  t.final_measured = t.steps.back().measured;
  t.relative_error = worst;
}

}  // namespace

DescentTrace uniform_reconstruct(const GenericCartanSystem& g) {
  g.validate();
  if (!detail::uniform_hypothesis(g)) {
    violated("uniform reconstruction needs equally spaced levels and uniform couplings");
  }
  const Context c = context(g, g.family, "uniform_reconstruct");
  const int l = c.l;
  const double delta = g.delta[0];
  const auto& lad = c.lad;
  DescentTrace t;

  ComplexMatrix y = c.h1 * (1.0 / delta);
  if (g.family == Family::SoOdd) {
    t.procedure = "so_odd_uniform_reconstruction";
    const double e1 = g.eps[0];
    ComplexMatrix x = commutator(c.h0, y) * (1.0 / e1);
    ComplexMatrix px(x.dim());
    for (int m = 1; m <= l; ++m) px += (m == 1 ? 1.0 : -1.0) * lad.x[m - 1];
    record(t, "X", x, px, lad.x[0]);
    for (int m = l; m >= 1; --m) {
      const double s = m == 1 ? 1.0 : -1.0;
      const ComplexMatrix h = commutator(y, x) * 0.5;
      const ComplexMatrix ym = commutator(x, h);
      const ComplexMatrix w = commutator(h, ym);
      const ComplexMatrix xm = s * w;
      const std::string idx = std::to_string(m);
      record_element(t, "h_" + idx, h, lad.h[m - 1]);
      record_element(t, "y_" + idx, ym, lad.y[m - 1]);
      record_element(t, "x_" + idx, xm, lad.x[m - 1]);
      y -= ym;
      x -= w;
    }
  } else {
    t.procedure = "sp_uniform_reconstruction";
    const double wl = 2 * g.eps[l - 1];
    const double gap = -wl;
    ComplexMatrix sum_x(y.dim());
    for (int m = 1; m <= l; ++m) sum_x += lad.x[m - 1];
    const ComplexMatrix w = commutator(c.h0, c.h1) * (1.0 / gap);
    record(t, "gap^-1 [iH0', iH1]", w, -delta * sum_x, lad.x[l - 1]);
    ComplexMatrix x = commutator(c.h0, y) * (1.0 / wl);
    record(t, "X", x, sum_x, lad.x[l - 1]);
    for (int m = 1; m <= l; ++m) {
      const double cm = m == l ? 2.0 : 1.0;
      const ComplexMatrix h = commutator(y, x) * 0.5;
      const ComplexMatrix ym = commutator(h, x) * (-1.0 / cm);
      const ComplexMatrix xm = commutator(h, ym) * (1.0 / cm);
      const std::string idx = std::to_string(m);
      record_element(t, "h_" + idx, h, lad.h[m - 1]);
      record_element(t, "y_" + idx, ym, lad.y[m - 1]);
      record_element(t, "x_" + idx, xm, lad.x[m - 1]);
      y -= ym;
      x -= xm;
    }
  }
  finish_elements(t);
  return t;
}

DescentTrace lemma_reconstruct(const GenericCartanSystem& g, const ClosureResult& closure, int seed) {
  g.validate();
  const Context c = context(g, g.family, "lemma_reconstruct");
  const int l = c.l;
  const bool odd = g.family == Family::SoOdd;
  const int anchor = odd ? 1 : l;
  if (seed != anchor) {
    throw Error(ErrorCode::InvalidArgument, "only the anchor seed y_" + std::to_string(anchor) +
                                                " is supported");
  }
  if (!all_nonzero(g.eps) || !all_nonzero(g.delta)) violated("eps and delta must all be nonzero");
  const auto& lad = c.lad;
  const ComplexMatrix& seed_y = lad.y[anchor - 1];
  const auto seed_in = membership(seed_y, closure);
  if (!seed_in.member) {
    throw Error(ErrorCode::NotMember, "seed y_" + std::to_string(anchor) +
                                          " is not in the closure (residual " +
                                          std::to_string(seed_in.residual) + ")");
  }

  DescentTrace t;
  t.procedure = odd ? "so_odd_lemma_reconstruction" : "sp_lemma_reconstruction";
  auto add = [&](std::string label, const ComplexMatrix& m, const ComplexMatrix& predicted,
                 const ComplexMatrix& ref) {
    record(t, std::move(label), m, predicted, ref);
    t.steps.back().membership_residual = membership(m, closure).residual;
  };
  const auto& e = g.eps;
  const auto& d = g.delta;

  add("y_" + std::to_string(anchor), seed_y, seed_y, seed_y);
  if (odd) {
    ComplexMatrix x = commutator(c.h0, seed_y) * (1.0 / e[0]);
    ComplexMatrix h = commutator(x, seed_y) * -0.5;
    add("x_1", x, lad.x[0], lad.x[0]);
    add("h_1", h, lad.h[0], lad.h[0]);
    ComplexMatrix z = c.h0 - e[0] * h;
    ComplexMatrix y = c.h1 - d[0] * seed_y;
    ComplexMatrix xx = -commutator(c.h0, c.h1) + (e[0] * d[0]) * x;
    for (int k = 1; k < l; ++k) {
      const ComplexMatrix s = xx + commutator(z, y);
      const double coef = -e[k - 1] * d[k];
      add("X(" + std::to_string(k) + ")+[Z(" + std::to_string(k) + "),Y(" + std::to_string(k) + ")]",
          s, coef * lad.x[k], lad.x[k]);
      const ComplexMatrix xn = s * (1.0 / coef);
      const ComplexMatrix yn = commutator(z, xn) * (1.0 / e[k]);
      const ComplexMatrix hn = commutator(xn, yn) * 0.5 + h;
      const std::string idx = std::to_string(k + 1);
      add("x_" + idx, xn, lad.x[k], lad.x[k]);
      add("y_" + idx, yn, lad.y[k], lad.y[k]);
      add("h_" + idx, hn, lad.h[k], lad.h[k]);
      z -= e[k] * hn;
      y -= d[k] * yn;
      xx -= ((e[k] - e[k - 1]) * d[k]) * xn;
      h = hn;
    }
  } else {
    const int L = l - 1;  // 0-based anchor
    ComplexMatrix x = commutator(c.h0, seed_y) * (1.0 / (2 * e[L]));
    ComplexMatrix h = commutator(x, seed_y) * -0.5;
    add("x_" + std::to_string(l), x, lad.x[L], lad.x[L]);
    add("h_" + std::to_string(l), h, lad.h[L], lad.h[L]);
    ComplexMatrix z = c.h0 - e[L] * h;
    ComplexMatrix y = c.h1 - d[L] * seed_y;
    ComplexMatrix xx = -commutator(c.h0, c.h1) + (2 * e[L] * d[L]) * x;
    int k = 0;
    for (int j = l - 1; j >= 1; --j) {
      ++k;
      const ComplexMatrix s = xx + commutator(z, y);
      const double coef = e[j] * d[j - 1];
      add("X(" + std::to_string(k) + ")+[Z(" + std::to_string(k) + "),Y(" + std::to_string(k) + ")]",
          s, coef * lad.x[j - 1], lad.x[j - 1]);
      const ComplexMatrix xj = s * (1.0 / coef);
      const ComplexMatrix yj = commutator(z, xj) * (-1.0 / e[j - 1]);
      const ComplexMatrix hj = h - commutator(xj, yj) * 0.5;
      const std::string idx = std::to_string(j);
      add("x_" + idx, xj, lad.x[j - 1], lad.x[j - 1]);
      add("y_" + idx, yj, lad.y[j - 1], lad.y[j - 1]);
      add("h_" + idx, hj, lad.h[j - 1], lad.h[j - 1]);
      z -= e[j - 1] * hj;
      y -= d[j - 1] * yj;
      xx -= ((e[j] - e[j - 1]) * d[j - 1]) * xj;
      h = hj;
    }
  }
  finish_elements(t);
  return t;
}

}  // namespace dynlie
