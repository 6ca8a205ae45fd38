#include "dynlie/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "dynlie/error.hpp"

namespace dynlie {

namespace {

constexpr Complex kI{0.0, 1.0};

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

[[noreturn]] void bad_token(std::string_view token) {
  throw Error(ErrorCode::BadToken, "cannot parse dipole token '" + std::string(token) + "'");
}

}  // namespace

void SystemSpec::validate() const {
  if (energies.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "system needs at least 2 levels");
  }
  if (dipoles.size() + 1 != energies.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(energies.size() - 1) + " dipoles for " +
                    std::to_string(energies.size()) + " levels, got " +
                    std::to_string(dipoles.size()));
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be a positive finite number");
  }
  for (double e : energies)
    if (!std::isfinite(e)) throw Error(ErrorCode::NonFinite, "non-finite energy");
  for (double d : dipoles)
    if (!std::isfinite(d)) throw Error(ErrorCode::NonFinite, "non-finite dipole");
  for (std::size_t n = 0; n + 1 < energies.size(); ++n) {
    if (energies[n + 1] < energies[n]) {
      throw Error(ErrorCode::EnergiesDecreasing,
                  "energies must be non-decreasing (E_" + std::to_string(n + 2) + " < E_" +
                      std::to_string(n + 1) + ")");
    }
  }
}

ComplexMatrix build_h0(const SystemSpec& spec) {
  spec.validate();
  ComplexMatrix h(spec.levels());
  for (std::size_t n = 0; n < spec.levels(); ++n) h(n, n) = kI * spec.energies[n];
  return h;
}

ComplexMatrix build_h0_prime(const SystemSpec& spec) {
  spec.validate();
  const auto n = spec.levels();
  // Mirror pairs are summed first, so an exactly mirror-symmetric spectrum
  // centred on zero is left unshifted.
  double mean = n % 2 ? spec.energies[n / 2] : 0.0;
  for (std::size_t k = 0; k < n / 2; ++k) mean += spec.energies[k] + spec.energies[n - 1 - k];
  mean /= static_cast<double>(n);
  ComplexMatrix h(n);
  for (std::size_t k = 0; k < n; ++k) h(k, k) = kI * (spec.energies[k] - mean);
  return h;
}

ComplexMatrix build_h1(const SystemSpec& spec) {
  spec.validate();
  ComplexMatrix h(spec.levels());
  for (std::size_t n = 0; n < spec.dipoles.size(); ++n) {
    h(n, n + 1) = kI * spec.dipoles[n];
    h(n + 1, n) = kI * spec.dipoles[n];
  }
  return h;
}

GapSequence transition_gaps(const SystemSpec& spec) {
  spec.validate();
  GapSequence g;
  g.gaps.reserve(spec.levels() - 1);
  for (std::size_t n = 0; n + 1 < spec.levels(); ++n)
    g.gaps.push_back(spec.energies[n + 1] - spec.energies[n]);
  return g;
}

bool detect_symmetric_coupling(const SystemSpec& spec) {
  const auto mu = transition_gaps(spec).gaps;
  const auto& d = spec.dipoles;
  const std::size_t m = mu.size();
  const double gap_tol = spec.tolerance * std::max(max_abs(mu), 1e-300);
  const double dip_tol = spec.tolerance * std::max(max_abs(d), 1e-300);
  for (std::size_t n = 0; n < m; ++n) {
    const std::size_t mirror = m - 1 - n;
    if (std::abs(mu[n] - mu[mirror]) > gap_tol) return false;
    if (std::abs(d[n] - d[mirror]) > dip_tol) return false;
  }
  return true;
}

std::vector<std::size_t> decomposability_flags(const SystemSpec& spec) {
  spec.validate();
  std::vector<std::size_t> flags;
  for (std::size_t n = 0; n < spec.dipoles.size(); ++n)
    if (std::abs(spec.dipoles[n]) <= spec.tolerance) flags.push_back(n + 1);
  return flags;
}

double parse_dipole_token(std::string_view token) {
  const std::string_view t = trim(token);
  double value = 0.0;
  if (parse_number(t, value)) return value;

  const auto open = t.find("sqrt(");
  if (open == std::string_view::npos || t.back() != ')') bad_token(token);

  double factor = 1.0;
  std::string_view prefix = trim(t.substr(0, open));
  if (!prefix.empty()) {
    if (prefix == "-") {
      factor = -1.0;
    } else {
      if (prefix.back() != '*') bad_token(token);
      prefix.remove_suffix(1);
      if (!parse_number(prefix, factor)) bad_token(token);
    }
  }
  const auto inner = t.substr(open + 5, t.size() - open - 6);
  double radicand = 0.0;
  if (!parse_number(inner, radicand) || radicand < 0.0) bad_token(token);
  return factor * std::sqrt(radicand);
}

}  // namespace dynlie
