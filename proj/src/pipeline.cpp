#include "dynlie/pipeline.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dynlie/closure.hpp"
#include "dynlie/error.hpp"

namespace dynlie {

using json = nlohmann::json;

void RunConfig::validate() const {
  if (inputs.empty()) throw Error(ErrorCode::InvalidArgument, "at least one input file is required");
  if (tolerance && !(*tolerance > 0.0))
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (max_dim && *max_dim == 0) throw Error(ErrorCode::InvalidArgument, "max_dim must be positive");
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedJson, what); }

std::vector<double> number_array(const json& doc, const char* key, bool allow_tokens) {
  if (!doc.contains(key)) malformed(std::string("missing key \"") + key + "\"");
  const json& arr = doc.at(key);
  if (!arr.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_number()) {
      out.push_back(v.get<double>());
    } else if (allow_tokens && v.is_string()) {
      out.push_back(parse_dipole_token(v.get<std::string>()));
    } else {
      malformed(std::string("\"") + key + "\" holds a non-numeric entry");
    }
  }
  return out;
}

}  // namespace

SystemSpec parse_system_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  SystemSpec spec;
  spec.energies = number_array(doc, "energies", false);
  spec.dipoles = number_array(doc, "dipoles", true);
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number()) malformed("\"tolerance\" must be a number");
    spec.tolerance = doc["tolerance"].get<double>();
  }
  spec.validate();
  return spec;
}

SystemSpec parse_system_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_system_json(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string system_to_json(const SystemSpec& spec) {
  nlohmann::ordered_json doc;
  doc["energies"] = spec.energies;
  doc["dipoles"] = spec.dipoles;
  doc["tolerance"] = spec.tolerance;
  return doc.dump();
}

namespace {

Report base_report(const SystemSpec& spec, const RunConfig& config) {
  Report r;
  r.spec = spec;
  if (config.tolerance) r.spec.tolerance = *config.tolerance;
  r.spec.validate();
  r.symmetric = detect_symmetric_coupling(r.spec);
  r.gaps = transition_gaps(r.spec).gaps;
  r.zero_dipoles = decomposability_flags(r.spec);
  if (config.sections.tables && r.symmetric) {
    const int l = static_cast<int>(r.spec.levels() / 2);
    r.table = r.spec.levels() % 2 == 1 ? so_odd_basis(l) : sp_basis(l);
  }
  return r;
}

}  // namespace

Report run_pipeline(const SystemSpec& spec, const RunConfig& config) {
  Report r = base_report(spec, config);
  const std::vector<ComplexMatrix> gens{build_h0_prime(r.spec), build_h1(r.spec)};
  ClosureOptions opts;
  opts.tolerance = r.spec.tolerance;
  opts.max_dim = config.max_dim;
  const ClosureResult closure = lie_closure(gens, opts);

  ClosureSummary s;
  s.dim = closure.dim;
  s.converged = closure.converged;
  s.reached_max_dim = closure.reached_max_dim;
  s.brackets_evaluated = closure.brackets_evaluated;
  if (config.full) s.basis.assign(closure.basis.elements().begin(), closure.basis.elements().end());
  r.closure = std::move(s);

  r.classification = classify(closure, ClassifyContext{!r.zero_dipoles.empty()});
  if (config.sections.criteria) r.criteria = evaluate_criteria(r.spec);
  return r;
}

Report run_check(const SystemSpec& spec, const RunConfig& config) {
  Report r = base_report(spec, config);
  r.criteria = evaluate_criteria(r.spec);
  return r;
}

}  // namespace dynlie
