#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dynlie/error.hpp"
#include "dynlie/pipeline.hpp"

namespace dynlie {

using ojson = nlohmann::ordered_json;

namespace {

ojson matrix_json(const ComplexMatrix& m) {
  ojson re = ojson::array();
  ojson im = ojson::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ojson rr = ojson::array();
    ojson ri = ojson::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  ojson out;
  out["real"] = std::move(re);
  out["imag"] = std::move(im);
  return out;
}

ojson int_matrix_json(const IntMatrix& m) {
  ojson re = ojson::array();
  ojson im = ojson::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ojson rr = ojson::array();
    ojson ri = ojson::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      rr.push_back(m(i, j).re);
      ri.push_back(m(i, j).im);
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  ojson out;
  out["real_part"] = std::move(re);
  out["imag_part"] = std::move(im);
  return out;
}

ojson table_elements_json(const GeneratorTable& table, bool matrices) {
  ojson arr = ojson::array();
  for (const auto& e : table.elements()) {
    ojson item;
    item["label"] = e.label.str();
    if (matrices) {
      ojson m = int_matrix_json(e.matrix);
      item["real_part"] = std::move(m["real_part"]);
      item["imag_part"] = std::move(m["imag_part"]);
    }
    arr.push_back(std::move(item));
  }
  return arr;
}

ojson trace_json(const DescentTrace& t, bool full) {
  ojson out;
  out["procedure"] = t.procedure;
  ojson steps = ojson::array();
  for (const auto& s : t.steps) {
    ojson j;
    j["label"] = s.label;
    j["predicted"] = s.predicted;
    j["measured"] = s.measured;
    j["residual"] = s.residual;
    if (s.membership_residual) j["membership_residual"] = *s.membership_residual;
    if (full) j["matrix"] = matrix_json(s.matrix);
    steps.push_back(std::move(j));
  }
  out["steps"] = std::move(steps);
  out["final_predicted"] = t.final_predicted;
  out["final_measured"] = t.final_measured;
  out["relative_error"] = t.relative_error;
  return out;
}

ojson theorem1_json(const Theorem1Result& t) {
  ojson out;
  out["dipoles_nonzero"] = t.dipoles_nonzero;
  out["gaps_nonzero"] = t.gaps_nonzero;
  out["energies_nonzero"] = t.energies_nonzero;
  out["uniform_gaps"] = t.uniform_gaps;
  out["v"] = t.v;
  out["criterion_i_p"] = t.criterion_i_p;
  out["criterion_ii_p"] = t.criterion_ii_p;
  out["criterion_i"] = t.criterion_i;
  out["criterion_ii"] = t.criterion_ii;
  out["conclusion_energy_reading"] = to_string(t.conclusion_energy_reading);
  return out;
}

ojson verdict_json(const TheoremVerdict& v, const RunConfig& config) {
  ojson out;
  out["id"] = v.id;
  out["applies"] = v.applies;
  out["conclusion"] = to_string(v.conclusion);
  out["notes"] = v.notes;
  if (config.sections.descents && v.witness) out["witness"] = trace_json(*v.witness, config.full);
  return out;
}

ojson criteria_json(const CriteriaReport& c, const RunConfig& config) {
  ojson out;
  out["conclusion"] = to_string(c.conclusion);
  ojson t1 = theorem1_json(c.theorem1);
  out["theorem1"] = std::move(t1);
  out["symmetric"] = c.symmetric;
  if (c.sigma) {
    ojson s;
    s["direction"] = to_string(c.sigma->direction);
    s["tilde_e"] = c.sigma->tilde_e;
    s["tilde_d"] = c.sigma->tilde_d;
    s["h0_residual"] = c.sigma->h0_residual;
    s["h1_residual"] = c.sigma->h1_residual;
    if (config.full) s["unitary"] = matrix_json(c.sigma->unitary);
    out["sigma"] = std::move(s);
  } else {
    out["sigma"] = nullptr;
  }
  if (c.omega_v) {
    const auto& o = *c.omega_v;
    ojson s;
    s["omega"] = o.omega;
    s["omega_first_index"] = o.omega_first_index;
    s["set_m"] = o.set_m;
    s["delta_tilde"] = o.delta_tilde;
    s["v"] = o.v;
    s["sign_condition"] = o.sign_condition;
    s["monotone"] = o.monotone;
    out["omega_v"] = std::move(s);
  } else {
    out["omega_v"] = nullptr;
  }
  ojson verdicts = ojson::array();
  verdicts.push_back(verdict_json(c.theorem1.verdict, config));
  for (const auto& v : c.suite) verdicts.push_back(verdict_json(v, config));
  out["verdicts"] = std::move(verdicts);
  out["notes"] = c.notes;
  return out;
}

ojson classification_json(const Classification& c, bool full) {
  ojson out;
  out["family"] = to_string(c.family);
  out["dim"] = c.dim;
  out["ambient"] = c.ambient;
  if (c.form) {
    ojson f;
    f["symmetry"] = to_string(c.form->symmetry);
    f["kernel_dim"] = c.form->kernel_dim;
    f["symmetric_fraction"] = c.form->symmetric_fraction;
    if (full) f["matrix"] = matrix_json(c.form->form);
    out["form"] = std::move(f);
  } else {
    out["form"] = nullptr;
  }
  out["note"] = c.note;
  return out;
}

ojson to_json(const Report& r, const RunConfig& config) {
  ojson out;
  if (!r.source.empty()) out["source"] = r.source;
  ojson spec;
  spec["energies"] = r.spec.energies;
  spec["dipoles"] = r.spec.dipoles;
  spec["tolerance"] = r.spec.tolerance;
  out["spec"] = std::move(spec);
  out["levels"] = r.spec.levels();
  out["symmetric"] = r.symmetric;
  out["gaps"] = r.gaps;
  out["zero_dipoles"] = r.zero_dipoles;
  if (r.closure && config.sections.closure) {
    ojson c;
    c["dim"] = r.closure->dim;
    c["converged"] = r.closure->converged;
    c["reached_max_dim"] = r.closure->reached_max_dim;
    c["brackets_evaluated"] = r.closure->brackets_evaluated;
    if (config.full) {
      ojson basis = ojson::array();
      for (const auto& m : r.closure->basis) basis.push_back(matrix_json(m));
      c["basis"] = std::move(basis);
    }
    out["closure"] = std::move(c);
  }
  if (r.classification) out["classification"] = classification_json(*r.classification, config.full);
  if (r.criteria && config.sections.criteria) out["criteria"] = criteria_json(*r.criteria, config);
  if (r.table) {
    ojson t;
    t["family"] = to_string(r.table->family());
    t["rank"] = r.table->rank();
    t["matrix_dim"] = r.table->matrix_dim();
    t["elements"] = table_elements_json(*r.table, config.full);
    out["table"] = std::move(t);
  }
  return out;
}

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

}  // namespace

std::string report_json(const Report& report, const RunConfig& config) {
  return to_json(report, config).dump(2) + "\n";
}

std::string reports_json(std::span<const Report> reports, const RunConfig& config) {
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(to_json(r, config));
  return arr.dump(2) + "\n";
}

std::string report_text(const Report& r, const RunConfig& config) {
  std::ostringstream os;
  os.precision(12);
  if (!r.source.empty()) os << "source: " << r.source << "\n";
  os << "levels: " << r.spec.levels() << "\n";
  os << "energies: " << join(r.spec.energies) << "\n";
  os << "dipoles: " << join(r.spec.dipoles) << "\n";
  os << "tolerance: " << r.spec.tolerance << "\n";
  os << "gaps: " << join(r.gaps) << "\n";
  os << "symmetric coupling: " << (r.symmetric ? "yes" : "no") << "\n";
  if (!r.zero_dipoles.empty()) {
    os << "zero dipoles at:";
    for (auto i : r.zero_dipoles) os << " " << i;
    os << "\n";
  }
  if (r.closure && config.sections.closure) {
    os << "closure: dim " << r.closure->dim << ", " << (r.closure->converged ? "converged" : "not converged")
       << (r.closure->reached_max_dim ? " (bound reached)" : "") << ", "
       << r.closure->brackets_evaluated << " brackets\n";
  }
  if (r.classification) {
    const auto& c = *r.classification;
    os << "classification: " << to_string(c.family) << " (dim " << c.dim << " in " << c.ambient << "x"
       << c.ambient << ")\n";
    if (c.form) {
      os << "  invariant form: " << to_string(c.form->symmetry) << ", kernel dim " << c.form->kernel_dim
         << ", symmetric fraction " << c.form->symmetric_fraction << "\n";
    }
    if (!c.note.empty()) os << "  note: " << c.note << "\n";
  }
  if (r.criteria && config.sections.criteria) {
    const auto& c = *r.criteria;
    os << "criteria conclusion: " << to_string(c.conclusion) << "\n";
    auto verdict = [&](const TheoremVerdict& v) {
      os << "  " << v.id << ": " << (v.applies ? "applies" : "does not apply") << " -> "
         << to_string(v.conclusion) << "\n";
      for (const auto& n : v.notes) os << "    - " << n << "\n";
      if (config.sections.descents && v.witness) {
        os << "    witness " << v.witness->procedure << ": predicted " << v.witness->final_predicted
           << ", measured " << v.witness->final_measured << ", relative error "
           << v.witness->relative_error << "\n";
      }
    };
    verdict(c.theorem1.verdict);
    for (const auto& v : c.suite) verdict(v);
    if (c.sigma) {
      os << "  sigma (" << to_string(c.sigma->direction) << "): tilde_e = [" << join(c.sigma->tilde_e)
         << "], tilde_d = [" << join(c.sigma->tilde_d) << "]\n";
    }
    if (c.omega_v) {
      os << "  omega = [" << join(c.omega_v->omega) << "], v = [" << join(c.omega_v->v) << "], M = {";
      for (std::size_t i = 0; i < c.omega_v->set_m.size(); ++i) os << (i ? ", " : "") << c.omega_v->set_m[i];
      os << "}\n";
    }
    for (const auto& n : c.notes) os << "  note: " << n << "\n";
  }
  if (r.table) {
    os << "table " << to_string(r.table->family()) << " rank " << r.table->rank() << ":";
    for (const auto& e : r.table->elements()) os << " " << e.label.str();
    os << "\n";
  }
  return os.str();
}

std::string table_json(const GeneratorTable& table) {
  return table_elements_json(table, true).dump(2) + "\n";
}

void emit_tables(Family family, int rank, const std::filesystem::path& path) {
  const std::string text = table_json(make_table(family, rank));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace dynlie
