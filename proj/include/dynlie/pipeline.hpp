#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynlie/classifier.hpp"
#include "dynlie/criteria.hpp"
#include "dynlie/hamiltonian.hpp"
#include "dynlie/tables.hpp"

namespace dynlie {

enum class ReportFormat { Json, Text };

struct Sections {
  bool closure = true;
  bool criteria = true;
  bool descents = true;
  bool tables = false;
};

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  /// Replaces the tolerance given in the input file.
  std::optional<double> tolerance;
  std::optional<std::size_t> max_dim;
  ReportFormat format = ReportFormat::Json;
  Sections sections;
  /// Include matrices in the report.
  bool full = false;

  void validate() const;
};

struct ClosureSummary {
  std::size_t dim = 0;
  bool converged = false;
  bool reached_max_dim = false;
  std::size_t brackets_evaluated = 0;
  std::vector<ComplexMatrix> basis;
};

struct Report {
  std::string source;
  SystemSpec spec;
  bool symmetric = false;
  std::vector<double> gaps;
  std::vector<std::size_t> zero_dipoles;
  std::optional<ClosureSummary> closure;
  std::optional<Classification> classification;
  std::optional<CriteriaReport> criteria;
  /// Table matching the ambient parity, for symmetric systems.
  std::optional<GeneratorTable> table;
};

SystemSpec parse_system_json(std::string_view text);
SystemSpec parse_system_file(const std::filesystem::path& path);
/// Inverse of parse_system_json for numeric dipoles.
std::string system_to_json(const SystemSpec& spec);

Report run_pipeline(const SystemSpec& spec, const RunConfig& config);
/// Criteria only; no closure and no classification.
Report run_check(const SystemSpec& spec, const RunConfig& config);

std::string report_json(const Report& report, const RunConfig& config);
std::string reports_json(std::span<const Report> reports, const RunConfig& config);
std::string report_text(const Report& report, const RunConfig& config);

std::string table_json(const GeneratorTable& table);
void emit_tables(Family family, int rank, const std::filesystem::path& path);

}  // namespace dynlie
