// dynlie: classify driven N-level systems and export generator tables.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dynlie/error.hpp"
#include "dynlie/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

int fail(const dynlie::Error& e) {
  std::cerr << "dynlie: " << dynlie::to_string(e.code()) << ": " << e.what() << "\n";
  return dynlie::is_input_error(e.code()) ? kExitInput : kExitNumeric;
}

bool apply_sections(const std::vector<std::string>& names, dynlie::Sections& s) {
  if (names.empty()) return true;
  s = {false, false, false, false};
  for (const auto& n : names) {
    if (n == "closure") s.closure = true;
    else if (n == "criteria") s.criteria = true;
    else if (n == "descents") s.descents = true;
    else if (n == "tables") s.tables = true;
    else return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical Lie algebra of driven N-level systems"};
  app.require_subcommand(1);

  dynlie::RunConfig config;
  std::vector<std::string> inputs;
  std::string format = "json";
  std::vector<std::string> sections;
  double tolerance = 0.0;
  std::size_t max_dim = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance, "Numerical tolerance (overrides the input file)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--full", config.full, "Include matrices in the report");
    sub->add_option("--sections", sections, "Report sections: closure,criteria,descents,tables")
        ->delimiter(',');
  };

  auto* classify = app.add_subcommand("classify", "Close the algebra and classify it");
  classify->add_option("files", inputs, "System JSON files")->required();
  classify->add_option("--max-dim", max_dim, "Stop the closure at this dimension")
      ->check(CLI::PositiveNumber);
  add_common(classify);

  auto* check = app.add_subcommand("check", "Evaluate the criteria without computing the closure");
  check->add_option("file", inputs, "System JSON file")->required()->expected(1);
  add_common(check);

  std::string family;
  int rank = 0;
  std::string output;
  auto* tables = app.add_subcommand("tables", "Export a generator table as JSON");
  tables->add_option("family", family, "SU, SO_ODD, SP or SO_EVEN")->required();
  tables->add_option("rank", rank, "N for SU, l otherwise")->required();
  tables->add_option("-o,--output", output, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tables) {
      const auto fam = dynlie::parse_family(family);
      if (output.empty()) {
        std::cout << dynlie::table_json(dynlie::make_table(fam, rank));
      } else {
        dynlie::emit_tables(fam, rank, output);
      }
      return kExitOk;
    }

    if (!apply_sections(sections, config.sections)) {
      std::cerr << "dynlie: unknown section name\n";
      return kExitUsage;
    }
    config.format = format == "text" ? dynlie::ReportFormat::Text : dynlie::ReportFormat::Json;
    if (tolerance > 0.0) config.tolerance = tolerance;
    if (max_dim > 0) config.max_dim = max_dim;
    config.inputs.assign(inputs.begin(), inputs.end());
    config.validate();

    std::vector<dynlie::Report> reports;
    for (const auto& path : config.inputs) {
      const auto spec = dynlie::parse_system_file(path);
      try {
        auto r = *check ? dynlie::run_check(spec, config) : dynlie::run_pipeline(spec, config);
        r.source = path.string();
        reports.push_back(std::move(r));
      } catch (const dynlie::Error& e) {
        throw dynlie::Error(e.code(), path.string() + ": " + e.what());
      }
    }

    if (config.format == dynlie::ReportFormat::Text) {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << dynlie::report_text(reports[i], config);
      }
    } else if (reports.size() == 1) {
      std::cout << dynlie::report_json(reports.front(), config);
    } else {
      std::cout << dynlie::reports_json(reports, config);
    }
    return kExitOk;
  } catch (const dynlie::Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << "dynlie: " << e.what() << "\n";
    return kExitNumeric;
  }
}
