#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fdrctl/procedures.hpp"
#include "fdrctl/simulation.hpp"

namespace fdrctl {

inline constexpr std::string_view kToolName = "fdrctl";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

/// Writes `doc` as indented JSON, with every floating-point number in
/// shortest round-trip form and keys in insertion order.
void write_json(std::ostream& out, const nlohmann::ordered_json& doc);

struct InputEcho {
  std::string path;
  std::string format;
  std::optional<std::string> column;
};

struct ProcedureReport {
  Procedure procedure{};
  AdjustedPValues adjusted;
  std::optional<RejectionSet> rejections;  // absent for adjust-only reports
  std::optional<double> level;
};

/// One report per procedure over the same input; `level` absent for adjust.
nlohmann::ordered_json report_document(std::string_view command, const InputEcho& input,
                                       const PValueVector& p, std::optional<double> level,
                                       const std::vector<ProcedureReport>& reports);

void write_report_tsv(std::ostream& out, const PValueVector& p,
                      const std::vector<ProcedureReport>& reports);

nlohmann::ordered_json config_json(const SimConfig& config);
nlohmann::ordered_json study_document(const StudyResult& result);
nlohmann::ordered_json sweep_document(const SweepResult& result);

/// Long-form table: axis_value, procedure, fdr, se_fdr, fwer, se_fwer, pcer,
/// se_pcer, power, se_power. Absent power prints as NA.
void write_study_tsv(std::ostream& out, const StudyResult& result);
void write_sweep_tsv(std::ostream& out, const SweepResult& result);

}  // namespace fdrctl
