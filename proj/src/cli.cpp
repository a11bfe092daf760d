#include "fdrctl/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <optional>

#include "fdrctl/error.hpp"
#include "fdrctl/io.hpp"
#include "fdrctl/procedures.hpp"
#include "fdrctl/report.hpp"
#include "fdrctl/simulation.hpp"

namespace fdrctl {

namespace {

const CLI::Validator kOpenUnitInterval(
    [](std::string& text) -> std::string {
      double v = 0.0;
      try {
        std::size_t used = 0;
        v = std::stod(text, &used);
        if (used != text.size()) return "level must be a number";
      } catch (const std::exception&) {
        return "level must be a number";
      }
      if (!(v > 0.0 && v < 1.0)) return "level must lie strictly between 0 and 1";
      return {};
    },
    "(0,1)");

const CLI::Validator kProcedureName(
    [](std::string& text) -> std::string {
      if (text == "all") return {};
      try {
        parse_procedure(text);
      } catch (const Error& e) {
        return e.what();
      }
      return {};
    },
    "METHOD");

int threads_from_env() {
  const char* value = std::getenv("FDRCTL_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  char* end = nullptr;
  const long n = std::strtol(value, &end, 10);
  return (end != nullptr && *end == '\0' && n > 0) ? static_cast<int>(n) : 0;
}

std::vector<Procedure> expand_methods(const std::vector<std::string>& names) {
  std::vector<Procedure> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.assign(kAllProcedures.begin(), kAllProcedures.end());
      return out;
    }
    out.push_back(parse_procedure(name));
  }
  return out;
}

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::InvalidConfig:
    case Errc::InvalidLevel:
    case Errc::TooFewReplicates:
    case Errc::InvalidAxis:
    case Errc::UnknownMethod:
      return true;
    default:
      return false;
  }
}

struct InputOptions {
  std::string path;
  std::string input_format = "auto";
  std::optional<std::string> column;
};

void add_input_options(CLI::App& cmd, InputOptions& opts) {
  cmd.add_option("input", opts.path, "p-value file")->required();
  cmd.add_option("--input-format", opts.input_format, "lines, csv, tsv or auto (by extension)")
      ->check(CLI::IsMember({"auto", "lines", "csv", "tsv"}));
  cmd.add_option("--column", opts.column, "csv/tsv column: header name or 0-based index");
}

struct LoadedInput {
  PValueVector p;
  InputEcho echo;
};

LoadedInput load_input(const InputOptions& opts) {
  const InputFormat format = opts.input_format == "auto" ? infer_input_format(opts.path)
                                                         : parse_input_format(opts.input_format);
  return {parse_pvalue_file(opts.path, format, opts.column),
          InputEcho{opts.path, std::string(to_string(format)), opts.column}};
}

struct StudyOptions {
  SimConfig config;
  std::vector<std::string> procedures{"all"};
  std::string format = "json";
};

void add_study_options(CLI::App& cmd, StudyOptions& opts) {
  cmd.add_option("--m", opts.config.m, "number of hypotheses")->capture_default_str();
  cmd.add_option("--m0", opts.config.m0, "number of true nulls")->capture_default_str();
  cmd.add_option("--effect", opts.config.effect, "mean shift of false-null statistics")
      ->capture_default_str();
  cmd.add_option("--level", opts.config.level, "FWER level alpha / FDR level q")
      ->check(kOpenUnitInterval)
      ->capture_default_str();
  cmd.add_option("--replicates", opts.config.n_replicates, "Monte Carlo replicates")
      ->capture_default_str();
  cmd.add_option("--seed", opts.config.seed, "random seed")->capture_default_str();
  cmd.add_option("--procedures", opts.procedures, "comma-separated methods or 'all'")
      ->delimiter(',')
      ->check(kProcedureName);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"False discovery rate and family-wise error rate procedures", "fdrctl"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  // reject
  InputOptions reject_input;
  std::vector<std::string> reject_methods{"bh"};
  double reject_level = 0.05;
  std::string reject_format = "json";
  auto* reject_cmd = app.add_subcommand("reject", "apply rejection procedures to a p-value file");
  add_input_options(*reject_cmd, reject_input);
  reject_cmd->add_option("--method", reject_methods, "method, comma list, or 'all'")
      ->delimiter(',')
      ->check(kProcedureName);
  reject_cmd->add_option("--level", reject_level, "significance level")
      ->check(kOpenUnitInterval)
      ->capture_default_str();
  reject_cmd->add_option("--format", reject_format)->check(CLI::IsMember({"json", "tsv"}));

  // adjust
  InputOptions adjust_input;
  std::vector<std::string> adjust_methods{"bh"};
  std::string adjust_format = "json";
  auto* adjust_cmd = app.add_subcommand("adjust", "adjusted p-values for a p-value file");
  add_input_options(*adjust_cmd, adjust_input);
  adjust_cmd->add_option("--method", adjust_methods, "method, comma list, or 'all'")
      ->delimiter(',')
      ->check(kProcedureName);
  adjust_cmd->add_option("--format", adjust_format)->check(CLI::IsMember({"json", "tsv"}));

  // simulate
  StudyOptions sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo error-rate and power study");
  add_study_options(*simulate_cmd, sim);
  simulate_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"json", "tsv"}));

  // sweep
  StudyOptions swp;
  swp.format = "tsv";
  std::string axis_name;
  std::vector<double> axis_values;
  auto* sweep_cmd = app.add_subcommand("sweep", "repeat the study across one parameter");
  add_study_options(*sweep_cmd, swp);
  sweep_cmd->add_option("--axis", axis_name, "m, m0_fraction or level")
      ->required()
      ->check(CLI::IsMember({"m", "m0_fraction", "level"}));
  sweep_cmd->add_option("--values", axis_values, "comma-separated, strictly increasing")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--format", swp.format)->check(CLI::IsMember({"json", "tsv"}));

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("fdrctl");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    const int threads = threads_from_env();
    if (reject_cmd->parsed()) {
      const LoadedInput in = load_input(reject_input);
      const SignificanceLevel level(reject_level);
      std::vector<ProcedureReport> reports;
      for (const Procedure proc : expand_methods(reject_methods)) {
        reports.push_back({proc, adjust(in.p, proc), reject(in.p, proc, level), reject_level});
      }
      if (reject_format == "tsv") {
        write_report_tsv(out, in.p, reports);
      } else {
        write_json(out, report_document("reject", in.echo, in.p, reject_level, reports));
      }
    } else if (adjust_cmd->parsed()) {
      const LoadedInput in = load_input(adjust_input);
      std::vector<ProcedureReport> reports;
      for (const Procedure proc : expand_methods(adjust_methods)) {
        reports.push_back({proc, adjust(in.p, proc), std::nullopt, std::nullopt});
      }
      if (adjust_format == "tsv") {
        write_report_tsv(out, in.p, reports);
      } else {
        write_json(out, report_document("adjust", in.echo, in.p, std::nullopt, reports));
      }
    } else if (simulate_cmd->parsed()) {
      sim.config.procedures = expand_methods(sim.procedures);
      const StudyResult result = run_study(sim.config, threads);
      if (sim.format == "tsv") {
        write_study_tsv(out, result);
      } else {
        write_json(out, study_document(result));
      }
    } else if (sweep_cmd->parsed()) {
      swp.config.procedures = expand_methods(swp.procedures);
      validate(swp.config);
      const SweepResult result = sweep(swp.config, parse_axis(axis_name), axis_values, threads);
      if (swp.format == "tsv") {
        write_sweep_tsv(out, result);
      } else {
        write_json(out, sweep_document(result));
      }
    }
  } catch (const Error& e) {
    err << "fdrctl: " << to_string(e.code()) << ": " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsageError : kExitDataError;
  }
  return kExitOk;
}

}  // namespace fdrctl
