#include "fdrctl/report.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fdrctl {

using nlohmann::ordered_json;

std::string format_double(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Infinity" : "-Infinity";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

namespace {

void write_value(std::ostream& out, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << ordered_json(key).dump() << ": ";
        write_value(out, value, indent + 2);
      }
      out << '\n' << close << '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write_value(out, value, indent + 2);
      }
      out << '\n' << close << ']';
      return;
    }
    case ordered_json::value_t::number_float: {
      const double x = j.get<double>();
      out << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      out << j.dump();
      return;
  }
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : "NA";
}

ordered_json rates_json(Procedure procedure, const RateEstimates& r) {
  ordered_json j;
  j["procedure"] = to_string(procedure);
  j["fdr"] = r.fdr;
  j["se_fdr"] = r.se_fdr;
  j["fwer"] = r.fwer;
  j["se_fwer"] = r.se_fwer;
  j["pcer"] = r.pcer;
  j["se_pcer"] = r.se_pcer;
  j["power"] = optional_number(r.power);
  j["se_power"] = optional_number(r.se_power);
  j["replicates"] = r.n_replicates;
  j["power_replicates"] = r.n_power_replicates;
  return j;
}

void write_rates_row(std::ostream& out, Procedure procedure, const RateEstimates& r) {
  out << to_string(procedure) << '\t' << format_double(r.fdr) << '\t' << format_double(r.se_fdr)
      << '\t' << format_double(r.fwer) << '\t' << format_double(r.se_fwer) << '\t'
      << format_double(r.pcer) << '\t' << format_double(r.se_pcer) << '\t'
      << optional_cell(r.power) << '\t' << optional_cell(r.se_power) << '\n';
}

constexpr std::string_view kRateColumns =
    "procedure\tfdr\tse_fdr\tfwer\tse_fwer\tpcer\tse_pcer\tpower\tse_power";

}  // namespace

void write_json(std::ostream& out, const ordered_json& doc) {
  write_value(out, doc, 0);
  out << '\n';
}

ordered_json report_document(std::string_view command, const InputEcho& input,
                             const PValueVector& p, std::optional<double> level,
                             const std::vector<ProcedureReport>& reports) {
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["input"] = {{"path", input.path},
                  {"format", input.format},
                  {"column", input.column ? ordered_json(*input.column) : ordered_json(nullptr)},
                  {"m", p.size()}};
  if (level) {
    doc["level"] = *level;
  }
  doc["reports"] = ordered_json::array();
  for (const auto& report : reports) {
    ordered_json r;
    r["procedure"] = to_string(report.procedure);
    if (report.rejections) {
      const RejectionSet& rs = *report.rejections;
      r["level"] = optional_number(report.level);
      r["cutoff_rank"] = rs.cutoff_rank;
      r["cutoff_threshold"] = optional_number(rs.cutoff_threshold);
      r["rejections"] = rs.count();
    }
    r["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
      ordered_json row;
      row["index"] = i;
      row["p"] = p[i];
      row["adjusted"] = report.adjusted.values[i];
      if (report.rejections) {
        row["rejected"] = static_cast<bool>(report.rejections->rejected[i]);
      }
      r["rows"].push_back(std::move(row));
    }
    doc["reports"].push_back(std::move(r));
  }
  return doc;
}

void write_report_tsv(std::ostream& out, const PValueVector& p,
                      const std::vector<ProcedureReport>& reports) {
  const bool with_flags = !reports.empty() && reports.front().rejections.has_value();
  out << "procedure\tindex\tp\tadjusted" << (with_flags ? "\trejected" : "") << '\n';
  for (const auto& report : reports) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << to_string(report.procedure) << '\t' << i << '\t' << format_double(p[i]) << '\t'
          << format_double(report.adjusted.values[i]);
      if (with_flags) {
        out << '\t' << (report.rejections->rejected[i] ? "true" : "false");
      }
      out << '\n';
    }
  }
}

ordered_json config_json(const SimConfig& config) {
  ordered_json j;
  j["m"] = config.m;
  j["m0"] = config.m0;
  j["effect"] = config.effect;
  j["level"] = config.level;
  j["replicates"] = config.n_replicates;
  j["seed"] = config.seed;
  j["procedures"] = ordered_json::array();
  for (const Procedure p : config.procedures) {
    j["procedures"].push_back(to_string(p));
  }
  return j;
}

ordered_json study_document(const StudyResult& result) {
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = "simulate";
  doc["config"] = config_json(result.config);
  doc["total_replicates"] = result.total_replicates;
  doc["results"] = ordered_json::array();
  for (const auto& entry : result.rates) {
    doc["results"].push_back(rates_json(entry.procedure, entry.rates));
  }
  return doc;
}

ordered_json sweep_document(const SweepResult& result) {
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = "sweep";
  doc["axis"] = to_string(result.axis);
  doc["points"] = ordered_json::array();
  for (const auto& point : result.points) {
    ordered_json j;
    j["axis_value"] = point.value;
    j["config"] = config_json(point.result.config);
    j["results"] = ordered_json::array();
    for (const auto& entry : point.result.rates) {
      j["results"].push_back(rates_json(entry.procedure, entry.rates));
    }
    doc["points"].push_back(std::move(j));
  }
  return doc;
}

void write_study_tsv(std::ostream& out, const StudyResult& result) {
  out << kRateColumns << '\n';
  for (const auto& entry : result.rates) {
    write_rates_row(out, entry.procedure, entry.rates);
  }
}

void write_sweep_tsv(std::ostream& out, const SweepResult& result) {
  out << "axis_value\t" << kRateColumns << '\n';
  for (const auto& point : result.points) {
    for (const auto& entry : point.result.rates) {
      out << format_double(point.value) << '\t';
      write_rates_row(out, entry.procedure, entry.rates);
    }
  }
}

}  // namespace fdrctl
