#include "fdrctl/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

#include "fdrctl/error.hpp"

namespace fdrctl {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_record(std::string_view line, InputFormat format) {
  std::vector<std::string> fields;
  if (format == InputFormat::Lines) {
    fields.emplace_back(trim(line));
    return fields;
  }
  const char delim = format == InputFormat::Csv ? ',' : '\t';
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else {
        quoted = !quoted;
      }
    } else if (c == delim && !quoted) {
      fields.emplace_back(trim(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.emplace_back(trim(field));
  return fields;
}

std::optional<double> parse_number(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return index;
}

}  // namespace

std::string_view to_string(InputFormat format) noexcept {
  switch (format) {
    case InputFormat::Lines: return "lines";
    case InputFormat::Csv: return "csv";
    case InputFormat::Tsv: return "tsv";
  }
  return "unknown";
}

InputFormat parse_input_format(std::string_view name) {
  for (const InputFormat f : {InputFormat::Lines, InputFormat::Csv, InputFormat::Tsv}) {
    if (to_string(f) == name) return f;
  }
  throw Error(Errc::ParseError, "unknown input format '" + std::string(name) + "'");
}

InputFormat infer_input_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".csv") return InputFormat::Csv;
  if (ext == ".tsv" || ext == ".tab") return InputFormat::Tsv;
  return InputFormat::Lines;
}

PValueVector parse_pvalues(std::istream& in, InputFormat format,
                           const std::optional<std::string>& column) {
  std::optional<std::size_t> field_index;
  std::optional<std::string> field_name;
  if (format != InputFormat::Lines) {
    if (column) {
      field_index = parse_index(*column);
      if (!field_index) field_name = *column;
    } else {
      field_index = 0;
    }
  } else {
    field_index = 0;
  }

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_record(line, format);

    if (first_record) {
      first_record = false;
      if (field_name) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (fields[i] == *field_name) field_index = i;
        }
        if (!field_index) {
          throw Error(Errc::ParseError,
                      "line " + std::to_string(line_no) + ": no column named '" + *field_name + "'",
                      line_no);
        }
        continue;
      }
      if (*field_index < fields.size() && !parse_number(fields[*field_index])) {
        continue;  // header
      }
    }

    if (*field_index >= fields.size()) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": missing column " +
                      std::to_string(*field_index) + " in '" + line + "'",
                  line_no);
    }
    const std::string& text = fields[*field_index];
    const auto value = parse_number(text);
    if (!value) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": not a number: '" + text + "'", line_no);
    }
    if (!std::isfinite(*value) || *value < 0.0 || *value > 1.0) {
      throw Error(Errc::OutOfRange,
                  "line " + std::to_string(line_no) + ": p-value " + text + " outside [0, 1]",
                  line_no);
    }
    values.push_back(*value);
  }
  if (values.empty()) {
    throw Error(Errc::EmptyInput, "no p-values found");
  }
  return PValueVector(std::move(values));
}

PValueVector parse_pvalue_file(const std::filesystem::path& path, InputFormat format,
                               const std::optional<std::string>& column) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::FileNotFound, "cannot open '" + path.string() + "'");
  }
  return parse_pvalues(in, format, column);
}

}  // namespace fdrctl
