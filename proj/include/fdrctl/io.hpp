#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "fdrctl/pvalues.hpp"

namespace fdrctl {

enum class InputFormat { Lines, Csv, Tsv };

std::string_view to_string(InputFormat format) noexcept;

/// Accepts lines, csv, tsv. Throws Error{ParseError}.
InputFormat parse_input_format(std::string_view name);

/// csv/tsv by extension, otherwise lines.
InputFormat infer_input_format(const std::filesystem::path& path);

/// Reads one p-value per record. For csv/tsv, `column` selects a field by
/// header name or by 0-based index (default: first field). A first record
/// whose selected field is not numeric is taken as a header. Blank lines are
/// skipped. Error positions are 1-based line numbers.
///
/// Throws Error{ParseError | OutOfRange | EmptyInput}.
PValueVector parse_pvalues(std::istream& in, InputFormat format,
                           const std::optional<std::string>& column = std::nullopt);

/// Throws Error{FileNotFound} in addition to the parse errors.
PValueVector parse_pvalue_file(const std::filesystem::path& path, InputFormat format,
                               const std::optional<std::string>& column = std::nullopt);

}  // namespace fdrctl
