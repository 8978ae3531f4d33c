#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace transit {

// A parsed CSV file: header plus data rows, each row remembering the
// physical line it started on so diagnostics can point at it.
struct CsvTable {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;

  std::optional<std::size_t> find_column(std::string_view name) const;
  // Throws InputError(MissingColumn).
  std::size_t column(std::string_view name) const;
};

// RFC 4180 reader: quoted fields may hold commas, doubled quotes and line
// breaks; LF and CRLF both end a record; a leading UTF-8 BOM is dropped;
// blank lines are skipped. A row whose field count differs from the header
// raises BadValue. An input with no header row raises MissingColumn.
CsvTable read_csv(std::istream& in, std::string source);
CsvTable read_csv_file(const std::filesystem::path& path);

// Writes one LF-terminated record, quoting only fields that need it.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace transit
