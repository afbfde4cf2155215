#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graphpredict::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  // 1-based source line of each row

  // Index of the column, or -1.
  int column(std::string_view name) const;
};

// RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF line ends.
// A row whose field count differs from the header raises ParseError with
// its line number. Blank lines are skipped.
Table parse(std::string_view text);
Table read_file(const std::string& path);

std::string escape(std::string_view field);
std::string format_row(const std::vector<std::string>& fields);

// Reads a whole file; FileError when it cannot be opened.
std::string slurp(const std::string& path);
// Writes text, creating parent directories; FileError on failure.
void write_text(const std::string& path, std::string_view text);

}  // namespace graphpredict::csv
