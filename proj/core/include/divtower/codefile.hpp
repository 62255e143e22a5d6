#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "divtower/bit_matrix.hpp"
#include "divtower/ortho.hpp"

namespace divtower {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// In-memory form of the code file format:
///   n=<int>
///   nu=<int>
///   t= <space-separated odd ints>      (optional)
///   L:
///   <bit rows>
///   S:
///   <bit rows>
/// Blank lines are ignored.  The logical block may be empty; so may the
/// stabilizer block.
struct CodeFile {
  std::size_t n = 0;
  unsigned nu = 2;
  std::optional<std::vector<std::uint64_t>> t;
  BitMatrix logical{0, 0};
  BitMatrix stab{0, 0};
};

/// Throws ParseError on malformed input (including even t entries, reported
/// with their position).
CodeFile parse_codefile(const std::string& text);

/// Canonical serialization; parse_codefile(serialize_codefile(f)) == f.
std::string serialize_codefile(const CodeFile& file);

CodeFile to_codefile(const OrthoPair& pair);

/// Throws std::invalid_argument when the file carries no coefficient vector.
OrthoPair to_pair(const CodeFile& file);

/// Reads one matrix in the plain text format: '0'/'1' rows, terminated by a
/// blank line or end of input.  `line_offset` shifts reported line numbers
/// when the text is embedded in a larger document.
BitMatrix parse_matrix_text(const std::string& text, std::size_t line_offset = 0);

}  // namespace divtower
