#include "divtower/codefile.hpp"

#include <cctype>
#include <sstream>

namespace divtower {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::uint64_t parse_uint(const std::string& s, std::size_t line, const std::string& what) {
  if (s.empty()) throw ParseError(line, what + " is empty");
  std::uint64_t value = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9')
      throw ParseError(line, what + " has a non-digit character '" + std::string(1, ch) + "'");
    if (value > (UINT64_MAX - static_cast<std::uint64_t>(ch - '0')) / 10)
      throw ParseError(line, what + " is too large");
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return value;
}

Bits parse_bit_row(const std::string& s, std::size_t line, std::size_t n) {
  if (s.size() != n)
    throw ParseError(line, "row has " + std::to_string(s.size()) + " entries, expected " +
                               std::to_string(n));
  Bits row(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (s[c] == '1')
      row[c] = 1;
    else if (s[c] != '0')
      throw ParseError(line, "row contains '" + std::string(1, s[c]) + "', expected 0 or 1");
  }
  return row;
}

}  // namespace

CodeFile parse_codefile(const std::string& text) {
  CodeFile file;
  bool have_n = false, have_nu = false, have_l = false, have_s = false;
  std::vector<Bits> l_rows, s_rows;
  enum class Section { header, logical, stab } section = Section::header;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (line == "L:") {
      if (!have_n || !have_nu) throw ParseError(lineno, "L: before n= and nu= are set");
      if (have_l) throw ParseError(lineno, "duplicate L: section");
      have_l = true;
      section = Section::logical;
      continue;
    }
    if (line == "S:") {
      if (!have_l) throw ParseError(lineno, "S: before the L: section");
      if (have_s) throw ParseError(lineno, "duplicate S: section");
      have_s = true;
      section = Section::stab;
      continue;
    }
    switch (section) {
      case Section::header: {
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, "expected n=, nu=, t=, or a section marker");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key == "n") {
          if (have_n) throw ParseError(lineno, "duplicate n=");
          file.n = static_cast<std::size_t>(parse_uint(value, lineno, "n"));
          have_n = true;
        } else if (key == "nu") {
          if (have_nu) throw ParseError(lineno, "duplicate nu=");
          const std::uint64_t nu = parse_uint(value, lineno, "nu");
          if (nu < 2 || nu > 61)
            throw ParseError(lineno, "nu must be between 2 and 61, got " + value);
          file.nu = static_cast<unsigned>(nu);
          have_nu = true;
        } else if (key == "t") {
          if (file.t) throw ParseError(lineno, "duplicate t=");
          std::vector<std::uint64_t> t;
          std::istringstream parts(value);
          std::string token;
          while (parts >> token)
            t.push_back(parse_uint(token, lineno, "t entry " + std::to_string(t.size() + 1)));
          for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] % 2 == 0)
              throw ParseError(lineno, "t entry " + std::to_string(i + 1) + " is even (" +
                                           std::to_string(t[i]) + "); coefficients must be odd");
          file.t = std::move(t);
        } else {
          throw ParseError(lineno, "unknown key '" + key + "'");
        }
        break;
      }
      case Section::logical:
        l_rows.push_back(parse_bit_row(line, lineno, file.n));
        break;
      case Section::stab:
        s_rows.push_back(parse_bit_row(line, lineno, file.n));
        break;
    }
  }
  ++lineno;
  if (!have_n) throw ParseError(lineno, "missing n=");
  if (!have_nu) throw ParseError(lineno, "missing nu=");
  if (!have_l) throw ParseError(lineno, "missing L: section");
  if (!have_s) throw ParseError(lineno, "missing S: section");
  if (file.t && file.t->size() != file.n)
    throw ParseError(lineno, "t has " + std::to_string(file.t->size()) + " entries, expected " +
                                 std::to_string(file.n));
  file.logical = l_rows.empty() ? BitMatrix(0, file.n) : BitMatrix::from_rows(l_rows);
  file.stab = s_rows.empty() ? BitMatrix(0, file.n) : BitMatrix::from_rows(s_rows);
  return file;
}

std::string serialize_codefile(const CodeFile& file) {
  std::ostringstream out;
  out << "n=" << file.n << "\n";
  out << "nu=" << file.nu << "\n";
  if (file.t) {
    out << "t=";
    for (std::uint64_t v : *file.t) out << " " << v;
    out << "\n";
  }
  out << "L:\n";
  for (std::size_t r = 0; r < file.logical.rows(); ++r) {
    for (std::size_t c = 0; c < file.logical.cols(); ++c)
      out << (file.logical.get(r, c) ? '1' : '0');
    out << "\n";
  }
  out << "S:\n";
  for (std::size_t r = 0; r < file.stab.rows(); ++r) {
    for (std::size_t c = 0; c < file.stab.cols(); ++c) out << (file.stab.get(r, c) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

CodeFile to_codefile(const OrthoPair& pair) {
  CodeFile file;
  file.n = pair.coeff.t.size();
  file.nu = pair.coeff.nu;
  file.t = pair.coeff.t;
  file.logical = pair.logical;
  file.stab = pair.stab;
  return file;
}

OrthoPair to_pair(const CodeFile& file) {
  if (!file.t)
    throw std::invalid_argument("code file carries no coefficient vector (t= line)");
  return {file.logical, file.stab, make_coeff_vector(*file.t, file.nu)};
}

BitMatrix parse_matrix_text(const std::string& text, std::size_t line_offset) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = line_offset;
  std::vector<Bits> rows;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) {
      if (!rows.empty()) break;
      continue;
    }
    if (rows.empty()) n = line.size();
    rows.push_back(parse_bit_row(line, lineno, n));
  }
  return rows.empty() ? BitMatrix(0, 0) : BitMatrix::from_rows(rows);
}

}  // namespace divtower
