#pragma once

// Tabular export of P-pair lists: `n,a_n,b_n` with a header line.

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wythoff/game.hpp"

namespace wythoff {

class CsvFormatError : public std::runtime_error {
 public:
  CsvFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("csv line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::string_view kCsvHeader = "n,a_n,b_n";

inline void write_csv(std::ostream& out, const PposSequence& s) {
  out << kCsvHeader << '\n';
  for (std::size_t n = 0; n < s.size(); ++n) out << n << ',' << s[n].a << ',' << s[n].b << '\n';
}

inline std::string to_csv(const PposSequence& s) {
  std::ostringstream out;
  write_csv(out, s);
  return out.str();
}

namespace detail {

inline nat parse_field(std::string_view f, std::size_t line) {
  nat v = 0;
  const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc{} || end != f.data() + f.size() || f.empty())
    throw CsvFormatError(line, "not a natural number: '" + std::string(f) + "'");
  return v;
}

}  // namespace detail

/// Reads what write_csv produces. The file carries no terminal threshold,
/// so `ell` is supplied by the caller.
inline PposSequence read_csv(std::istream& in, nat ell = 0) {
  PposSequence s;
  s.ell = ell;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != kCsvHeader) throw CsvFormatError(lineno, "expected header '" + std::string(kCsvHeader) + "'");
      header = true;
      continue;
    }
    std::string_view v(line);
    const auto c1 = v.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : v.find(',', c1 + 1);
    if (c2 == std::string_view::npos || v.find(',', c2 + 1) != std::string_view::npos)
      throw CsvFormatError(lineno, "expected three fields");
    const nat n = detail::parse_field(v.substr(0, c1), lineno);
    if (n != s.size()) throw CsvFormatError(lineno, "index out of sequence");
    s.pairs.push_back({detail::parse_field(v.substr(c1 + 1, c2 - c1 - 1), lineno),
                       detail::parse_field(v.substr(c2 + 1), lineno)});
  }
  if (!header) throw CsvFormatError(lineno, "missing header");
  return s;
}

inline PposSequence read_csv(const std::string& text, nat ell = 0) {
  std::istringstream in(text);
  return read_csv(in, ell);
}

inline void save_csv(const PposSequence& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  write_csv(out, s);
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

inline PposSequence load_csv(const std::string& path, nat ell = 0) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_csv(in, ell);
}

}  // namespace wythoff
