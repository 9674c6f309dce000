#pragma once

// Walnut word-automaton text format for Fibonacci DFAOs:
//
//   msd_fib
//
//   0 1
//   0 -> 0
//   1 -> 1
//
//   1 0
//   0 -> 2
//   ...
//
// State 0 is initial. The canonical form written by `to_walnut` has one
// blank line before each state block and transitions sorted by digit.

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wythoff/morphism.hpp"

namespace wythoff {

class WalnutFormatError : public std::runtime_error {
 public:
  WalnutFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("walnut format, line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline std::string to_walnut(const Dfao& d) {
  std::ostringstream os;
  os << "msd_fib\n";
  for (std::size_t s = 0; s < d.size(); ++s) {
    os << "\n" << s << " " << d.outputs[s] << "\n";
    for (int digit = 0; digit < 2; ++digit)
      if (const auto& t = d.transitions[s][digit]) os << digit << " -> " << *t << "\n";
  }
  return os.str();
}

inline Dfao from_walnut(std::istream& in) {
  Dfao d;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  long current = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!header) {
      if (first != "msd_fib") throw WalnutFormatError(lineno, "expected 'msd_fib', got '" + first + "'");
      header = true;
      continue;
    }
    std::string second;
    if (!(ls >> second)) throw WalnutFormatError(lineno, "incomplete line");
    if (second == "->") {
      if (current < 0) throw WalnutFormatError(lineno, "transition before any state");
      std::string target;
      if (!(ls >> target)) throw WalnutFormatError(lineno, "missing transition target");
      if (first != "0" && first != "1") throw WalnutFormatError(lineno, "digit must be 0 or 1");
      const int digit = first[0] - '0';
      std::size_t target_id = 0;
      try {
        target_id = std::stoul(target);
      } catch (const std::exception&) {
        throw WalnutFormatError(lineno, "bad target state '" + target + "'");
      }
      auto& slot = d.transitions[static_cast<std::size_t>(current)][digit];
      if (slot) throw WalnutFormatError(lineno, "duplicate transition");
      slot = static_cast<Letter>(target_id);
    } else {
      long id = 0;
      int out = 0;
      try {
        id = std::stol(first);
        out = std::stoi(second);
      } catch (const std::exception&) {
        throw WalnutFormatError(lineno, "expected '<state> <output>'");
      }
      if (id != static_cast<long>(d.size())) throw WalnutFormatError(lineno, "states must be listed in order 0, 1, ...");
      current = id;
      d.outputs.push_back(out);
      d.transitions.emplace_back();
    }
    std::string extra;
    if (ls >> extra) throw WalnutFormatError(lineno, "trailing token '" + extra + "'");
  }
  if (!header) throw WalnutFormatError(lineno, "missing 'msd_fib' header");
  if (d.size() == 0) throw WalnutFormatError(lineno, "no states");
  for (const auto& row : d.transitions)
    for (const auto& t : row)
      if (t && *t >= d.size()) throw WalnutFormatError(lineno, "transition to undeclared state " + std::to_string(*t));
  return d;
}

inline Dfao from_walnut(const std::string& text) {
  std::istringstream in(text);
  return from_walnut(in);
}

inline Dfao load_walnut(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return from_walnut(in);
}

inline void save_walnut(const Dfao& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << to_walnut(d);
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

}  // namespace wythoff
