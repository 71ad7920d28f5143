#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "proms/cnf.hpp"

namespace proms {

/// Parse failure with the 1-based input line it was detected on
/// (0 when detected at end of input).
class DimacsError : public std::runtime_error {
 public:
  DimacsError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads DIMACS CNF: `c` comment lines anywhere, one `p cnf <n> <m>` header,
/// then zero-terminated clauses that may span lines. A line starting with
/// `%` ends the clause section. Weighted (`p wcnf`) input is rejected.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(std::string_view text);
Formula read_dimacs_file(const std::filesystem::path& path);

/// One clause per line, literals in stored order.
std::string to_dimacs(const Formula& f);

}  // namespace proms
