#include "proms/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace proms {

namespace {

bool is_space(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\f' || ch == '\v';
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<long long> to_integer(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

DimacsError::DimacsError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? "dimacs: " + message
                                   : "dimacs line " + std::to_string(line) + ": " + message),
      line_(line) {}

Formula parse_dimacs(std::istream& in) {
  std::optional<long long> num_vars;
  long long num_clauses = 0;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;
  std::size_t clause_start_line = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const auto first = tokens.front();
    if (first.front() == 'c') continue;
    if (first.front() == '%') break;

    if (first == "p") {
      if (num_vars) throw DimacsError(line_no, "duplicate problem line");
      if (tokens.size() >= 2 && tokens[1] == "wcnf") {
        throw DimacsError(line_no, "weighted instances (p wcnf) are not supported");
      }
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      const auto n = to_integer(tokens[2]);
      const auto m = to_integer(tokens[3]);
      if (!n || !m || *n < 1 || *m < 0 ||
          *n > static_cast<long long>(std::numeric_limits<Var>::max() / 2) ||
          *m > static_cast<long long>(std::numeric_limits<ClauseId>::max() - 1)) {
        throw DimacsError(line_no, "malformed header counts");
      }
      num_vars = *n;
      num_clauses = *m;
      clauses.reserve(static_cast<std::size_t>(num_clauses));
      continue;
    }
    if (!num_vars) throw DimacsError(line_no, "clause data before 'p cnf' header");

    for (auto token : tokens) {
      const auto value = to_integer(token);
      if (!value) throw DimacsError(line_no, "invalid token '" + std::string(token) + "'");
      if (*value == 0) {
        if (current.empty()) throw DimacsError(line_no, "empty clause");
        if (static_cast<long long>(clauses.size()) == num_clauses) {
          throw DimacsError(line_no, "more clauses than declared in header (" +
                                         std::to_string(num_clauses) + ")");
        }
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (*value > *num_vars || *value < -*num_vars) {
        throw DimacsError(line_no, "literal " + std::string(token) + " out of range");
      }
      if (current.empty()) clause_start_line = line_no;
      const Literal lit = Literal::from_dimacs(*value);
      for (Literal seen : current) {
        if (seen.var() == lit.var()) {
          throw DimacsError(line_no, seen == lit ? "duplicate literal " + std::string(token)
                                                 : "tautological clause on variable " +
                                                       std::to_string(lit.var() + 1));
        }
      }
      current.push_back(lit);
    }
  }

  if (!num_vars) throw DimacsError(0, "missing 'p cnf' header");
  if (!current.empty()) throw DimacsError(clause_start_line, "unterminated clause (missing 0)");
  if (static_cast<long long>(clauses.size()) != num_clauses) {
    throw DimacsError(0, "clause count mismatch: header declares " + std::to_string(num_clauses) +
                             ", found " + std::to_string(clauses.size()));
  }
  return Formula(static_cast<Var>(*num_vars), clauses);
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

Formula read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DimacsError(0, "cannot open " + path.string());
  return parse_dimacs(in);
}

std::string to_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (ClauseId c = 0; c < f.num_clauses(); ++c) {
    for (Literal l : f.clause(c)) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace proms
