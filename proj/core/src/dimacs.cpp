#include "subsat/dimacs.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace subsat {

DimacsError::DimacsError(DimacsErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

bool parse_int(const std::string& token, long long& value) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::size_t line_no = 0;
  bool have_header = false;
  long long declared_vars = 0;
  long long declared_clauses = 0;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;
  std::size_t current_start = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;  // SATLIB trailer
    std::istringstream tokens(line);
    if (line[first] == 'p') {
      if (have_header) {
        throw DimacsError(DimacsErrorKind::kMalformedHeader, line_no, "duplicate header");
      }
      std::string p, fmt, n_tok, l_tok, extra;
      tokens >> p >> fmt >> n_tok >> l_tok;
      if (p != "p" || fmt != "cnf" || !parse_int(n_tok, declared_vars) ||
          !parse_int(l_tok, declared_clauses) || declared_vars < 0 || declared_clauses < 0 ||
          (tokens >> extra)) {
        throw DimacsError(DimacsErrorKind::kMalformedHeader, line_no,
                          "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw DimacsError(DimacsErrorKind::kMissingHeader, line_no, "clause before 'p cnf' header");
    }
    std::string token;
    while (tokens >> token) {
      long long value = 0;
      if (!parse_int(token, value)) {
        throw DimacsError(DimacsErrorKind::kBadToken, line_no, "invalid token '" + token + "'");
      }
      if (value == 0) {
        if (current.empty()) {
          throw DimacsError(DimacsErrorKind::kBadToken, line_no, "empty clause");
        }
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (current.empty()) current_start = line_no;
      long long var = std::llabs(value);
      if (var > declared_vars) {
        throw DimacsError(DimacsErrorKind::kVariableOutOfRange, line_no,
                          "variable " + std::to_string(var) + " exceeds declared " +
                              std::to_string(declared_vars));
      }
      Literal lit{static_cast<Var>(var - 1), value > 0};
      for (const Literal& other : current) {
        if (other.var == lit.var) {
          if (other.positive != lit.positive) {
            throw DimacsError(DimacsErrorKind::kTautology, line_no,
                              "tautological clause on variable " + std::to_string(var));
          }
          throw DimacsError(DimacsErrorKind::kDuplicateVariable, line_no,
                            "duplicate literal on variable " + std::to_string(var));
        }
      }
      if (current.size() == kMaxClauseWidth) {
        throw DimacsError(DimacsErrorKind::kClauseTooLong, line_no,
                          "clause has more than 3 literals");
      }
      current.push_back(lit);
    }
  }

  if (!have_header) {
    throw DimacsError(DimacsErrorKind::kMissingHeader, line_no, "missing 'p cnf' header");
  }
  if (!current.empty()) {
    throw DimacsError(DimacsErrorKind::kUnterminatedClause, current_start,
                      "clause not terminated by 0");
  }
  if (static_cast<long long>(clauses.size()) != declared_clauses) {
    throw DimacsError(DimacsErrorKind::kClauseCountMismatch, line_no,
                      "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                          std::to_string(clauses.size()));
  }
  return CnfFormula(static_cast<std::size_t>(declared_vars), clauses);
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void serialize_dimacs(const CnfFormula& formula, std::ostream& out,
                      std::optional<std::uint64_t> seed) {
  if (seed) out << "c seed=" << *seed << '\n';
  out << "p cnf " << formula.num_variables() << ' ' << formula.num_clauses() << '\n';
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    for (const Literal& lit : formula.clause(c)) {
      out << (lit.positive ? "" : "-") << (lit.var + 1) << ' ';
    }
    out << "0\n";
  }
}

std::string serialize_dimacs(const CnfFormula& formula, std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  serialize_dimacs(formula, out, seed);
  return out.str();
}

}  // namespace subsat
