#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "subsat/cnf.hpp"

namespace subsat {

enum class DimacsErrorKind {
  kMalformedHeader,
  kMissingHeader,
  kBadToken,
  kVariableOutOfRange,
  kDuplicateVariable,
  kTautology,
  kClauseTooLong,
  kClauseCountMismatch,
  kUnterminatedClause,
};

class DimacsError : public std::runtime_error {
 public:
  DimacsError(DimacsErrorKind kind, std::size_t line, const std::string& what);

  [[nodiscard]] DimacsErrorKind kind() const { return kind_; }
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  DimacsErrorKind kind_;
  std::size_t line_;
};

/// Reads a DIMACS CNF stream. DIMACS variables are 1-based; the returned
/// formula is 0-based.
[[nodiscard]] CnfFormula parse_dimacs(std::istream& in);
[[nodiscard]] CnfFormula parse_dimacs(const std::string& text);

/// Writes `p cnf N L` followed by one clause per line. A seed, when given,
/// is recorded as a leading `c seed=<s>` comment.
void serialize_dimacs(const CnfFormula& formula, std::ostream& out,
                      std::optional<std::uint64_t> seed = std::nullopt);
[[nodiscard]] std::string serialize_dimacs(const CnfFormula& formula,
                                           std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace subsat
