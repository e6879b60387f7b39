#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "osfol/substitution.hpp"
#include "osfol/transform.hpp"

namespace osfol {

/// Which acceptability condition a clause breaks: 1 (arguments are distinct
/// variables), 2 (argument sets nest by arity), 3 (one expression per
/// symbol per clause).
struct AcceptabilityViolation {
  int condition = 0;
  std::size_t clause_index = 0;
  std::string message;
};

std::optional<AcceptabilityViolation> check_acceptable(std::span<const Clause> clauses,
                                                       const std::set<Symbol>& skolems);

/// Q.(C1 & ... & Cn): a quantifier prefix over a conjunction of clauses.
struct UnskolemizedFormula {
  QuantifierPrefix prefix;
  std::vector<Clause> matrix;
  /// Composite variable renaming applied while aligning Skolem expressions.
  Substitution renaming;

  Formula formula() const;
};

struct UnskolemizeResult {
  std::vector<UnskolemizedFormula> formulas;
  std::optional<std::string> failure;

  explicit operator bool() const { return !failure.has_value(); }
  std::vector<Formula> as_formulas() const;
};

/// Un-Skolemizes `clauses`, treating every occurrence of a symbol in
/// `skolems` as a Skolem expression (constants as 0-ary expressions).
/// Clauses without Skolem expressions come back as their universal closure.
UnskolemizeResult unskolemize(std::span<const Clause> clauses, const std::set<Symbol>& skolems);

}  // namespace osfol
