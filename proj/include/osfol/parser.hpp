#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osfol/network.hpp"
#include "osfol/signature.hpp"

namespace osfol {

struct AgentSection {
  std::string id;
  std::vector<std::string> reports_to;
  std::vector<PredicateDecl> predicates;  // declaration order
  std::vector<FunctionDecl> functions;    // declaration order, constants included
  std::vector<Clause> clauses;
  int line = 0;

  friend bool operator==(const AgentSection&, const AgentSection&);
};

/// In-memory form of a problem file:
///
///   [sorts]            sort W < A, B | sort A | witness w : W
///                      W(x) -> A(x)  | W(w)
///   [network]          decider x
///   [agent y]          reports-to x | pred E : (A, TOP) | func h : (C) -> P
///                      const c : A  | clause lines `L | L`
///   [query]            a closed formula
struct ProblemFile {
  std::vector<SortId> sorts;
  std::vector<std::pair<SortId, SortId>> subsorts;
  std::vector<Witness> witnesses;
  bool synthesize_glbs = false;
  std::shared_ptr<const SortHierarchy> hierarchy;
  std::optional<std::string> decider;
  std::vector<AgentSection> agents;
  std::optional<Formula> query;

  Signature signature_of(const AgentSection& a) const;
  /// Network over all agents; the decider defaults to the only agent.
  AgentNetwork network() const;
  /// Signature holding every agent's declarations.
  Signature merged_signature() const;

  friend bool operator==(const ProblemFile&, const ProblemFile&);
};

struct ParseOptions {
  bool synthesize_glbs = false;
};

/// Throws ParseError (positioned), SortError or SortHierarchyError.
ProblemFile parse_problem(std::string_view text, const ParseOptions& options = {});
std::string print_problem(const ProblemFile& p);

/// A closed or open formula over `sig`. Bare names bound by an enclosing
/// quantifier denote that variable.
Formula parse_formula(std::string_view text, const Signature& sig, int line = 1);
Clause parse_clause(std::string_view text, const Signature& sig, int line = 1);
/// Literals in written order (`[]` gives none).
std::vector<Literal> parse_literals(std::string_view text, const Signature& sig, int line = 1);
Term parse_term(std::string_view text, const Signature& sig, int line = 1);

std::string read_file(const std::string& path);

}  // namespace osfol
