#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "osfol/formula.hpp"
#include "osfol/sort_hierarchy.hpp"
#include "osfol/term.hpp"

namespace osfol {

struct PredicateDecl {
  Symbol name;
  std::vector<SortId> args;
  bool sort_predicate = false;

  friend bool operator==(const PredicateDecl&, const PredicateDecl&) = default;
};

/// Constants are functions with no arguments.
struct FunctionDecl {
  Symbol name;
  std::vector<SortId> args;
  SortId result;

  friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
};

/// Where and why a term or atom fails the well-sortedness conditions.
/// `position` is the 1-based argument index inside `symbol` (0 when the
/// problem is with the symbol itself).
struct SortDiagnostic {
  Symbol symbol;
  std::size_t position = 0;
  std::optional<SortId> expected;
  std::optional<SortId> actual;
  std::string message;
};

std::string format_diagnostic(const SortDiagnostic& d);

/// An order-sorted signature (sorts, predicates, functions). Sort predicates
/// are declared automatically for every sort except TOP and BOT, and witness
/// constants from the sort module become constants of their sort.
class Signature {
 public:
  Signature();
  explicit Signature(SortHierarchy hierarchy);

  const SortHierarchy& hierarchy() const { return *hierarchy_; }
  std::shared_ptr<const SortHierarchy> shared_hierarchy() const { return hierarchy_; }

  /// Throws SortError on unknown sorts or a conflicting redeclaration.
  void declare_predicate(Symbol name, std::vector<SortId> args);
  void declare_function(Symbol name, std::vector<SortId> args, SortId result);

  const PredicateDecl* find_predicate(Symbol name) const;
  const FunctionDecl* find_function(Symbol name) const;
  bool declared(Symbol name) const { return find_predicate(name) || find_function(name); }
  bool is_sort_predicate(Symbol name) const;
  /// Symbols shared by every agent: sort predicates and witness constants.
  bool is_global(Symbol name) const;

  const std::map<Symbol, PredicateDecl>& predicates() const { return predicates_; }
  const std::map<Symbol, FunctionDecl>& functions() const { return functions_; }

  /// Builds `f(args)` and checks it; throws SortError on failure.
  Term make_term(Symbol function, std::vector<Term> args) const;
  Atom make_atom(Symbol predicate, std::vector<Term> args) const;

  std::optional<SortDiagnostic> check(const Term& t) const;
  std::optional<SortDiagnostic> check(const Atom& a) const;
  std::optional<SortDiagnostic> check(const Clause& c) const;
  std::optional<SortDiagnostic> check(const Formula& f) const;

 private:
  std::shared_ptr<const SortHierarchy> hierarchy_;
  std::map<Symbol, PredicateDecl> predicates_;
  std::map<Symbol, FunctionDecl> functions_;
};

}  // namespace osfol
