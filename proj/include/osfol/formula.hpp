#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "osfol/term.hpp"

namespace osfol {

/// Immutable well-sorted first-order formula over sorted variables.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Forall, Exists };

  static Formula truth();
  static Formula falsity();
  static Formula atom(Atom a);
  static Formula literal(const Literal& l);
  static Formula negation(Formula f);
  /// n-ary; an empty conjunction is `truth()`, a singleton is its element.
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula implication(Formula premise, Formula conclusion);
  static Formula forall(Variable v, Formula body);
  static Formula exists(Variable v, Formula body);
  /// Wraps `body` in one quantifier per variable, outermost first.
  static Formula quantify(Kind quantifier, std::span<const Variable> vars, Formula body);

  Kind kind() const { return node_->kind; }
  bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }
  const Atom& atom() const { return node_->atom; }
  std::span<const Formula> children() const { return node_->children; }
  const Variable& bound() const { return node_->bound; }
  /// Body of a quantifier or negation.
  const Formula& body() const { return node_->children.front(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind = Kind::True;
    Atom atom{};
    Variable bound{};
    std::vector<Formula> children{};
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

/// Free variables in first-occurrence order.
std::vector<Variable> free_variables(const Formula& f);
/// Predicate symbols occurring in `f`, sorted.
std::vector<Symbol> predicates_of(const Formula& f);
/// Function and constant symbols occurring in `f`, sorted.
std::vector<Symbol> functions_of(const Formula& f);

/// Disjunction of the clause literals (falsity for the empty clause).
Formula to_formula(const Clause& c);
/// Universal closure of the clause disjunction.
Formula universal_closure(const Clause& c);

/// If `f` is a universally closed quantifier-free disjunction of literals
/// (the shape `universal_closure` produces), returns that clause.
std::optional<Clause> as_clause(const Formula& f);

}  // namespace osfol
