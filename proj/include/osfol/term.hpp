#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "osfol/sort_hierarchy.hpp"
#include "osfol/symbol.hpp"

namespace osfol {

/// A restricted variable `name:Sort`. The same name at two sorts is two
/// distinct variables.
struct Variable {
  Symbol name;
  SortId sort;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Immutable, structurally shared term. Application nodes cache the declared
/// result sort of their function symbol, so `sort()` needs no signature.
class Term {
 public:
  static Term variable(Variable v);
  static Term application(Symbol function, SortId result, std::vector<Term> args = {});

  bool is_variable() const { return node_->is_variable; }
  const Variable& var() const { return node_->variable; }
  Symbol functor() const { return node_->variable.name; }
  SortId sort() const { return node_->variable.sort; }
  std::span<const Term> args() const { return node_->args; }

  std::size_t hash() const { return node_->hash; }
  /// Number of symbol occurrences.
  std::size_t size() const { return node_->size; }
  std::size_t depth() const;
  bool is_ground() const { return node_->ground; }
  bool occurs(const Variable& v) const;
  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  /// Canonical syntactic order (variables first, then by spelling).
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_variable = false;
    Variable variable;  // for applications: (functor, result sort)
    std::vector<Term> args;
    std::size_t hash = 0;
    std::uint32_t size = 1;
    bool ground = false;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct Atom {
  Symbol predicate;
  std::vector<Term> args;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

struct Literal {
  bool positive = true;
  Atom atom;

  Literal negated() const { return {!positive, atom}; }
  bool complementary(const Literal& o) const { return positive != o.positive && atom == o.atom; }

  friend bool operator==(const Literal&, const Literal&) = default;
  /// Predicate spelling, then positive before negative, then arguments.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

/// A finite set of literals kept sorted and duplicate-free. The empty clause
/// is the default-constructed value.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);

  std::span<const Literal> literals() const { return literals_; }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  /// Total symbol count over all literals (predicate symbols included).
  std::size_t weight() const;
  /// Variables in order of first occurrence.
  std::vector<Variable> variables() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> literals_;
};

/// Appends the variables of `t` not yet in `out`, in first-occurrence order.
void collect_variables(const Term& t, std::vector<Variable>& out);
void collect_variables(const Atom& a, std::vector<Variable>& out);

/// Collects function/constant symbols occurring in a term.
void collect_functions(const Term& t, std::vector<Symbol>& out);

}  // namespace osfol
