#pragma once

#include <map>

#include "osfol/formula.hpp"
#include "osfol/term.hpp"

namespace osfol {

/// Variable-to-term map applied simultaneously. Unifiers are kept in solved
/// (idempotent) form: no bound variable occurs in any binding's term.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<Variable, Term>& bindings() const { return bindings_; }
  const Term* lookup(const Variable& v) const;

  /// Inserts `v -> t` without touching existing bindings.
  void bind(const Variable& v, Term t);
  /// Applies `{v/t}` to every existing binding's term, then adds `v -> t`.
  /// Keeps the solved form when `v` does not occur in `t`.
  void compose(const Variable& v, const Term& t);

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;
  /// Replaces free occurrences only; the caller guarantees no capture.
  Formula apply(const Formula& f) const;

  /// Every binding maps a variable to a variable, injectively.
  bool is_renaming() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Variable, Term> bindings_;
};

}  // namespace osfol
