#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osfol/formula.hpp"
#include "osfol/fresh.hpp"
#include "osfol/signature.hpp"

namespace osfol {

struct SkolemEntry {
  Symbol symbol;
  std::vector<SortId> args;
  SortId result;
  std::string owner;
};

/// Skolem symbols minted during one session. Each mint is fresh with respect
/// to the table and to the signature it is declared in.
class SkolemTable {
 public:
  explicit SkolemTable(std::string prefix = "sk") : prefix_(std::move(prefix)) {}

  /// Declares a fresh `<prefix><n>` in `sig` and records it.
  Symbol mint(Signature& sig, std::vector<SortId> args, SortId result, std::string_view owner = {});

  bool contains(Symbol s) const { return entries_.contains(s); }
  const SkolemEntry* find(Symbol s) const;
  const std::map<Symbol, SkolemEntry>& entries() const { return entries_; }
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
  std::map<Symbol, SkolemEntry> entries_;
  std::uint64_t counter_ = 0;
};

struct QuantifiedVariable {
  Formula::Kind quantifier;  // Forall or Exists
  Variable variable;

  friend bool operator==(const QuantifiedVariable&, const QuantifiedVariable&) = default;
};

using QuantifierPrefix = std::vector<QuantifiedVariable>;

/// Negation normal form: only atoms are negated, no implications, and the
/// constants $true/$false are simplified away unless the whole formula is one.
Formula to_nnf(const Formula& f);

/// Equivalent prenex formula whose matrix is in negation normal form. Bound
/// variables are renamed (`x_2`, `x_3`, ...) only when a name would clash.
Formula to_prenex(const Formula& f);

/// Splits the outermost quantifier block from its body.
std::pair<QuantifierPrefix, Formula> split_prefix(const Formula& f);
Formula attach_prefix(const QuantifierPrefix& prefix, Formula matrix);

/// Replaces each existential of the prenex form of `f` by a fresh Skolem
/// term over the universals to its left. The symbols are declared in `sig`
/// with the existential's sort as result sort.
Formula skolemize(const Formula& f, Signature& sig, SkolemTable& table, std::string_view owner = {});

/// Naive distribution of a quantifier-free negation-normal formula.
std::vector<Clause> to_cnf(const Formula& matrix);

/// Negation normal form, prenex form, Skolemization and CNF. Duplicate
/// clauses are dropped; order follows the formula.
std::vector<Clause> clausify(const Formula& f, Signature& sig, SkolemTable& table, std::string_view owner = {});

/// Variant of `second` sharing no variable with `first`.
Clause rename_apart(const Clause& first, const Clause& second, FreshNames& fresh);
std::pair<Clause, Clause> standardize_apart(const Clause& c1, const Clause& c2, FreshNames& fresh);

}  // namespace osfol
