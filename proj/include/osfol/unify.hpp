#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "osfol/fresh.hpp"
#include "osfol/sort_hierarchy.hpp"
#include "osfol/substitution.hpp"

namespace osfol {

/// Why a set of terms or atoms has no Σ-unifier. The numbers refer to the
/// rule of the unification procedure that rejects the input.
enum class UnifyFailure {
  kNone,
  kPredicateMismatch,  // different predicate symbols or arities
  kClash,              // rule 3: different function symbols
  kOccurs,             // rule 4: variable occurs in the term
  kSortMismatch,       // rule 4: term sort is not below the variable sort
  kBottomGlb,          // rule 5: the greatest common subsort is BOT
};

std::string_view to_string(UnifyFailure f);

struct UnifyResult {
  std::optional<Substitution> mgu;
  UnifyFailure failure = UnifyFailure::kNone;

  explicit operator bool() const { return mgu.has_value(); }
};

using Equation = std::pair<Term, Term>;

/// Solves the equations with the order-sorted rules. Equations are taken
/// first-in first-out; a nonzero `selection_seed` picks them in a
/// pseudo-random order instead (the answer is the same up to renaming).
/// Fresh variables created by the variable/variable rule come from `fresh`.
/// Throws SortHierarchyError if two sorts lack a unique GLB.
UnifyResult unify(std::vector<Equation> equations, const SortHierarchy& sorts, FreshNames& fresh,
                  std::uint64_t selection_seed = 0);

/// Σ-mgu of a set of terms (all pairwise unified).
UnifyResult sigma_mgu(std::span<const Term> terms, const SortHierarchy& sorts, FreshNames& fresh);
/// Σ-mgu of a set of atoms; different predicate symbols cannot be unified.
UnifyResult sigma_mgu(std::span<const Atom> atoms, const SortHierarchy& sorts, FreshNames& fresh);

struct VariableMerge {
  Variable merged;
  Substitution substitution;
};

/// Merges two distinct variables of incomparable sorts into a fresh variable
/// at their GLB. Empty when the GLB is BOT. Throws std::invalid_argument if
/// the sorts are comparable or the variables coincide.
std::optional<VariableMerge> glb_variable_merge(const Variable& a, const Variable& b, const SortHierarchy& sorts,
                                                FreshNames& fresh);

/// One-sided sorted matching: extends `binding` so that binding(pattern) is
/// syntactically `target`, treating variables of `target` as constants.
/// Bindings respect sort descent. Returns false (leaving `binding` in an
/// unspecified extended state) on failure.
bool match(const Term& pattern, const Term& target, const SortHierarchy& sorts, Substitution& binding);
bool match(const Atom& pattern, const Atom& target, const SortHierarchy& sorts, Substitution& binding);

}  // namespace osfol
