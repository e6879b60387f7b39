#pragma once

#include <vector>

#include "osfol/formula.hpp"
#include "osfol/signature.hpp"

namespace osfol {

/// One-sorted counterpart of a signature: every sort predicate becomes an
/// ordinary unary predicate over TOP, every other symbol keeps its arity with
/// all positions (and results) at TOP.
Signature unsorted_signature(const Signature& sorted);

/// Translates a sorted formula: `forall x:s. p` becomes `forall x. s(x) => p'`
/// and `exists x:s. p` becomes `exists x. s(x) & p'`. Free variables keep no
/// guard. Terms are rebuilt at TOP.
Formula relativize(const Formula& f, const SortHierarchy& sorts);

/// Relativized universal closure of a clause.
Formula relativize(const Clause& c, const SortHierarchy& sorts);

/// Sort axioms of the signature: one implication per covering subsort pair,
/// `s(c)` for each constant, and a closure axiom per function.
std::vector<Formula> relativize(const Signature& sig);

}  // namespace osfol
