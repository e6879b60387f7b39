#include "osfol/unify.hpp"

#include <random>
#include <stdexcept>

#include "osfol/error.hpp"

namespace osfol {

std::string_view to_string(UnifyFailure f) {
  switch (f) {
    case UnifyFailure::kNone:
      return "none";
    case UnifyFailure::kPredicateMismatch:
      return "predicate-mismatch";
    case UnifyFailure::kClash:
      return "clash";
    case UnifyFailure::kOccurs:
      return "occurs-check";
    case UnifyFailure::kSortMismatch:
      return "sort-mismatch";
    case UnifyFailure::kBottomGlb:
      return "bottom-glb";
  }
  return "?";
}

namespace {

UnifyResult fail(UnifyFailure f) { return {std::nullopt, f}; }

SortId unique_meet(const SortHierarchy& sorts, SortId a, SortId b) {
  auto m = sorts.meet(a, b);
  if (!m) throw SortHierarchyError("sorts '" + a.name() + "' and '" + b.name() + "' have no unique greatest lower bound");
  return *m;
}

}  // namespace

UnifyResult unify(std::vector<Equation> equations, const SortHierarchy& sorts, FreshNames& fresh,
                  std::uint64_t selection_seed) {
  Substitution sigma;
  std::mt19937_64 rng(selection_seed);
  std::size_t head = 0;
  while (head < equations.size()) {
    if (selection_seed != 0) {
      std::uniform_int_distribution<std::size_t> pick(head, equations.size() - 1);
      std::swap(equations[head], equations[pick(rng)]);
    }
    Term lhs = sigma.apply(equations[head].first);
    Term rhs = sigma.apply(equations[head].second);
    ++head;

    // Rule 1 (and identical non-variable terms, which rule 3 would dissolve).
    if (lhs == rhs) continue;
    // Rule 2: orient so a variable is on the left.
    if (!lhs.is_variable() && rhs.is_variable()) std::swap(lhs, rhs);

    if (!lhs.is_variable()) {
      // Rule 3: decomposition.
      if (lhs.functor() != rhs.functor() || lhs.args().size() != rhs.args().size()) return fail(UnifyFailure::kClash);
      for (std::size_t i = 0; i < lhs.args().size(); ++i) equations.emplace_back(lhs.args()[i], rhs.args()[i]);
      continue;
    }

    const Variable y = lhs.var();
    if (!rhs.is_variable()) {
      // Rule 4: variable against a non-variable term.
      if (rhs.occurs(y)) return fail(UnifyFailure::kOccurs);
      if (!sorts.leq(rhs.sort(), y.sort)) return fail(UnifyFailure::kSortMismatch);
      sigma.compose(y, rhs);
      continue;
    }

    // Rule 5: two distinct variables.
    const Variable z = rhs.var();
    if (sorts.leq(z.sort, y.sort)) {
      sigma.compose(y, rhs);
    } else if (sorts.leq(y.sort, z.sort)) {
      sigma.compose(z, lhs);
    } else {
      SortId s = unique_meet(sorts, y.sort, z.sort);
      if (s == sorts.bottom()) return fail(UnifyFailure::kBottomGlb);
      Term x = Term::variable(fresh.variable(FreshNames::stem_of(y.name.name()), s));
      sigma.compose(y, x);
      sigma.compose(z, x);
    }
  }
  return {std::move(sigma), UnifyFailure::kNone};
}

UnifyResult sigma_mgu(std::span<const Term> terms, const SortHierarchy& sorts, FreshNames& fresh) {
  std::vector<Equation> eqs;
  for (std::size_t i = 1; i < terms.size(); ++i) eqs.emplace_back(terms[0], terms[i]);
  return unify(std::move(eqs), sorts, fresh);
}

UnifyResult sigma_mgu(std::span<const Atom> atoms, const SortHierarchy& sorts, FreshNames& fresh) {
  std::vector<Equation> eqs;
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (atoms[i].predicate != atoms[0].predicate || atoms[i].args.size() != atoms[0].args.size())
      return fail(UnifyFailure::kPredicateMismatch);
    for (std::size_t k = 0; k < atoms[0].args.size(); ++k) eqs.emplace_back(atoms[0].args[k], atoms[i].args[k]);
  }
  return unify(std::move(eqs), sorts, fresh);
}

std::optional<VariableMerge> glb_variable_merge(const Variable& a, const Variable& b, const SortHierarchy& sorts,
                                                FreshNames& fresh) {
  if (a == b) throw std::invalid_argument("glb_variable_merge: variables coincide");
  if (sorts.leq(a.sort, b.sort) || sorts.leq(b.sort, a.sort))
    throw std::invalid_argument("glb_variable_merge: sorts are comparable");
  SortId s = unique_meet(sorts, a.sort, b.sort);
  if (s == sorts.bottom()) return std::nullopt;
  VariableMerge m{fresh.variable(FreshNames::stem_of(a.name.name()), s), {}};
  m.substitution.bind(a, Term::variable(m.merged));
  m.substitution.bind(b, Term::variable(m.merged));
  return m;
}

bool match(const Term& pattern, const Term& target, const SortHierarchy& sorts, Substitution& binding) {
  if (pattern.is_variable()) {
    if (const Term* bound = binding.lookup(pattern.var())) return *bound == target;
    if (!sorts.leq(target.sort(), pattern.var().sort)) return false;
    binding.bind(pattern.var(), target);
    return true;
  }
  if (target.is_variable() || pattern.functor() != target.functor() ||
      pattern.args().size() != target.args().size())
    return false;
  if (pattern.is_ground()) return pattern == target;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match(pattern.args()[i], target.args()[i], sorts, binding)) return false;
  return true;
}

bool match(const Atom& pattern, const Atom& target, const SortHierarchy& sorts, Substitution& binding) {
  if (pattern.predicate != target.predicate || pattern.args.size() != target.args.size()) return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match(pattern.args[i], target.args[i], sorts, binding)) return false;
  return true;
}

}  // namespace osfol
