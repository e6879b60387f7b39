#include "osfol/substitution.hpp"

#include <set>

namespace osfol {

const Term* Substitution::lookup(const Variable& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Substitution::bind(const Variable& v, Term t) { bindings_.insert_or_assign(v, std::move(t)); }

void Substitution::compose(const Variable& v, const Term& t) {
  Substitution single;
  single.bind(v, t);
  for (auto& [x, u] : bindings_) u = single.apply(u);
  bindings_.insert_or_assign(v, t);
}

Term Substitution::apply(const Term& t) const {
  if (bindings_.empty() || t.is_ground()) return t;
  if (t.is_variable()) {
    const Term* b = lookup(t.var());
    return b ? *b : t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !args.back().same_node(a);
  }
  if (!changed) return t;
  return Term::application(t.functor(), t.sort(), std::move(args));
}

Atom Substitution::apply(const Atom& a) const {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply(t));
  return out;
}

Literal Substitution::apply(const Literal& l) const { return {l.positive, apply(l.atom)}; }

Clause Substitution::apply(const Clause& c) const {
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const Literal& l : c) lits.push_back(apply(l));
  return Clause(std::move(lits));
}

Formula Substitution::apply(const Formula& f) const {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Atom:
      return Formula::atom(apply(f.atom()));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (!lookup(f.bound())) {
        Formula body = apply(f.body());
        return f.kind() == Formula::Kind::Forall ? Formula::forall(f.bound(), body) : Formula::exists(f.bound(), body);
      }
      Substitution inner = *this;
      inner.bindings_.erase(f.bound());
      Formula body = inner.apply(f.body());
      return f.kind() == Formula::Kind::Forall ? Formula::forall(f.bound(), body) : Formula::exists(f.bound(), body);
    }
    case Formula::Kind::Not:
      return Formula::negation(apply(f.body()));
    case Formula::Kind::Implies:
      return Formula::implication(apply(f.children()[0]), apply(f.children()[1]));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> parts;
      for (const Formula& c : f.children()) parts.push_back(apply(c));
      return f.kind() == Formula::Kind::And ? Formula::conjunction(std::move(parts))
                                            : Formula::disjunction(std::move(parts));
    }
  }
  return f;
}

bool Substitution::is_renaming() const {
  std::set<Variable> targets;
  for (const auto& [x, t] : bindings_) {
    if (!t.is_variable() || !targets.insert(t.var()).second) return false;
  }
  return true;
}

}  // namespace osfol
