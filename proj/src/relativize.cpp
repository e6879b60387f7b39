#include "osfol/relativize.hpp"

#include <map>
#include <set>

namespace osfol {

namespace {

using Kind = Formula::Kind;

/// Variables are keyed by (name, sort) but the image lives at TOP, so a name
/// used at several sorts is disambiguated with its sort.
class Relativizer {
 public:
  Relativizer(const Formula& f, const SortHierarchy& sorts) : sorts_(sorts) { scan(f); }

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case Kind::True:
      case Kind::False:
        return f;
      case Kind::Atom:
        return Formula::atom(atom(f.atom()));
      case Kind::Not:
        return Formula::negation(run(f.body()));
      case Kind::And:
      case Kind::Or: {
        std::vector<Formula> parts;
        for (const auto& c : f.children()) parts.push_back(run(c));
        return f.kind() == Kind::And ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
      }
      case Kind::Implies:
        return Formula::implication(run(f.children()[0]), run(f.children()[1]));
      case Kind::Forall:
      case Kind::Exists: {
        const Variable& v = f.bound();
        Variable image = variable(v);
        Formula body = run(f.body());
        if (v.sort == sorts_.top()) return f.kind() == Kind::Forall ? Formula::forall(image, body)
                                                                    : Formula::exists(image, body);
        Formula guard = Formula::atom(Atom{v.sort.symbol(), {Term::variable(image)}});
        if (f.kind() == Kind::Forall) return Formula::forall(image, Formula::implication(guard, body));
        return Formula::exists(image, Formula::conjunction({guard, body}));
      }
    }
    return f;
  }

  Variable variable(const Variable& v) {
    auto& sorts = names_[v.name];
    if (sorts.size() <= 1) return {v.name, sorts_.top()};
    return {Symbol(v.name.name() + "__" + v.sort.name()), sorts_.top()};
  }

  Term term(const Term& t) {
    if (t.is_variable()) return Term::variable(variable(t.var()));
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(term(a));
    return Term::application(t.functor(), sorts_.top(), std::move(args));
  }

  Atom atom(const Atom& a) {
    Atom out{a.predicate, {}};
    for (const auto& t : a.args) out.args.push_back(term(t));
    return out;
  }

 private:
  void scan(const Formula& f) {
    if (f.kind() == Kind::Atom) {
      std::vector<Variable> vs;
      collect_variables(f.atom(), vs);
      for (const auto& v : vs) names_[v.name].insert(v.sort);
      return;
    }
    if (f.is_quantifier()) names_[f.bound().name].insert(f.bound().sort);
    for (const auto& c : f.children()) scan(c);
  }

  const SortHierarchy& sorts_;
  std::map<Symbol, std::set<SortId>> names_;
};

}  // namespace

Signature unsorted_signature(const Signature& sorted) {
  Signature flat;
  SortId top = flat.hierarchy().top();
  for (const auto& [name, decl] : sorted.predicates())
    flat.declare_predicate(name, std::vector<SortId>(decl.args.size(), top));
  for (const auto& [name, decl] : sorted.functions())
    flat.declare_function(name, std::vector<SortId>(decl.args.size(), top), top);
  return flat;
}

Formula relativize(const Formula& f, const SortHierarchy& sorts) { return Relativizer(f, sorts).run(f); }

Formula relativize(const Clause& c, const SortHierarchy& sorts) { return relativize(universal_closure(c), sorts); }

std::vector<Formula> relativize(const Signature& sig) {
  const SortHierarchy& h = sig.hierarchy();
  SortId top = h.top();
  std::vector<Formula> out;
  auto guard = [&](SortId s, const Term& t) { return Formula::atom(Atom{s.symbol(), {t}}); };

  for (const auto& [lower, upper] : h.cover_edges()) {
    if (lower == h.bottom() || upper == top) continue;
    Term x = Term::variable({Symbol("x"), top});
    out.push_back(Formula::forall(x.var(), Formula::implication(guard(lower, x), guard(upper, x))));
  }
  for (const auto& [name, decl] : sig.functions()) {
    if (decl.result == top) continue;
    std::vector<Variable> vars;
    std::vector<Term> args;
    std::vector<Formula> premises;
    for (std::size_t i = 0; i < decl.args.size(); ++i) {
      Variable v{Symbol("x" + std::to_string(i + 1)), top};
      vars.push_back(v);
      args.push_back(Term::variable(v));
      if (decl.args[i] != top) premises.push_back(guard(decl.args[i], args.back()));
    }
    Formula head = guard(decl.result, Term::application(name, top, args));
    Formula body = premises.empty() ? head : Formula::implication(Formula::conjunction(std::move(premises)), head);
    out.push_back(Formula::quantify(Kind::Forall, vars, body));
  }
  return out;
}

}  // namespace osfol
