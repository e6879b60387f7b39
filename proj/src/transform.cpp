#include "osfol/transform.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "osfol/substitution.hpp"

namespace osfol {

Symbol SkolemTable::mint(Signature& sig, std::vector<SortId> args, SortId result, std::string_view owner) {
  Symbol name;
  do {
    name = Symbol(prefix_ + std::to_string(++counter_));
  } while (sig.declared(name) || entries_.contains(name) || sig.hierarchy().contains(SortId(name)));
  sig.declare_function(name, args, result);
  entries_.emplace(name, SkolemEntry{name, std::move(args), result, std::string(owner)});
  return name;
}

const SkolemEntry* SkolemTable::find(Symbol s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

using Kind = Formula::Kind;

Formula nnf(const Formula& f, bool negate) {
  switch (f.kind()) {
    case Kind::True:
      return negate ? Formula::falsity() : f;
    case Kind::False:
      return negate ? Formula::truth() : f;
    case Kind::Atom:
      return negate ? Formula::negation(f) : f;
    case Kind::Not:
      return nnf(f.body(), !negate);
    case Kind::And:
    case Kind::Or: {
      bool conj = (f.kind() == Kind::And) != negate;
      std::vector<Formula> parts;
      for (const auto& c : f.children()) {
        Formula p = nnf(c, negate);
        if (p.kind() == (conj ? Kind::False : Kind::True)) return p;
        if (p.kind() == (conj ? Kind::True : Kind::False)) continue;
        if (p.kind() == (conj ? Kind::And : Kind::Or)) {
          parts.insert(parts.end(), p.children().begin(), p.children().end());
        } else {
          parts.push_back(p);
        }
      }
      return conj ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    case Kind::Implies: {
      Formula lhs = f.children()[0];
      Formula rhs = f.children()[1];
      if (negate) return nnf(Formula::conjunction({lhs, Formula::negation(rhs)}), false);
      return nnf(Formula::disjunction({Formula::negation(lhs), rhs}), false);
    }
    case Kind::Forall:
    case Kind::Exists: {
      Formula body = nnf(f.body(), negate);
      bool universal = (f.kind() == Kind::Forall) != negate;
      if (body.kind() == Kind::True || body.kind() == Kind::False) return body;
      return universal ? Formula::forall(f.bound(), body) : Formula::exists(f.bound(), body);
    }
  }
  return f;
}

void collect_names(const Formula& f, std::set<Symbol>& names) {
  if (f.kind() == Kind::Atom) {
    std::vector<Variable> vs;
    collect_variables(f.atom(), vs);
    for (const auto& v : vs) names.insert(v.name);
    return;
  }
  if (f.is_quantifier()) names.insert(f.bound().name);
  for (const auto& c : f.children()) collect_names(c, names);
}

class ApartRenamer {
 public:
  explicit ApartRenamer(const Formula& f) {
    collect_names(f, used_);
    for (const auto& v : free_variables(f)) claimed_.insert(v.name);
  }

  Formula run(const Formula& f, const std::map<Variable, Variable>& scope) {
    switch (f.kind()) {
      case Kind::True:
      case Kind::False:
        return f;
      case Kind::Atom: {
        Substitution s;
        for (const auto& [from, to] : scope)
          if (from != to) s.bind(from, Term::variable(to));
        return s.empty() ? f : Formula::atom(s.apply(f.atom()));
      }
      case Kind::Not:
        return Formula::negation(run(f.body(), scope));
      case Kind::And:
      case Kind::Or:
      case Kind::Implies: {
        std::vector<Formula> parts;
        for (const auto& c : f.children()) parts.push_back(run(c, scope));
        if (f.kind() == Kind::Implies) return Formula::implication(parts[0], parts[1]);
        return f.kind() == Kind::And ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
      }
      case Kind::Forall:
      case Kind::Exists: {
        Variable v = f.bound();
        Variable renamed = v;
        if (claimed_.contains(v.name)) {
          std::string stem = v.name.name();
          for (int k = 2;; ++k) {
            Symbol candidate(stem + "_" + std::to_string(k));
            if (!used_.contains(candidate)) {
              renamed.name = candidate;
              break;
            }
          }
          used_.insert(renamed.name);
        }
        claimed_.insert(renamed.name);
        auto inner = scope;
        inner[v] = renamed;
        Formula body = run(f.body(), inner);
        return f.kind() == Kind::Forall ? Formula::forall(renamed, body) : Formula::exists(renamed, body);
      }
    }
    return f;
  }

 private:
  std::set<Symbol> used_;
  std::set<Symbol> claimed_;
};

Formula pull(const Formula& f, QuantifierPrefix& prefix) {
  switch (f.kind()) {
    case Kind::Forall:
    case Kind::Exists:
      prefix.push_back({f.kind(), f.bound()});
      return pull(f.body(), prefix);
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> parts;
      for (const auto& c : f.children()) parts.push_back(pull(c, prefix));
      return f.kind() == Kind::And ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    default:
      return f;
  }
}

using LiteralSet = std::vector<Literal>;

std::vector<LiteralSet> cnf(const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
      return {};
    case Kind::False:
      return {LiteralSet{}};
    case Kind::Atom:
      return {LiteralSet{Literal{true, f.atom()}}};
    case Kind::Not:
      if (f.body().kind() != Kind::Atom) throw std::invalid_argument("to_cnf: input is not in negation normal form");
      return {LiteralSet{Literal{false, f.body().atom()}}};
    case Kind::And: {
      std::vector<LiteralSet> out;
      for (const auto& c : f.children()) {
        auto part = cnf(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Kind::Or: {
      std::vector<LiteralSet> acc{LiteralSet{}};
      for (const auto& c : f.children()) {
        auto part = cnf(c);
        std::vector<LiteralSet> next;
        for (const auto& a : acc)
          for (const auto& b : part) {
            LiteralSet merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
          }
        acc = std::move(next);
      }
      return acc;
    }
    default:
      throw std::invalid_argument("to_cnf: input is not quantifier-free");
  }
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

Formula to_prenex(const Formula& f) {
  Formula renamed = ApartRenamer(f).run(to_nnf(f), {});
  QuantifierPrefix prefix;
  Formula matrix = pull(renamed, prefix);
  return attach_prefix(prefix, matrix);
}

std::pair<QuantifierPrefix, Formula> split_prefix(const Formula& f) {
  QuantifierPrefix prefix;
  const Formula* cur = &f;
  while (cur->is_quantifier()) {
    prefix.push_back({cur->kind(), cur->bound()});
    cur = &cur->body();
  }
  return {std::move(prefix), *cur};
}

Formula attach_prefix(const QuantifierPrefix& prefix, Formula matrix) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    matrix = it->quantifier == Kind::Forall ? Formula::forall(it->variable, matrix)
                                            : Formula::exists(it->variable, matrix);
  return matrix;
}

Formula skolemize(const Formula& f, Signature& sig, SkolemTable& table, std::string_view owner) {
  auto [prefix, matrix] = split_prefix(to_prenex(f));
  QuantifierPrefix universals;
  std::vector<Term> arg_terms;
  std::vector<SortId> arg_sorts;
  Substitution sigma;
  for (const auto& q : prefix) {
    if (q.quantifier == Kind::Forall) {
      universals.push_back(q);
      arg_terms.push_back(Term::variable(q.variable));
      arg_sorts.push_back(q.variable.sort);
      continue;
    }
    Symbol sk = table.mint(sig, arg_sorts, q.variable.sort, owner);
    sigma.bind(q.variable, Term::application(sk, q.variable.sort, arg_terms));
  }
  return attach_prefix(universals, sigma.empty() ? matrix : sigma.apply(matrix));
}

std::vector<Clause> to_cnf(const Formula& matrix) {
  std::vector<Clause> out;
  std::set<Clause> seen;
  for (auto& lits : cnf(matrix)) {
    Clause c(std::move(lits));
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Clause> clausify(const Formula& f, Signature& sig, SkolemTable& table, std::string_view owner) {
  return to_cnf(split_prefix(skolemize(f, sig, table, owner)).second);
}

Clause rename_apart(const Clause& first, const Clause& second, FreshNames& fresh) {
  auto taken = first.variables();
  std::set<Variable> avoid(taken.begin(), taken.end());
  Substitution s;
  for (const auto& v : second.variables())
    if (avoid.contains(v)) s.bind(v, Term::variable(fresh.rename(v)));
  return s.empty() ? second : s.apply(second);
}

std::pair<Clause, Clause> standardize_apart(const Clause& c1, const Clause& c2, FreshNames& fresh) {
  return {c1, rename_apart(c1, c2, fresh)};
}

}  // namespace osfol
