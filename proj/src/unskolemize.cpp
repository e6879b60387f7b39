#include "osfol/unskolemize.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "osfol/printer.hpp"

namespace osfol {

namespace {

using Kind = Formula::Kind;

void collect_expressions(const Term& t, const std::set<Symbol>& skolems, std::vector<Term>& out) {
  if (t.is_variable()) return;
  if (skolems.contains(t.functor())) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return;
  }
  for (const auto& a : t.args()) collect_expressions(a, skolems, out);
}

void collect_nested(const Term& t, const std::set<Symbol>& skolems, std::vector<Term>& out) {
  if (t.is_variable()) return;
  if (skolems.contains(t.functor()) && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  for (const auto& a : t.args()) collect_nested(a, skolems, out);
}

/// Distinct Skolem expressions of a clause in first-occurrence order.
std::vector<Term> expressions_of(const Clause& c, const std::set<Symbol>& skolems) {
  std::vector<Term> out;
  for (const auto& l : c)
    for (const auto& t : l.atom.args) collect_expressions(t, skolems, out);
  return out;
}

std::vector<Variable> argument_variables(const Term& e) {
  std::vector<Variable> vs;
  for (const auto& a : e.args()) vs.push_back(a.var());
  return vs;
}

std::set<Variable> argument_set(const Term& e) {
  std::set<Variable> s;
  for (const auto& a : e.args()) s.insert(a.var());
  return s;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

Symbol unused_name(const std::string& stem, std::set<Symbol>& used) {
  for (int k = 2;; ++k) {
    Symbol s(stem + "_" + std::to_string(k));
    if (used.insert(s).second) return s;
  }
}

Term replace_expressions(const Term& t, const std::map<Term, Variable>& table) {
  if (t.is_variable()) return t;
  if (auto it = table.find(t); it != table.end()) return Term::variable(it->second);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(replace_expressions(a, table));
  return Term::application(t.functor(), t.sort(), std::move(args));
}

/// True if applying `renaming` to `c` would identify two of its variables.
bool merges_variables(const Clause& c, const Substitution& renaming) {
  std::set<Term> images;
  auto vars = c.variables();
  for (const auto& v : vars) images.insert(renaming.apply(Term::variable(v)));
  return images.size() != vars.size();
}

class PartitionUnskolemizer {
 public:
  PartitionUnskolemizer(std::vector<Clause> clauses, const std::set<Symbol>& skolems)
      : clauses_(std::move(clauses)), skolems_(skolems) {}

  std::optional<std::string> run(UnskolemizedFormula& out) {
    rename_apart();
    if (auto err = merge_same_symbol()) return err;
    if (auto err = align_arities()) return err;
    build_prefix(out);
    return std::nullopt;
  }

 private:
  void apply(const Substitution& s) {
    for (auto& c : clauses_) c = s.apply(c);
    Substitution composed;
    for (const auto& [v, t] : renaming_.bindings()) composed.bind(v, s.apply(t));
    for (const auto& [v, t] : s.bindings())
      if (!renaming_.lookup(v)) composed.bind(v, t);
    renaming_ = std::move(composed);
  }

  void rename_apart() {
    for (const auto& c : clauses_)
      for (const auto& v : c.variables()) used_.insert(v.name);
    std::set<Variable> seen;
    for (auto& c : clauses_) {
      Substitution s;
      for (const auto& v : c.variables()) {
        if (seen.contains(v)) {
          Variable fresh{unused_name(v.name.name(), used_), v.sort};
          s.bind(v, Term::variable(fresh));
          seen.insert(fresh);
        } else {
          seen.insert(v);
        }
      }
      if (!s.empty()) c = s.apply(c);
      for (const auto& [v, t] : s.bindings()) renaming_.bind(v, t);
    }
  }

  std::vector<Variable> all_variables() const {
    std::vector<Variable> vs;
    for (const auto& c : clauses_)
      for (const auto& l : c) collect_variables(l.atom, vs);
    return vs;
  }

  std::optional<std::string> merge_same_symbol() {
    std::vector<Variable> vars = all_variables();
    std::map<Variable, std::size_t> index;
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
    UnionFind uf(vars.size());

    std::map<Symbol, Term> first;
    for (const auto& c : clauses_) {
      for (const auto& e : expressions_of(c, skolems_)) {
        auto [it, inserted] = first.emplace(e.functor(), e);
        if (inserted) continue;
        const Term& f = it->second;
        for (std::size_t i = 0; i < e.args().size(); ++i) {
          const Variable& a = f.args()[i].var();
          const Variable& b = e.args()[i].var();
          if (a.sort != b.sort)
            return "cannot merge " + to_string(f) + " and " + to_string(e) + ": argument " + std::to_string(i + 1) +
                   " sorts differ";
          uf.unite(index[a], index[b]);
        }
      }
    }
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::size_t r = uf.find(i);
      if (r != i) s.bind(vars[i], Term::variable(vars[r]));
    }
    if (s.empty()) return std::nullopt;
    for (const auto& c : clauses_)
      if (merges_variables(c, s)) return "merging Skolem expressions identifies two variables of " + to_string(c);
    apply(s);
    return std::nullopt;
  }

  std::vector<Term> current_expressions() const {
    std::vector<Term> exprs;
    for (const auto& c : clauses_)
      for (const auto& e : expressions_of(c, skolems_))
        if (std::find(exprs.begin(), exprs.end(), e) == exprs.end()) exprs.push_back(e);
    std::stable_sort(exprs.begin(), exprs.end(),
                     [](const Term& a, const Term& b) { return a.args().size() < b.args().size(); });
    return exprs;
  }

  std::optional<std::string> align_arities() {
    std::size_t done = 0;
    while (true) {
      std::vector<Term> exprs = current_expressions();
      if (done >= exprs.size()) break;
      const Term& e = exprs[done];
      std::set<Variable> args = argument_set(e);
      std::vector<Variable> missing;
      for (const auto& v : chain_)
        if (!args.contains(v)) missing.push_back(v);
      std::vector<Variable> leftovers;
      for (const auto& v : argument_variables(e))
        if (std::find(chain_.begin(), chain_.end(), v) == chain_.end()) leftovers.push_back(v);
      if (leftovers.size() < missing.size())
        return "Skolem expression " + to_string(e) + " has fewer arguments than a shorter expression";

      Substitution s;
      for (std::size_t i = 0; i < missing.size(); ++i) {
        if (leftovers[i].sort != missing[i].sort)
          return "cannot align " + to_string(e) + ": variable " + to_string(leftovers[i]) + " would be renamed to " +
                 to_string(missing[i]);
        s.bind(leftovers[i], Term::variable(missing[i]));
      }
      for (std::size_t i = missing.size(); i < leftovers.size(); ++i) chain_.push_back(leftovers[i]);
      if (!s.empty()) {
        for (const auto& c : clauses_)
          if (merges_variables(c, s)) return "aligning " + to_string(e) + " identifies two variables of " + to_string(c);
        apply(s);
      }
      ++done;
    }
    return std::nullopt;
  }

  void build_prefix(UnskolemizedFormula& out) {
    std::vector<Term> exprs = current_expressions();
    for (const auto& c : clauses_)
      for (const auto& v : c.variables()) used_.insert(v.name);

    std::map<Term, Variable> table;
    std::vector<std::vector<Variable>> after(chain_.size() + 1);
    int counter = 0;
    for (const auto& e : exprs) {
      Symbol name;
      do {
        name = Symbol("v" + std::to_string(++counter));
      } while (used_.contains(name));
      used_.insert(name);
      Variable v{name, e.sort()};
      table.emplace(e, v);
      after[e.args().size()].push_back(v);
    }

    QuantifierPrefix prefix;
    for (const auto& v : after[0]) prefix.push_back({Kind::Exists, v});
    for (std::size_t k = 0; k < chain_.size(); ++k) {
      prefix.push_back({Kind::Forall, chain_[k]});
      for (const auto& v : after[k + 1]) prefix.push_back({Kind::Exists, v});
    }
    std::set<Variable> chained(chain_.begin(), chain_.end());
    for (const auto& v : all_variables())
      if (!chained.contains(v)) prefix.push_back({Kind::Forall, v});

    for (const auto& c : clauses_) {
      std::vector<Literal> lits;
      for (const auto& l : c) {
        Atom a{l.atom.predicate, {}};
        for (const auto& t : l.atom.args) a.args.push_back(replace_expressions(t, table));
        lits.push_back({l.positive, std::move(a)});
      }
      out.matrix.emplace_back(std::move(lits));
    }
    out.prefix = std::move(prefix);
    out.renaming = renaming_;
  }

  std::vector<Clause> clauses_;
  const std::set<Symbol>& skolems_;
  std::set<Symbol> used_;
  std::vector<Variable> chain_;
  Substitution renaming_;
};

}  // namespace

std::optional<AcceptabilityViolation> check_acceptable(std::span<const Clause> clauses,
                                                       const std::set<Symbol>& skolems) {
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    const Clause& c = clauses[ci];
    std::vector<Term> exprs;
    for (const auto& l : c)
      for (const auto& t : l.atom.args) collect_nested(t, skolems, exprs);

    for (const auto& e : exprs) {
      std::set<Variable> seen;
      for (const auto& a : e.args()) {
        if (!a.is_variable())
          return AcceptabilityViolation{1, ci, to_string(e) + " has a non-variable argument in " + to_string(c)};
        if (!seen.insert(a.var()).second)
          return AcceptabilityViolation{1, ci, to_string(e) + " repeats a variable argument in " + to_string(c)};
      }
    }
    for (std::size_t i = 0; i < exprs.size(); ++i)
      for (std::size_t j = 0; j < exprs.size(); ++j) {
        if (i == j) continue;
        const Term& f = exprs[i];
        const Term& g = exprs[j];
        if (f.functor() == g.functor())
          return AcceptabilityViolation{3, ci, to_string(f) + " and " + to_string(g) + " share a head in " + to_string(c)};
        if (f.args().size() <= g.args().size()) {
          auto fa = argument_set(f);
          auto ga = argument_set(g);
          if (!std::includes(ga.begin(), ga.end(), fa.begin(), fa.end()))
            return AcceptabilityViolation{
                2, ci, "arguments of " + to_string(f) + " are not among those of " + to_string(g) + " in " + to_string(c)};
        }
      }
  }
  return std::nullopt;
}

Formula UnskolemizedFormula::formula() const {
  std::vector<Formula> parts;
  for (const auto& c : matrix) parts.push_back(to_formula(c));
  return attach_prefix(prefix, Formula::conjunction(std::move(parts)));
}

std::vector<Formula> UnskolemizeResult::as_formulas() const {
  std::vector<Formula> out;
  for (const auto& f : formulas) out.push_back(f.formula());
  return out;
}

UnskolemizeResult unskolemize(std::span<const Clause> clauses, const std::set<Symbol>& skolems) {
  UnskolemizeResult result;
  if (auto v = check_acceptable(clauses, skolems)) {
    result.failure = "condition (" + std::string(v->condition == 1 ? "i" : v->condition == 2 ? "ii" : "iii") +
                     ") violated: " + v->message;
    return result;
  }

  std::vector<std::size_t> with_skolems;
  std::map<Symbol, std::size_t> owner;
  UnionFind uf(clauses.size());
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    auto exprs = expressions_of(clauses[i], skolems);
    if (exprs.empty()) continue;
    with_skolems.push_back(i);
    for (const auto& e : exprs) {
      auto [it, inserted] = owner.emplace(e.functor(), i);
      if (!inserted) uf.unite(it->second, i);
    }
  }

  std::map<std::size_t, std::vector<Clause>> partitions;
  for (std::size_t i : with_skolems) partitions[uf.find(i)].push_back(clauses[i]);

  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (std::find(with_skolems.begin(), with_skolems.end(), i) != with_skolems.end()) {
      if (uf.find(i) != i) continue;
      UnskolemizedFormula f;
      if (auto err = PartitionUnskolemizer(partitions[i], skolems).run(f)) {
        result.failure = *err;
        result.formulas.clear();
        return result;
      }
      result.formulas.push_back(std::move(f));
    } else {
      UnskolemizedFormula f;
      for (const auto& v : clauses[i].variables()) f.prefix.push_back({Kind::Forall, v});
      f.matrix.push_back(clauses[i]);
      result.formulas.push_back(std::move(f));
    }
  }
  return result;
}

}  // namespace osfol
