#include "osfol/formula.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace osfol {

Formula Formula::make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula Formula::truth() { return make({.kind = Kind::True}); }
Formula Formula::falsity() { return make({.kind = Kind::False}); }
Formula Formula::atom(Atom a) { return make({.kind = Kind::Atom, .atom = std::move(a)}); }

Formula Formula::literal(const Literal& l) {
  Formula a = atom(l.atom);
  return l.positive ? a : negation(a);
}

Formula Formula::negation(Formula f) { return make({.kind = Kind::Not, .children = {std::move(f)}}); }

Formula Formula::conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return truth();
  if (parts.size() == 1) return parts.front();
  return make({.kind = Kind::And, .children = std::move(parts)});
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  if (parts.empty()) return falsity();
  if (parts.size() == 1) return parts.front();
  return make({.kind = Kind::Or, .children = std::move(parts)});
}

Formula Formula::implication(Formula premise, Formula conclusion) {
  return make({.kind = Kind::Implies, .children = {std::move(premise), std::move(conclusion)}});
}

Formula Formula::forall(Variable v, Formula body) {
  return make({.kind = Kind::Forall, .bound = v, .children = {std::move(body)}});
}

Formula Formula::exists(Variable v, Formula body) {
  return make({.kind = Kind::Exists, .bound = v, .children = {std::move(body)}});
}

Formula Formula::quantify(Kind quantifier, std::span<const Variable> vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = quantifier == Kind::Forall ? forall(*it, std::move(body)) : exists(*it, std::move(body));
  return body;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
      return a.atom() == b.atom();
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (a.bound() != b.bound()) return false;
      break;
    default:
      break;
  }
  auto x = a.children(), y = b.children();
  return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
}

std::vector<Variable> free_variables(const Formula& f) {
  std::vector<Variable> out;
  std::vector<Variable> bound;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::Atom: {
        std::vector<Variable> vs;
        collect_variables(g.atom(), vs);
        for (const Variable& v : vs)
          if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
              std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
        return;
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        bound.push_back(g.bound());
        walk(g.body());
        bound.pop_back();
        return;
      default:
        for (const Formula& c : g.children()) walk(c);
    }
  };
  walk(f);
  return out;
}

namespace {

void visit_atoms(const Formula& f, const std::function<void(const Atom&)>& fn) {
  if (f.kind() == Formula::Kind::Atom) {
    fn(f.atom());
    return;
  }
  for (const Formula& c : f.children()) visit_atoms(c, fn);
}

}  // namespace

std::vector<Symbol> predicates_of(const Formula& f) {
  std::vector<Symbol> out;
  visit_atoms(f, [&](const Atom& a) { out.push_back(a.predicate); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Symbol> functions_of(const Formula& f) {
  std::vector<Symbol> out;
  visit_atoms(f, [&](const Atom& a) {
    for (const Term& t : a.args) collect_functions(t, out);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Formula to_formula(const Clause& c) {
  std::vector<Formula> parts;
  for (const Literal& l : c) parts.push_back(Formula::literal(l));
  return Formula::disjunction(std::move(parts));
}

Formula universal_closure(const Clause& c) {
  auto vars = c.variables();
  return Formula::quantify(Formula::Kind::Forall, vars, to_formula(c));
}

std::optional<Clause> as_clause(const Formula& f) {
  const Formula* g = &f;
  while (g->kind() == Formula::Kind::Forall) g = &g->body();
  std::vector<Literal> lits;
  auto add_literal = [&](const Formula& h) {
    if (h.kind() == Formula::Kind::Atom) {
      lits.push_back({true, h.atom()});
      return true;
    }
    if (h.kind() == Formula::Kind::Not && h.body().kind() == Formula::Kind::Atom) {
      lits.push_back({false, h.body().atom()});
      return true;
    }
    return false;
  };
  if (g->kind() == Formula::Kind::False) return Clause{};
  if (g->kind() == Formula::Kind::Or) {
    for (const Formula& c : g->children())
      if (!add_literal(c)) return std::nullopt;
  } else if (!add_literal(*g)) {
    return std::nullopt;
  }
  return Clause(std::move(lits));
}

}  // namespace osfol
