#include "osfol/signature.hpp"

#include "osfol/error.hpp"

namespace osfol {
std::string format_diagnostic(const SortDiagnostic& d) {
  std::string m = d.message;
  if (d.position) m += " (argument " + std::to_string(d.position) + " of '" + d.symbol.name() + "')";
  if (d.expected && d.actual) m += ": expected a subsort of " + d.expected->name() + ", got " + d.actual->name();
  return m;
}

Signature::Signature() : Signature(SortHierarchy{}) {}

Signature::Signature(SortHierarchy hierarchy)
    : hierarchy_(std::make_shared<const SortHierarchy>(std::move(hierarchy))) {
  for (SortId s : hierarchy_->sorts()) {
    if (s == hierarchy_->top() || s == hierarchy_->bottom()) continue;
    predicates_[s.symbol()] = {s.symbol(), {hierarchy_->top()}, true};
  }
  for (const Witness& w : hierarchy_->witnesses()) declare_function(w.constant, {}, w.sort);
}

void Signature::declare_predicate(Symbol name, std::vector<SortId> args) {
  for (SortId s : args)
    if (!hierarchy_->contains(s))
      throw SortError("unknown sort '" + s.name() + "' in declaration of predicate '" + name.name() + "'");
  if (find_function(name)) throw SortError("'" + name.name() + "' is already declared as a function");
  PredicateDecl decl{name, std::move(args), false};
  if (auto it = predicates_.find(name); it != predicates_.end()) {
    if (it->second.sort_predicate) throw SortError("'" + name.name() + "' is a sort predicate");
    if (it->second != decl) throw SortError("conflicting declarations of predicate '" + name.name() + "'");
    return;
  }
  predicates_.emplace(name, std::move(decl));
}

void Signature::declare_function(Symbol name, std::vector<SortId> args, SortId result) {
  for (SortId s : args)
    if (!hierarchy_->contains(s))
      throw SortError("unknown sort '" + s.name() + "' in declaration of function '" + name.name() + "'");
  if (!hierarchy_->contains(result))
    throw SortError("unknown sort '" + result.name() + "' in declaration of function '" + name.name() + "'");
  if (find_predicate(name)) throw SortError("'" + name.name() + "' is already declared as a predicate");
  FunctionDecl decl{name, std::move(args), result};
  if (auto it = functions_.find(name); it != functions_.end()) {
    if (it->second != decl) throw SortError("conflicting declarations of function '" + name.name() + "'");
    return;
  }
  functions_.emplace(name, std::move(decl));
}

const PredicateDecl* Signature::find_predicate(Symbol name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const FunctionDecl* Signature::find_function(Symbol name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

bool Signature::is_sort_predicate(Symbol name) const {
  const PredicateDecl* p = find_predicate(name);
  return p && p->sort_predicate;
}

bool Signature::is_global(Symbol name) const {
  if (is_sort_predicate(name)) return true;
  for (const Witness& w : hierarchy_->witnesses())
    if (w.constant == name) return true;
  return false;
}

Term Signature::make_term(Symbol function, std::vector<Term> args) const {
  const FunctionDecl* f = find_function(function);
  if (!f) throw SortError("undeclared function '" + function.name() + "'");
  Term t = Term::application(function, f->result, std::move(args));
  if (auto d = check(t)) throw SortError(format_diagnostic(*d));
  return t;
}

Atom Signature::make_atom(Symbol predicate, std::vector<Term> args) const {
  Atom a{predicate, std::move(args)};
  if (auto d = check(a)) throw SortError(format_diagnostic(*d));
  return a;
}

std::optional<SortDiagnostic> Signature::check(const Term& t) const {
  if (t.is_variable()) {
    if (!hierarchy_->contains(t.var().sort))
      return SortDiagnostic{t.var().name, 0, {}, {}, "unknown sort '" + t.var().sort.name() + "'"};
    return std::nullopt;
  }
  const FunctionDecl* f = find_function(t.functor());
  if (!f) return SortDiagnostic{t.functor(), 0, {}, {}, "undeclared function '" + t.functor().name() + "'"};
  if (f->args.size() != t.args().size())
    return SortDiagnostic{t.functor(), 0, {}, {},
                          "function '" + t.functor().name() + "' expects " + std::to_string(f->args.size()) +
                              " arguments, got " + std::to_string(t.args().size())};
  if (f->result != t.sort())
    return SortDiagnostic{t.functor(), 0, f->result, t.sort(), "term carries a sort other than the declared result"};
  for (std::size_t i = 0; i < f->args.size(); ++i) {
    if (auto d = check(t.args()[i])) return d;
    if (!hierarchy_->leq(t.args()[i].sort(), f->args[i]))
      return SortDiagnostic{t.functor(), i + 1, f->args[i], t.args()[i].sort(), "ill-sorted argument"};
  }
  return std::nullopt;
}

std::optional<SortDiagnostic> Signature::check(const Atom& a) const {
  const PredicateDecl* p = find_predicate(a.predicate);
  if (!p) return SortDiagnostic{a.predicate, 0, {}, {}, "undeclared predicate '" + a.predicate.name() + "'"};
  if (p->args.size() != a.args.size())
    return SortDiagnostic{a.predicate, 0, {}, {},
                          "predicate '" + a.predicate.name() + "' expects " + std::to_string(p->args.size()) +
                              " arguments, got " + std::to_string(a.args.size())};
  for (std::size_t i = 0; i < p->args.size(); ++i) {
    if (auto d = check(a.args[i])) return d;
    if (!hierarchy_->leq(a.args[i].sort(), p->args[i]))
      return SortDiagnostic{a.predicate, i + 1, p->args[i], a.args[i].sort(), "ill-sorted argument"};
  }
  return std::nullopt;
}

std::optional<SortDiagnostic> Signature::check(const Clause& c) const {
  for (const Literal& l : c)
    if (auto d = check(l.atom)) return d;
  return std::nullopt;
}

std::optional<SortDiagnostic> Signature::check(const Formula& f) const {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return check(f.atom());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (!hierarchy_->contains(f.bound().sort))
        return SortDiagnostic{f.bound().name, 0, {}, {}, "unknown sort '" + f.bound().sort.name() + "'"};
      return check(f.body());
    default:
      for (const Formula& c : f.children())
        if (auto d = check(c)) return d;
      return std::nullopt;
  }
}

}  // namespace osfol
