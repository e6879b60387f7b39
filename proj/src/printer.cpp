#include "osfol/printer.hpp"

namespace osfol {

std::string to_string(const Variable& v) { return v.name.name() + ":" + v.sort.name(); }

std::string to_string(const Term& t) {
  if (t.is_variable()) return to_string(t.var());
  std::string out = t.functor().name();
  if (t.args().empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    out += to_string(t.args()[i]);
  }
  return out + ')';
}

std::string to_string(const Atom& a) {
  std::string out = a.predicate.name();
  if (a.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a.args[i]);
  }
  return out + ')';
}

std::string to_string(const Literal& l) { return (l.positive ? "" : "~") + to_string(l.atom); }

std::string to_string(const Clause& c) {
  if (c.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c[i]);
  }
  return out;
}

namespace {

// Binding strength: higher binds tighter.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Not:
      return 4;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return 0;
    default:
      return 5;
  }
}

std::string print(const Formula& f);

std::string print_child(const Formula& f, int parent, bool strict) {
  int p = precedence(f.kind());
  bool paren = strict ? p <= parent : p < parent;
  std::string s = print(f);
  return paren ? "(" + s + ")" : s;
}

std::string print(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return "$true";
    case Formula::Kind::False:
      return "$false";
    case Formula::Kind::Atom:
      return to_string(f.atom());
    case Formula::Kind::Not:
      return "~" + print_child(f.body(), 4, false);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      int p = precedence(f.kind());
      std::string sep = f.kind() == Formula::Kind::And ? " & " : " | ";
      std::string out;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        out += print_child(f.children()[i], p, true);
      }
      return out;
    }
    case Formula::Kind::Implies:
      return print_child(f.children()[0], 1, true) + " => " + print_child(f.children()[1], 1, false);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string out;
      const Formula* g = &f;
      std::optional<Formula::Kind> current;
      while (g->is_quantifier()) {
        if (current != g->kind()) {
          if (current) out += ' ';
          out += g->kind() == Formula::Kind::Forall ? "forall" : "exists";
          current = g->kind();
        }
        out += ' ' + to_string(g->bound());
        g = &g->body();
      }
      return out + ". " + print(*g);
    }
  }
  return {};
}

}  // namespace

std::string to_string(const Formula& f) { return print(f); }

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(v) + "/" + to_string(t);
  }
  return out + "}";
}

std::string to_report_string(const Formula& f) {
  if (auto c = as_clause(f)) return to_string(*c);
  return to_string(f);
}

}  // namespace osfol
