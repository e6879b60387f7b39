#include "osfol/fresh.hpp"

#include <set>

#include "osfol/substitution.hpp"

namespace osfol {

Variable FreshNames::variable(std::string_view stem, SortId sort) {
  std::string name(stem);
  name += kFreshSeparator;
  name += std::to_string(++next_variable_);
  return {Symbol(name), sort};
}

Symbol FreshNames::symbol(std::string_view prefix, const std::function<bool(Symbol)>& taken) {
  for (;;) {
    Symbol s(std::string(prefix) + std::to_string(++next_symbol_));
    if (!taken(s)) return s;
  }
}

std::string FreshNames::stem_of(std::string_view name) {
  auto pos = name.find(kFreshSeparator);
  std::string stem(name.substr(0, pos));
  return stem.empty() ? std::string("x") : stem;
}

Clause normalize_variables(const Clause& c) {
  auto vars = c.variables();
  std::set<std::string> used;
  Substitution rename;
  bool identity = true;
  for (const Variable& v : vars) {
    std::string stem = FreshNames::stem_of(v.name.name());
    std::string name = stem;
    for (int k = 2; used.contains(name); ++k) name = stem + "_" + std::to_string(k);
    used.insert(name);
    if (name != v.name.name()) identity = false;
    rename.bind(v, Term::variable({Symbol(name), v.sort}));
  }
  return identity ? c : rename.apply(c);
}

}  // namespace osfol
