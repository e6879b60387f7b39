#include "osfol/term.hpp"

#include <algorithm>
#include <functional>

namespace osfol {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) { return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)); }

template <typename T>
std::strong_ordering compare_ranges(std::span<const T> a, std::span<const T> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Term Term::variable(Variable v) {
  auto n = std::make_shared<Node>();
  n->is_variable = true;
  n->variable = v;
  n->hash = mix(mix(1, v.name.id()), v.sort.symbol().id());
  return Term(std::move(n));
}

Term Term::application(Symbol function, SortId result, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->variable = {function, result};
  std::size_t h = mix(2, function.id());
  bool ground = true;
  std::uint32_t size = 1;
  for (const Term& a : args) {
    h = mix(h, a.hash());
    ground = ground && a.is_ground();
    size += static_cast<std::uint32_t>(a.size());
  }
  n->args = std::move(args);
  n->hash = h;
  n->ground = ground;
  n->size = size;
  return Term(std::move(n));
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const Term& a : args()) d = std::max(d, a.depth() + 1);
  return d;
}

bool Term::occurs(const Variable& v) const {
  if (is_ground()) return false;
  if (is_variable()) return var() == v;
  return std::any_of(args().begin(), args().end(), [&](const Term& a) { return a.occurs(v); });
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.is_variable() != b.is_variable() || a.node_->variable != b.node_->variable)
    return false;
  const auto& x = a.node_->args;
  const auto& y = b.node_->args;
  return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_variable() != b.is_variable())
    return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.node_->variable <=> b.node_->variable; c != 0) return c;
  return compare_ranges(a.args(), b.args());
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return compare_ranges(std::span<const Term>(a.args), std::span<const Term>(b.args));
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.atom.predicate <=> b.atom.predicate; c != 0) return c;
  if (a.positive != b.positive) return a.positive ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.atom <=> b.atom;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

std::size_t Clause::weight() const {
  std::size_t w = 0;
  for (const Literal& l : literals_) {
    w += 1;
    for (const Term& t : l.atom.args) w += t.size();
  }
  return w;
}

std::vector<Variable> Clause::variables() const {
  std::vector<Variable> out;
  for (const Literal& l : literals_) collect_variables(l.atom, out);
  return out;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  return compare_ranges(a.literals(), b.literals());
}

void collect_variables(const Term& t, std::vector<Variable>& out) {
  if (t.is_ground()) return;
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.var()) == out.end()) out.push_back(t.var());
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

void collect_variables(const Atom& a, std::vector<Variable>& out) {
  for (const Term& t : a.args) collect_variables(t, out);
}

void collect_functions(const Term& t, std::vector<Symbol>& out) {
  if (t.is_variable()) return;
  if (std::find(out.begin(), out.end(), t.functor()) == out.end()) out.push_back(t.functor());
  for (const Term& a : t.args()) collect_functions(a, out);
}

}  // namespace osfol
