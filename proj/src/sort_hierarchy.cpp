#include "osfol/sort_hierarchy.hpp"

#include <algorithm>
#include <set>

#include "osfol/error.hpp"

namespace osfol {

SortHierarchy::SortHierarchy() {
  sorts_ = {SortId(kTopSortName), SortId(kBottomSortName)};
  synthetic_ = {0, 0};
  leq_ = {1, 0, 1, 1};
  index_ = {{sorts_[0].symbol(), 0}, {sorts_[1].symbol(), 1}};
}

SortHierarchy SortHierarchy::build(std::span<const SortId> sorts, std::span<const std::pair<SortId, SortId>> edges,
                                   std::span<const Witness> witnesses) {
  SortHierarchy h;
  for (SortId s : sorts) {
    if (h.index_.contains(s.symbol())) continue;
    h.index_.emplace(s.symbol(), h.sorts_.size());
    h.sorts_.push_back(s);
    h.synthetic_.push_back(0);
  }
  const std::size_t n = h.sorts_.size();
  h.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    h.leq_[i * n + i] = 1;
    h.leq_[i * n + 0] = 1;  // everything below TOP
    h.leq_[1 * n + i] = 1;  // BOT below everything
  }
  for (const auto& [lo, hi] : edges) {
    if (!h.contains(lo)) throw SortHierarchyError("unknown sort '" + lo.name() + "' in subsort edge");
    if (!h.contains(hi)) throw SortHierarchyError("unknown sort '" + hi.name() + "' in subsort edge");
    h.leq_[h.index_of(lo) * n + h.index_of(hi)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (h.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (h.leq_[k * n + j]) h.leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (h.leq_[i * n + j] && h.leq_[j * n + i])
        throw SortHierarchyError("sorts '" + h.sorts_[i].name() + "' and '" + h.sorts_[j].name() +
                                 "' are mutually subsorts (the order must be antisymmetric)");
  for (const Witness& w : witnesses) {
    if (!h.contains(w.sort)) throw SortHierarchyError("unknown sort '" + w.sort.name() + "' for witness");
    if (w.sort == h.bottom()) throw SortHierarchyError("witness '" + w.constant.name() + "' declared for BOT");
    h.witnesses_.push_back(w);
  }
  return h;
}

std::size_t SortHierarchy::index_of(SortId s) const {
  auto it = index_.find(s.symbol());
  if (it == index_.end()) throw SortHierarchyError("unknown sort '" + s.name() + "'");
  return it->second;
}

bool SortHierarchy::leq(SortId a, SortId b) const { return leq_index(index_of(a), index_of(b)); }

GlbResult SortHierarchy::glb(std::span<const SortId> input) const {
  if (input.empty()) throw SortHierarchyError("glb of an empty sort set");
  std::vector<std::size_t> idx;
  for (SortId s : input) idx.push_back(index_of(s));
  std::vector<std::size_t> lower;
  for (std::size_t c = 0; c < sorts_.size(); ++c)
    if (std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return leq_index(c, i); })) lower.push_back(c);
  GlbResult result;
  for (std::size_t m : lower) {
    bool is_max = true;
    bool above_all = true;
    for (std::size_t l : lower) {
      if (l != m && leq_index(m, l)) is_max = false;
      if (!leq_index(l, m)) above_all = false;
    }
    if (above_all) {
      result.glb = sorts_[m];
      result.maximal_lower_bounds = {sorts_[m]};
      return result;
    }
    if (is_max) result.maximal_lower_bounds.push_back(sorts_[m]);
  }
  std::sort(result.maximal_lower_bounds.begin(), result.maximal_lower_bounds.end());
  return result;
}

std::optional<SortId> SortHierarchy::meet(SortId a, SortId b) const {
  if (leq(a, b)) return a;
  if (leq(b, a)) return b;
  const SortId pair[] = {a, b};
  return glb(pair).glb;
}

std::vector<std::pair<SortId, SortId>> SortHierarchy::cover_edges() const {
  std::vector<std::pair<SortId, SortId>> out;
  const std::size_t n = sorts_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_index(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && leq_index(i, k) && leq_index(k, j)) covered = false;
      if (covered) out.emplace_back(sorts_[i], sorts_[j]);
    }
  return out;
}

std::vector<std::pair<SortId, SortId>> SortHierarchy::glb_violations() const {
  std::vector<std::pair<SortId, SortId>> out;
  for (std::size_t i = 0; i < sorts_.size(); ++i)
    for (std::size_t j = i + 1; j < sorts_.size(); ++j)
      if (!meet(sorts_[i], sorts_[j])) out.emplace_back(sorts_[i], sorts_[j]);
  return out;
}

std::vector<SortId> SortHierarchy::uninhabited() const {
  std::vector<SortId> out;
  for (std::size_t i = 2; i < sorts_.size(); ++i) {
    if (synthetic_[i]) continue;
    bool ok = std::any_of(witnesses_.begin(), witnesses_.end(),
                          [&](const Witness& w) { return leq_index(index_of(w.sort), i); });
    if (!ok) out.push_back(sorts_[i]);
  }
  return out;
}

SortHierarchy SortHierarchy::synthesize_glbs() const {
  if (is_lattice()) return *this;
  const std::size_t n = sorts_.size();
  using DownSet = std::vector<char>;
  auto down = [&](std::size_t i) {
    DownSet d(n, 0);
    for (std::size_t k = 0; k < n; ++k) d[k] = leq_index(k, i);
    return d;
  };
  std::vector<DownSet> family;
  for (std::size_t i = 0; i < n; ++i) family.push_back(down(i));
  std::set<DownSet> known(family.begin(), family.end());
  // Close the family of down-sets under pairwise intersection.
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      DownSet meet_set(n);
      for (std::size_t k = 0; k < n; ++k) meet_set[k] = family[i][k] && family[j][k];
      if (known.insert(meet_set).second) family.push_back(meet_set);
    }

  auto subset = [&](const DownSet& a, const DownSet& b) {
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] && !b[k]) return false;
    return true;
  };

  // Name each new element after the minimal original sorts above it.
  std::vector<std::pair<std::string, DownSet>> added;
  std::set<std::string> taken;
  for (SortId s : sorts_) taken.insert(s.name());
  for (std::size_t f = n; f < family.size(); ++f) {
    std::vector<std::size_t> uppers;
    for (std::size_t u = 0; u < n; ++u)
      if (subset(family[f], family[u])) uppers.push_back(u);
    std::vector<std::string> names;
    for (std::size_t u : uppers) {
      bool minimal = std::none_of(uppers.begin(), uppers.end(),
                                  [&](std::size_t v) { return v != u && leq_index(v, u); });
      if (minimal) names.push_back(sorts_[u].name());
    }
    std::sort(names.begin(), names.end());
    std::string base = "glb";
    for (const auto& nm : names) base += "_" + nm;
    added.emplace_back(base, family[f]);
  }
  std::sort(added.begin(), added.end());

  SortHierarchy h = *this;
  std::vector<DownSet> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(family[i]);
  for (auto& [base, set] : added) {
    std::string name = base;
    for (int k = 2; taken.contains(name); ++k) name = base + "_" + std::to_string(k);
    taken.insert(name);
    h.index_.emplace(Symbol(name), h.sorts_.size());
    h.sorts_.emplace_back(name);
    h.synthetic_.push_back(1);
    all.push_back(set);
  }
  const std::size_t m = h.sorts_.size();
  h.leq_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h.leq_[i * m + j] = subset(all[i], all[j]);
  return h;
}

SortHierarchy load_sort_module(std::span<const SortId> declared, std::span<const SortModuleClause> clauses) {
  std::vector<SortId> sorts(declared.begin(), declared.end());
  std::vector<std::pair<SortId, SortId>> edges;
  std::vector<Witness> witnesses;
  auto where = [](const SortModuleClause& c) { return c.line > 0 ? "line " + std::to_string(c.line) + ": " : std::string{}; };
  auto note = [&](Symbol s) {
    SortId id(s);
    if (std::find(sorts.begin(), sorts.end(), id) == sorts.end()) sorts.push_back(id);
  };
  for (const SortModuleClause& c : clauses) {
    if (c.body.empty()) {
      if (c.head.argument_is_variable)
        throw SortHierarchyError(where(c) + "sort module fact '" + c.head.sort.name() + "(" + c.head.argument.name() +
                                 ")' must be ground");
      note(c.head.sort);
      witnesses.push_back({c.head.argument, SortId(c.head.sort)});
    } else if (c.body.size() == 1 && c.body[0].argument_is_variable && c.head.argument_is_variable &&
               c.body[0].argument == c.head.argument) {
      note(c.body[0].sort);
      note(c.head.sort);
      edges.emplace_back(SortId(c.body[0].sort), SortId(c.head.sort));
    } else {
      throw SortHierarchyError(where(c) +
                               "unsupported sort module clause: only subsort axioms 's1(x) -> s2(x)' and ground "
                               "facts 's(c)' are accepted");
    }
  }
  SortHierarchy h = SortHierarchy::build(sorts, edges, witnesses);
  if (auto empty = h.uninhabited(); !empty.empty()) {
    std::string names;
    for (SortId s : empty) names += (names.empty() ? "" : ", ") + s.name();
    throw SortHierarchyError("uninhabited sorts (no witness constant): " + names);
  }
  return h;
}

}  // namespace osfol
