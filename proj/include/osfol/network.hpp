#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osfol/signature.hpp"

namespace osfol {

struct Agent {
  std::string id;
  std::vector<std::string> reports_to;
  Signature signature;
  std::vector<Clause> knowledge;
};

/// L(a): declared predicate and function symbols, without the global ones
/// (sort predicates and witness constants).
std::set<Symbol> language(const Agent& a);

/// Symbols of `c` (predicates and functions) that are not global.
std::set<Symbol> symbols_of(const Clause& c, const Signature& sig);
std::set<Symbol> predicates_of(const Clause& c, const Signature& sig);

/// l(u,v): L(u) ∩ L(v) together with every global symbol.
std::set<Symbol> common_language(const Agent& u, const Agent& v);
/// P(u,v): the non-global predicate symbols shared by u and v.
std::set<Symbol> common_predicates(const Agent& u, const Agent& v);

/// Agents with "reports to" edges and a designated decider.
class AgentNetwork {
 public:
  AgentNetwork(std::shared_ptr<const SortHierarchy> hierarchy, std::vector<Agent> agents, std::string decider);

  const SortHierarchy& hierarchy() const { return *hierarchy_; }
  std::shared_ptr<const SortHierarchy> shared_hierarchy() const { return hierarchy_; }
  const std::vector<Agent>& agents() const { return agents_; }
  std::vector<Agent>& agents() { return agents_; }
  const Agent* find(std::string_view id) const;
  Agent* find(std::string_view id);
  const std::string& decider() const { return decider_; }

  std::vector<std::pair<std::string, std::string>> edges() const;
  std::vector<std::string> predecessors(std::string_view id) const;

 private:
  std::shared_ptr<const SortHierarchy> hierarchy_;
  std::vector<Agent> agents_;
  std::string decider_;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> diagnostics;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<std::string> notes;

  /// Every check passed: the network is a signature tree.
  bool certified() const;
  /// Acyclic and pointed, so the report procedure can run (possibly without
  /// a completeness guarantee).
  bool runnable() const;
  const ValidationCheck* find(std::string_view name) const;
  std::string to_key_values() const;
};

/// Checks acyclicity, out-degree, the decider, the per-symbol peak
/// condition, shared edge predicates, and sort inhabitation. With
/// `exhaustive_peak` the peak property is also checked over every symbol set
/// when there are at most 12 symbols.
ValidationReport validate_tree(const AgentNetwork& n, bool exhaustive_peak = false);

/// Brute-force peak property: for every symbol set, the agents carrying it
/// induce a subgraph with a decider. Empty when it holds, else the offending
/// symbol set.
std::optional<std::set<Symbol>> peak_violation(const AgentNetwork& n);

/// Union of all knowledge bases, duplicates removed, agent order.
std::vector<Clause> combined_kb(const AgentNetwork& n);

/// Edge count of the shortest path to the decider; agents that cannot reach
/// it are absent.
std::map<std::string, std::size_t> distance_to_decider(const AgentNetwork& n);

}  // namespace osfol
