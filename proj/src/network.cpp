#include "osfol/network.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "osfol/error.hpp"

namespace osfol {

std::set<Symbol> language(const Agent& a) {
  std::set<Symbol> out;
  for (const auto& [name, decl] : a.signature.predicates())
    if (!a.signature.is_global(name)) out.insert(name);
  for (const auto& [name, decl] : a.signature.functions())
    if (!a.signature.is_global(name)) out.insert(name);
  return out;
}

namespace {

void term_symbols(const Term& t, const Signature& sig, std::set<Symbol>& out) {
  if (t.is_variable()) return;
  if (!sig.is_global(t.functor())) out.insert(t.functor());
  for (const auto& a : t.args()) term_symbols(a, sig, out);
}

std::set<Symbol> global_symbols(const Signature& sig) {
  std::set<Symbol> out;
  for (const auto& [name, decl] : sig.predicates())
    if (sig.is_global(name)) out.insert(name);
  for (const auto& [name, decl] : sig.functions())
    if (sig.is_global(name)) out.insert(name);
  return out;
}

}  // namespace

std::set<Symbol> symbols_of(const Clause& c, const Signature& sig) {
  std::set<Symbol> out;
  for (const auto& l : c) {
    if (!sig.is_global(l.atom.predicate)) out.insert(l.atom.predicate);
    for (const auto& t : l.atom.args) term_symbols(t, sig, out);
  }
  return out;
}

std::set<Symbol> predicates_of(const Clause& c, const Signature& sig) {
  std::set<Symbol> out;
  for (const auto& l : c)
    if (!sig.is_global(l.atom.predicate)) out.insert(l.atom.predicate);
  return out;
}

std::set<Symbol> common_language(const Agent& u, const Agent& v) {
  auto lu = language(u);
  auto lv = language(v);
  std::set<Symbol> out;
  std::set_intersection(lu.begin(), lu.end(), lv.begin(), lv.end(), std::inserter(out, out.end()));
  auto globals = global_symbols(u.signature);
  out.insert(globals.begin(), globals.end());
  return out;
}

std::set<Symbol> common_predicates(const Agent& u, const Agent& v) {
  std::set<Symbol> out;
  for (const auto& [name, decl] : u.signature.predicates())
    if (!u.signature.is_global(name) && v.signature.find_predicate(name)) out.insert(name);
  return out;
}

AgentNetwork::AgentNetwork(std::shared_ptr<const SortHierarchy> hierarchy, std::vector<Agent> agents,
                           std::string decider)
    : hierarchy_(std::move(hierarchy)), agents_(std::move(agents)), decider_(std::move(decider)) {
  std::set<std::string> ids;
  for (const auto& a : agents_)
    if (!ids.insert(a.id).second) throw Error("duplicate agent '" + a.id + "'");
  if (!ids.contains(decider_)) throw Error("decider '" + decider_ + "' is not an agent");
  for (const auto& a : agents_)
    for (const auto& t : a.reports_to)
      if (!ids.contains(t)) throw Error("agent '" + a.id + "' reports to unknown agent '" + t + "'");
}

const Agent* AgentNetwork::find(std::string_view id) const {
  for (const auto& a : agents_)
    if (a.id == id) return &a;
  return nullptr;
}

Agent* AgentNetwork::find(std::string_view id) {
  for (auto& a : agents_)
    if (a.id == id) return &a;
  return nullptr;
}

std::vector<std::pair<std::string, std::string>> AgentNetwork::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : agents_)
    for (const auto& t : a.reports_to) out.emplace_back(a.id, t);
  return out;
}

std::vector<std::string> AgentNetwork::predecessors(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& a : agents_)
    if (std::find(a.reports_to.begin(), a.reports_to.end(), id) != a.reports_to.end()) out.push_back(a.id);
  return out;
}

namespace {

/// Agents from which `target` is reachable along edges, restricted to `within`.
std::set<std::string> reaching(const AgentNetwork& n, const std::string& target,
                               const std::set<std::string>* within = nullptr) {
  std::set<std::string> seen{target};
  std::deque<std::string> queue{target};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& p : n.predecessors(cur)) {
      if (within && !within->contains(p)) continue;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

bool is_acyclic(const AgentNetwork& n, std::string& witness) {
  std::map<std::string, int> state;
  std::function<bool(const Agent&)> visit = [&](const Agent& a) {
    state[a.id] = 1;
    for (const auto& t : a.reports_to) {
      if (state[t] == 1) {
        witness = a.id + " -> " + t;
        return false;
      }
      if (state[t] == 0 && !visit(*n.find(t))) return false;
    }
    state[a.id] = 2;
    return true;
  };
  for (const auto& a : n.agents())
    if (state[a.id] == 0 && !visit(a)) return false;
  return true;
}

std::string join(const std::set<Symbol>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x.name();
  return out;
}

}  // namespace

bool ValidationReport::certified() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

bool ValidationReport::runnable() const {
  for (const char* name : {"acyclic", "decider", "declarations"})
    if (const ValidationCheck* c = find(name); c && !c->passed) return false;
  return true;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string ValidationReport::to_key_values() const {
  std::ostringstream out;
  out << "certified=" << (certified() ? "true" : "false") << "\n";
  for (const auto& c : checks) {
    out << "check." << c.name << "=" << (c.passed ? "pass" : "fail") << "\n";
    for (const auto& d : c.diagnostics) out << "diagnostic." << c.name << "=" << d << "\n";
  }
  for (const auto& n : notes) out << "note=" << n << "\n";
  return out.str();
}

std::optional<std::set<Symbol>> peak_violation(const AgentNetwork& n) {
  std::set<Symbol> all;
  std::map<std::string, std::set<Symbol>> labels;
  for (const auto& a : n.agents()) {
    labels[a.id] = language(a);
    all.insert(labels[a.id].begin(), labels[a.id].end());
  }
  std::vector<Symbol> universe(all.begin(), all.end());
  if (universe.size() > 20) throw std::invalid_argument("peak_violation: too many symbols for exhaustive check");
  for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
    std::set<Symbol> omega;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask & (1u << i)) omega.insert(universe[i]);
    std::set<std::string> carrier;
    for (const auto& [id, l] : labels)
      if (std::includes(l.begin(), l.end(), omega.begin(), omega.end())) carrier.insert(id);
    if (carrier.empty()) continue;
    bool has_decider = false;
    for (const auto& c : carrier) {
      if (reaching(n, c, &carrier).size() == carrier.size()) {
        has_decider = true;
        break;
      }
    }
    if (!has_decider) return omega;
  }
  return std::nullopt;
}

ValidationReport validate_tree(const AgentNetwork& n, bool exhaustive_peak) {
  ValidationReport r;

  ValidationCheck decls{"declarations", true, {}};
  std::map<Symbol, std::pair<std::string, const Agent*>> first;
  for (const auto& a : n.agents()) {
    for (const auto& s : language(a)) {
      auto [it, inserted] = first.emplace(s, std::pair{a.id, &a});
      if (inserted) continue;
      const Signature& other = it->second.second->signature;
      bool same = (a.signature.find_predicate(s) && other.find_predicate(s) &&
                   *a.signature.find_predicate(s) == *other.find_predicate(s)) ||
                  (a.signature.find_function(s) && other.find_function(s) &&
                   *a.signature.find_function(s) == *other.find_function(s));
      if (!same) {
        decls.passed = false;
        decls.diagnostics.push_back("symbol " + s.name() + " is declared differently by " + it->second.first +
                                    " and " + a.id);
      }
    }
  }

  ValidationCheck acyclic{"acyclic", true, {}};
  std::string cycle;
  if (!is_acyclic(n, cycle)) {
    acyclic.passed = false;
    acyclic.diagnostics.push_back("cycle through edge " + cycle);
  }

  ValidationCheck degree{"out-degree", true, {}};
  for (const auto& a : n.agents()) {
    std::size_t want = a.id == n.decider() ? 0 : 1;
    if (a.reports_to.size() != want) {
      degree.passed = false;
      degree.diagnostics.push_back(a.id + " has " + std::to_string(a.reports_to.size()) + " outgoing edges, expected " +
                                   std::to_string(want));
    }
  }

  ValidationCheck decider{"decider", true, {}};
  auto reach = reaching(n, n.decider());
  for (const auto& a : n.agents())
    if (!reach.contains(a.id)) {
      decider.passed = false;
      decider.diagnostics.push_back(a.id + " cannot reach decider " + n.decider());
    }

  ValidationCheck peak{"peak", true, {}};
  if (degree.passed && acyclic.passed) {
    for (const auto& u : n.agents()) {
      if (u.id == n.decider()) continue;
      const Agent& v = *n.find(u.reports_to.front());
      auto subtree = reaching(n, u.id);
      auto lu = language(u);
      auto lv = language(v);
      for (const auto& s : lu) {
        if (lv.contains(s)) continue;
        for (const auto& w : n.agents()) {
          if (subtree.contains(w.id) || !language(w).contains(s)) continue;
          peak.passed = false;
          peak.diagnostics.push_back("symbol " + s.name() + " of " + u.id + " also occurs in " + w.id +
                                     " but not in " + v.id);
          break;
        }
      }
    }
  } else {
    peak.passed = false;
    peak.diagnostics.push_back("not checked: the network is not a tree");
  }

  ValidationCheck edge_preds{"edge-predicates", true, {}};
  for (const auto& [from, to] : n.edges())
    if (common_predicates(*n.find(from), *n.find(to)).empty()) {
      edge_preds.passed = false;
      edge_preds.diagnostics.push_back(from + " -> " + to + " shares no predicate symbol");
    }

  ValidationCheck inhabited{"inhabitation", true, {}};
  for (SortId s : n.hierarchy().uninhabited()) {
    inhabited.passed = false;
    inhabited.diagnostics.push_back("sort " + s.name() + " has no witness");
  }
  for (SortId s : n.hierarchy().sorts())
    if (n.hierarchy().is_synthetic(s)) r.notes.push_back("synthetic sort " + s.name() + " exempt from inhabitation");
  if (!n.hierarchy().is_lattice()) {
    inhabited.passed = false;
    inhabited.diagnostics.push_back("sort hierarchy lacks unique greatest lower bounds");
  }

  r.checks = {decls, acyclic, degree, decider, peak, edge_preds, inhabited};

  if (exhaustive_peak) {
    ValidationCheck full{"peak-exhaustive", true, {}};
    std::set<Symbol> all;
    for (const auto& a : n.agents()) {
      auto l = language(a);
      all.insert(l.begin(), l.end());
    }
    if (all.size() > 12) {
      r.notes.push_back("exhaustive peak check skipped: " + std::to_string(all.size()) + " symbols");
    } else if (auto omega = peak_violation(n)) {
      full.passed = false;
      full.diagnostics.push_back("agents carrying {" + join(*omega) + "} have no decider");
    }
    r.checks.push_back(full);
  }
  if (!r.certified() && r.runnable()) r.notes.push_back("not a signature tree: no completeness guarantee");
  return r;
}

std::vector<Clause> combined_kb(const AgentNetwork& n) {
  std::vector<Clause> out;
  std::set<Clause> seen;
  for (const auto& a : n.agents())
    for (const auto& c : a.knowledge)
      if (seen.insert(c).second) out.push_back(c);
  return out;
}

std::map<std::string, std::size_t> distance_to_decider(const AgentNetwork& n) {
  std::map<std::string, std::size_t> dist{{n.decider(), 0}};
  std::deque<std::string> queue{n.decider()};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& p : n.predecessors(cur))
      if (!dist.contains(p)) {
        dist[p] = dist[cur] + 1;
        queue.push_back(p);
      }
  }
  return dist;
}

}  // namespace osfol
