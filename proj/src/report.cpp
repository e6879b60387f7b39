#include "osfol/report.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "osfol/error.hpp"
#include "osfol/printer.hpp"
#include "osfol/unskolemize.hpp"

namespace osfol {

std::string to_string(const Message& m) {
  std::string out = "send " + m.sender + " -> " + m.receiver + " " + std::to_string(m.payload.size());
  for (std::size_t i = 0; i < m.payload.size(); ++i) out += (i == 0 ? " | " : " ; ") + to_report_string(m.payload[i]);
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kProved:
      return "proved";
    case Verdict::kSaturated:
      return "saturated";
    case Verdict::kResourceLimit:
      return "resource-limit";
    case Verdict::kSendFailure:
      return "send-failure";
  }
  return "?";
}

std::string ReportOutcome::log() const {
  std::string out;
  for (const auto& m : messages) out += to_string(m) + "\n";
  return out;
}

namespace {

bool within(const std::vector<Symbol>& symbols, const std::set<Symbol>& allowed) {
  return std::all_of(symbols.begin(), symbols.end(), [&](Symbol s) { return allowed.contains(s); });
}

}  // namespace

SendResult osfol_send(const Agent& u, const Agent& v, std::span<const Clause> k) {
  SendResult r;
  const std::set<Symbol> shared_preds = common_predicates(u, v);
  const std::set<Symbol> common = common_language(u, v);

  std::vector<Formula> payload;
  std::set<Clause> seen;
  std::vector<Clause> w;
  std::set<Symbol> skolems;
  for (const auto& c : k) {
    if (!seen.insert(c).second) continue;
    auto preds = predicates_of(c, u.signature);
    bool eligible = c.empty() || std::includes(shared_preds.begin(), shared_preds.end(), preds.begin(), preds.end());
    if (!eligible) {
      r.retained.push_back(c);
      continue;
    }
    std::set<Symbol> x;
    for (const auto& s : symbols_of(c, u.signature))
      if (!common.contains(s)) x.insert(s);
    if (x.empty()) {
      payload.push_back(universal_closure(c));
    } else {
      w.push_back(c);
      skolems.insert(x.begin(), x.end());
    }
  }

  if (!w.empty()) {
    UnskolemizeResult un = unskolemize(w, skolems);
    if (!un) {
      r.failure = SendFailure{u.id, v.id, "un-Skolemization failed: " + *un.failure};
      return r;
    }
    for (const auto& f : un.as_formulas()) {
      if (!within(predicates_of(f), common) || !within(functions_of(f), common)) {
        r.failure = SendFailure{u.id, v.id, "formula outside the common language: " + to_string(f)};
        return r;
      }
      payload.push_back(f);
    }
  }
  r.message = Message{u.id, v.id, std::move(payload)};
  return r;
}

void osfol_recv(const Message& m, Signature& signature, std::vector<InputClause>& working_set, SkolemTable& table) {
  for (const auto& f : m.payload) {
    if (auto c = as_clause(f)) {
      working_set.push_back({*c, Rule::kReceived, m.sender});
      continue;
    }
    for (auto& c : clausify(f, signature, table, m.receiver))
      working_set.push_back({std::move(c), Rule::kReceived, m.sender});
  }
}

Signature merged_signature(const AgentNetwork& n) {
  Signature sig(n.hierarchy());
  for (const auto& a : n.agents()) {
    for (const auto& [name, decl] : a.signature.predicates())
      if (!decl.sort_predicate && !sig.find_predicate(name)) sig.declare_predicate(name, decl.args);
    for (const auto& [name, decl] : a.signature.functions())
      if (!sig.find_function(name)) sig.declare_function(name, decl.args, decl.result);
  }
  return sig;
}

namespace {

void require_closed(const Formula& q) {
  auto free = free_variables(q);
  if (!free.empty()) throw Error("query has free variable " + to_string(free.front()));
}

std::vector<Clause> clauses_of(const std::vector<InputClause>& in) {
  std::vector<Clause> out;
  for (const auto& c : in) out.push_back(c.clause);
  return out;
}

}  // namespace

ReportOutcome osfol_report(AgentNetwork& n, const Formula& q, const ReportOptions& options) {
  require_closed(q);
  ValidationReport validation = validate_tree(n);
  if (!validation.runnable()) {
    std::string why;
    for (const auto& c : validation.checks)
      for (const auto& d : c.diagnostics) why += (why.empty() ? "" : "; ") + d;
    throw Error("network cannot run the report procedure: " + why);
  }

  ReportOutcome out;
  if (!validation.certified()) out.warnings.push_back("not a signature tree: no completeness guarantee");

  const SortHierarchy& sorts = n.hierarchy();
  SkolemTable table(options.skolem_prefix);
  std::map<std::string, Signature> session_sigs;
  std::map<std::string, std::vector<InputClause>> working;
  for (const auto& a : n.agents()) {
    session_sigs.emplace(a.id, a.signature);
    auto& w = working[a.id];
    for (const auto& c : a.knowledge) w.push_back({c, Rule::kInput, a.id});
  }
  const std::string& decider = n.decider();
  if (auto bad = session_sigs.at(decider).check(q)) throw SortError("query: " + format_diagnostic(*bad));
  for (auto& c : clausify(Formula::negation(q), session_sigs.at(decider), table, decider))
    working[decider].push_back({std::move(c), Rule::kQuery, decider});

  auto dist = distance_to_decider(n);
  std::map<std::size_t, std::vector<std::string>, std::greater<>> levels;
  for (const auto& a : n.agents())
    if (a.id != decider) levels[dist.at(a.id)].push_back(a.id);

  std::mt19937_64 rng(options.seed);
  bool interior_limit = false;
  for (auto& [d, ids] : levels) {
    if (options.seed != 0) std::shuffle(ids.begin(), ids.end(), rng);

    std::vector<SaturationResult> results(ids.size());
    auto run_one = [&](std::size_t i) { results[i] = saturate(working.at(ids[i]), sorts, options.limits); };
    if (options.concurrent && ids.size() > 1) {
      std::vector<std::thread> threads;
      for (std::size_t i = 0; i < ids.size(); ++i) threads.emplace_back(run_one, i);
      for (auto& t : threads) t.join();
    } else {
      for (std::size_t i = 0; i < ids.size(); ++i) run_one(i);
    }

    std::vector<Message> deliveries;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const Agent& u = *n.find(ids[i]);
      const SaturationResult& res = results[i];
      out.runs.push_back({u.id, res.status, res.limit, working.at(u.id).size()});
      if (res.status == ProofStatus::kResourceLimit) interior_limit = true;

      std::vector<Clause> k = clauses_of(working.at(u.id));
      k.insert(k.end(), res.clauses.begin(), res.clauses.end());
      if (res.proof) k.push_back(Clause{});

      Agent session_u{u.id, u.reports_to, session_sigs.at(u.id), {}};
      for (const auto& target : u.reports_to) {
        if (!dist.contains(target) || dist.at(target) >= d) {
          out.warnings.push_back("edge " + u.id + " -> " + target + " does not lead toward the decider; skipped");
          continue;
        }
        const Agent& v = *n.find(target);
        Agent session_v{v.id, v.reports_to, session_sigs.at(v.id), {}};
        SendResult sent = osfol_send(session_u, session_v, k);
        if (sent.failure) {
          out.verdict = Verdict::kSendFailure;
          out.failure = sent.failure;
          return out;
        }
        deliveries.push_back(std::move(*sent.message));
      }
    }
    for (auto& m : deliveries) {
      osfol_recv(m, session_sigs.at(m.receiver), working.at(m.receiver), table);
      out.messages.push_back(std::move(m));
    }
  }

  out.decider_working_set = working.at(decider);
  SaturationResult res = saturate(working.at(decider), sorts, options.limits);
  out.runs.push_back({decider, res.status, res.limit, working.at(decider).size()});
  switch (res.status) {
    case ProofStatus::kProved:
      out.verdict = Verdict::kProved;
      break;
    case ProofStatus::kSaturated:
      out.verdict = interior_limit ? Verdict::kResourceLimit : Verdict::kSaturated;
      break;
    case ProofStatus::kResourceLimit:
      out.verdict = Verdict::kResourceLimit;
      break;
  }
  out.decider_result = std::move(res);

  if (out.verdict == Verdict::kProved && options.record_theorem) {
    Agent& d = *n.find(decider);
    SkolemTable theorem_table(options.skolem_prefix);
    for (auto& c : clausify(q, d.signature, theorem_table, decider)) d.knowledge.push_back(std::move(c));
  }
  return out;
}

SaturationResult prove_centralized(const AgentNetwork& n, const Formula& q, const SaturationLimits& limits) {
  require_closed(q);
  Signature sig = merged_signature(n);
  SkolemTable table;
  std::vector<InputClause> in;
  for (const auto& c : combined_kb(n)) in.push_back({c, Rule::kInput, {}});
  for (auto& c : clausify(Formula::negation(q), sig, table, n.decider())) in.push_back({std::move(c), Rule::kQuery, {}});
  return saturate(std::move(in), n.hierarchy(), limits);
}

}  // namespace osfol
