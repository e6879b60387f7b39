#include <doctest.h>

#include <algorithm>

#include "osfol/error.hpp"
#include "osfol/parser.hpp"
#include "osfol/printer.hpp"
#include "osfol/report.hpp"
#include "properties.hpp"

using namespace osfol;
using namespace osfol::testing;

namespace {

ProblemFile load(const char* name) { return parse_problem(read_file(std::string(OSFOL_PROBLEMS_DIR "/") + name)); }

/// Multiset equality up to variable renaming.
bool same_up_to_variants(std::vector<Clause> got, const std::vector<Clause>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto it = std::find_if(got.begin(), got.end(), [&](const Clause& g) { return is_variant(g, w); });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

const Message& message_from(const ReportOutcome& r, const std::string& sender) {
  auto it = std::find_if(r.messages.begin(), r.messages.end(), [&](const Message& m) { return m.sender == sender; });
  REQUIRE(it != r.messages.end());
  return *it;
}

}  // namespace

TEST_CASE("Steamroller: distributed run") {
  ProblemFile p = load("steamroller.osfol");
  AgentNetwork n = p.network();
  ReportOptions opts;
  opts.skolem_prefix = "SK";
  ReportOutcome r = osfol_report(n, *p.query, opts);
  CHECK(r.verdict == Verdict::kProved);
  CHECK(r.warnings.empty());
  REQUIRE(r.messages.size() == 2);

  const Message& y = message_from(r, "y");
  CHECK(y.receiver == "x");
  REQUIRE(y.payload.size() == 6);
  std::vector<std::string> open;
  for (const auto& f : y.payload)
    if (!as_clause(f)) open.push_back(to_string(f));
  CHECK(open == std::vector<std::string>{"forall c1:C exists v1:P. E(c1:C, v1:P) & P(v1:P)",
                                         "forall s1:S exists v1:P. E(s1:S, v1:P) & P(v1:P)"});

  const Message& z = message_from(r, "z");
  REQUIRE(z.payload.size() == 4);
  for (const auto& f : z.payload) {
    auto c = as_clause(f);
    REQUIRE(c);
    REQUIRE(c->size() == 1);
    CHECK(c->literals()[0].atom.predicate == Symbol("M"));
  }
  CHECK(to_string(z).rfind("send z -> x 4 | ", 0) == 0);

  ProblemFile expected = load("steamroller_decider.osfol");
  std::vector<Clause> got;
  for (const auto& c : r.decider_working_set) got.push_back(c.clause);
  CHECK(same_up_to_variants(got, expected.agents[0].clauses));

  REQUIRE(r.decider_result);
  REQUIRE(r.decider_result->proof);
  CHECK(r.decider_result->proof->refutes());
  CHECK(r.runs.size() == 3);
  CHECK(r.runs.back().agent == "x");
}

TEST_CASE("Steamroller: the theorem is recorded at the decider") {
  ProblemFile p = load("steamroller.osfol");
  AgentNetwork n = p.network();
  std::size_t before = n.find("x")->knowledge.size();
  osfol_report(n, *p.query);
  CHECK(n.find("x")->knowledge.size() == before + 2);

  AgentNetwork m = p.network();
  ReportOptions opts;
  opts.record_theorem = false;
  osfol_report(m, *p.query, opts);
  CHECK(m.find("x")->knowledge.size() == before);
}

TEST_CASE("Steamroller: scheduling does not change the verdict") {
  ProblemFile p = load("steamroller.osfol");
  for (std::uint64_t seed : {1, 2, 3}) {
    for (bool concurrent : {false, true}) {
      AgentNetwork n = p.network();
      ReportOptions opts;
      opts.seed = seed;
      opts.concurrent = concurrent;
      CHECK(osfol_report(n, *p.query, opts).verdict == Verdict::kProved);
    }
  }
}

TEST_CASE("Steamroller: centralized run") {
  ProblemFile p = load("steamroller_central.osfol");
  SaturationResult r = prove_centralized(p.network(), *p.query);
  CHECK(r.status == ProofStatus::kProved);
}

TEST_CASE("a reporter's Skolem function crosses the edge as an existential") {
  ProblemFile p = load("pqr.osfol");
  AgentNetwork n = p.network();
  ReportOutcome r = osfol_report(n, *p.query);
  CHECK(r.verdict == Verdict::kProved);
  REQUIRE(r.messages.size() == 1);
  REQUIRE(r.messages[0].payload.size() == 1);
  CHECK(to_string(r.messages[0].payload[0]) == "forall x:A exists v1:B. q(x:A, v1:B)");
}

TEST_CASE("an unacceptable clause makes the send fail") {
  ProblemFile p = load("pqr.osfol");
  AgentNetwork n = p.network();
  Agent& u = *n.find("u");
  u.knowledge = {parse_clause("q(a, k(a))", u.signature)};
  ReportOutcome r = osfol_report(n, *p.query);
  CHECK(r.verdict == Verdict::kSendFailure);
  REQUIRE(r.failure);
  CHECK(r.failure->sender == "u");
  CHECK(r.failure->receiver == "d");
  CHECK(r.failure->reason.find("(i)") != std::string::npos);
}

TEST_CASE("send keeps ineligible clauses with the sender") {
  ProblemFile p = load("steamroller.osfol");
  AgentNetwork n = p.network();
  const Agent& y = *n.find("y");
  const Agent& x = *n.find("x");
  std::vector<Clause> k = y.knowledge;
  k.push_back(k.front());
  SendResult s = osfol_send(y, x, k);
  REQUIRE(s.message);
  CHECK(s.message->payload.size() == 6);
  CHECK(s.retained.empty());

  std::vector<InputClause> ws;
  Signature sig = x.signature;
  SkolemTable table("SK");
  osfol_recv(*s.message, sig, ws, table);
  CHECK(ws.size() == 8);
  CHECK(table.entries().size() == 2);
  CHECK(std::all_of(ws.begin(), ws.end(), [](const InputClause& c) { return c.rule == Rule::kReceived && c.origin == "y"; }));
}

TEST_CASE("saturated and malformed queries") {
  ProblemFile p = load("pqr.osfol");
  AgentNetwork n = p.network();
  const Signature& sig = n.find("d")->signature;
  CHECK(osfol_report(n, parse_formula("exists x:A. ~r(x)", sig)).verdict == Verdict::kSaturated);
  CHECK_THROWS_AS(osfol_report(n, parse_formula("r(x:A)", sig)), Error);
}

TEST_CASE("distributed and centralized verdicts agree on random trees") {
  SaturationLimits limits;
  limits.max_clauses = 3000;
  limits.timeout_secs = 5;
  PropertyReport r = distributed_agreement(909, 15, 2, limits);
  INFO(r.summary());
  CHECK(r.ok());
}
