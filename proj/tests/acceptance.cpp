#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "osfol/parser.hpp"
#include "osfol/printer.hpp"
#include "osfol/proof.hpp"
#include "osfol/report.hpp"
#include "osfol/unskolemize.hpp"
#include "properties.hpp"

using namespace osfol;
using namespace osfol::testing;

namespace {

// Pinned sizes and tolerances.
constexpr double kSteamrollerSeconds = 5.0;
constexpr std::size_t kDeciderClauses = 15;
constexpr std::size_t kPayloadY = 6;
constexpr std::size_t kUnskolemizedY = 2;
constexpr std::size_t kPayloadZ = 4;
constexpr std::size_t kPublishedFirstDerived = 16;
constexpr std::size_t kPublishedLastStep = 25;
constexpr std::size_t kRelativizationSentences = 200;
constexpr std::size_t kRandomTrees = 100;
constexpr std::size_t kSchedulerSeeds = 5;
constexpr std::size_t kSoundnessPairs = 1000;
constexpr std::size_t kGeneralityInstances = 200;
constexpr std::size_t kRule5Instances = 500;
constexpr std::size_t kLatticeExhaustiveSorts = 5;
constexpr std::size_t kLatticeRandom = 500;
constexpr std::size_t kSubsumptionInstances = 500;
constexpr std::size_t kRoundTripSets = 200;

SaturationLimits property_limits() {
  SaturationLimits l;
  l.max_clauses = 3000;
  l.timeout_secs = 5;
  return l;
}

std::string problem(const char* name) { return std::string(OSFOL_PROBLEMS_DIR "/") + name; }

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool same_up_to_variants(std::vector<Clause> got, const std::vector<Clause>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto it = std::find_if(got.begin(), got.end(), [&](const Clause& g) { return is_variant(g, w); });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

const Message* from(const ReportOutcome& r, const std::string& sender) {
  for (const auto& m : r.messages)
    if (m.sender == sender) return &m;
  return nullptr;
}

Outcome property(const PropertyReport& r, std::size_t wanted) {
  return {r.ok() && r.instances >= wanted, r.summary()};
}

Outcome steamroller_distributed() {
  ProblemFile p = parse_problem(read_file(problem("steamroller.osfol")));
  AgentNetwork n = p.network();
  ReportOptions opts;
  opts.skolem_prefix = "SK";
  auto start = std::chrono::steady_clock::now();
  ReportOutcome r = osfol_report(n, *p.query, opts);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  ProblemFile expected = parse_problem(read_file(problem("steamroller_decider.osfol")));
  std::vector<Clause> got;
  for (const auto& c : r.decider_working_set) got.push_back(c.clause);
  bool k_ok = expected.agents[0].clauses.size() == kDeciderClauses && same_up_to_variants(got, expected.agents[0].clauses);

  std::ostringstream d;
  d << "verdict=" << to_string(r.verdict) << " K'(x)=" << got.size() << (k_ok ? " (matches)" : " (differs)")
    << " seconds=" << secs;
  return {r.verdict == Verdict::kProved && k_ok && secs < kSteamrollerSeconds, d.str()};
}

Outcome steamroller_payloads() {
  ProblemFile p = parse_problem(read_file(problem("steamroller.osfol")));
  AgentNetwork n = p.network();
  ReportOutcome r = osfol_report(n, *p.query);
  const Message* y = from(r, "y");
  const Message* z = from(r, "z");
  if (!y || !z) return {false, "missing message"};
  std::size_t open = std::count_if(y->payload.begin(), y->payload.end(), [](const Formula& f) { return !as_clause(f); });
  bool z_ok = std::all_of(z->payload.begin(), z->payload.end(), [](const Formula& f) {
    auto c = as_clause(f);
    return c && c->size() == 1 && c->literals()[0].atom.predicate == Symbol("M");
  });
  std::ostringstream d;
  d << "y=" << y->payload.size() << " (" << open << " un-Skolemized) z=" << z->payload.size();
  return {y->payload.size() == kPayloadY && open == kUnskolemizedY && z->payload.size() == kPayloadZ && z_ok, d.str()};
}

Outcome steamroller_centralized() {
  ProblemFile p = parse_problem(read_file(problem("steamroller_central.osfol")));
  SaturationResult r = prove_centralized(p.network(), *p.query);

  ProblemFile decider = parse_problem(read_file(problem("steamroller_decider.osfol")));
  ProofTrace t = parse_trace(read_file(problem("steamroller_published.trace")), decider.merged_signature());
  auto e = replay(t, *decider.hierarchy, decider.agents[0].clauses);
  bool derived = t.steps.size() == kPublishedLastStep && t.steps[kPublishedFirstDerived - 1].id == kPublishedFirstDerived &&
                 t.steps[kPublishedFirstDerived - 1].by.rule == Rule::kResolve && t.refutes();
  std::ostringstream d;
  d << "centralized=" << to_string(r.status) << " replay="
    << (e ? "step " + std::to_string(e->step) + ": " + e->message : "ok");
  return {r.status == ProofStatus::kProved && !e && derived, d.str()};
}

std::string prefix_string(const QuantifierPrefix& prefix) {
  std::string out;
  for (const auto& q : prefix)
    out += (out.empty() ? "" : " ") + std::string(q.quantifier == Formula::Kind::Forall ? "A" : "E") +
           to_string(q.variable);
  return out;
}

Outcome unskolemize_golden() {
  std::vector<SortId> sorts{SortId("s1"), SortId("s2"), SortId("s3"), SortId("s4")};
  std::vector<Witness> w;
  for (const auto& s : sorts) w.push_back({Symbol("w" + s.name()), s});
  SortHierarchy h = SortHierarchy::build(sorts, {}, w);
  SortId s1("s1"), s2("s2"), s3("s3"), s4("s4");

  Signature pqr(h);
  for (const char* p : {"p", "q", "r"}) pqr.declare_predicate(Symbol(p), {s1, s2, s3, s4});
  pqr.declare_function(Symbol("f1"), {s1}, s3);
  pqr.declare_function(Symbol("f2"), {s1}, s3);
  pqr.declare_function(Symbol("g1"), {s2, s1}, s4);
  pqr.declare_function(Symbol("g2"), {s1, s2}, s4);
  std::vector<Clause> in{parse_clause("p(x1:s1, x2:s2, f1(x1:s1), g1(x2:s2, x1:s1))", pqr),
                         parse_clause("q(y1:s1, y2:s2, f2(y1:s1), g1(y2:s2, y1:s1))", pqr),
                         parse_clause("r(z1:s1, z2:s2, f2(z1:s1), g2(z1:s1, z2:s2))", pqr)};
  UnskolemizeResult a = unskolemize(in, {Symbol("f1"), Symbol("f2"), Symbol("g1"), Symbol("g2")});
  std::string matrix;
  if (a && a.formulas.size() == 1)
    for (const auto& c : a.formulas[0].matrix) matrix += (matrix.empty() ? "" : " ; ") + to_string(c);
  bool pqr_ok = a && a.formulas.size() == 1 &&
                prefix_string(a.formulas[0].prefix) == "Ax1:s1 Ev1:s3 Ev2:s3 Ax2:s2 Ev3:s4 Ev4:s4" &&
                matrix ==
                    "p(x1:s1, x2:s2, v1:s3, v3:s4) ; q(x1:s1, x2:s2, v2:s3, v3:s4) ; r(x1:s1, x2:s2, v2:s3, v4:s4)";

  Signature dsig(h);
  dsig.declare_predicate(Symbol("D"), {s1, s2, s3});
  dsig.declare_function(Symbol("f"), {}, s1);
  dsig.declare_function(Symbol("g"), {s1}, s2);
  dsig.declare_function(Symbol("h"), {s1, s2}, s3);
  UnskolemizeResult b = unskolemize(std::vector<Clause>{parse_clause("D(f, g(x:s1), h(x:s1, y:s2))", dsig)},
                                    {Symbol("f"), Symbol("g"), Symbol("h")});
  std::string dform = b && b.formulas.size() == 1 ? to_string(b.formulas[0].formula()) : "failed";
  bool d_ok = dform == "exists v1:s1 forall x:s1 exists v2:s2 forall y:s2 exists v3:s3. D(v1:s1, v2:s2, v3:s3)";

  return {pqr_ok && d_ok, std::string("pqr=") + (pqr_ok ? "ok" : "differs") + " D=" + dform};
}

Outcome relativization() {
  return property(relativization_equivalence(5005, kRelativizationSentences, property_limits()),
                  kRelativizationSentences);
}

Outcome distributed() {
  return property(distributed_agreement(6006, kRandomTrees, kSchedulerSeeds, property_limits()), kRandomTrees);
}

Outcome unification() {
  PropertyReport a = unify_soundness(7007, kSoundnessPairs);
  PropertyReport b = unify_generality(7008, kGeneralityInstances);
  PropertyReport c = unify_rule5(7009, kRule5Instances);
  bool ok = a.ok() && a.instances >= kSoundnessPairs && b.ok() && b.instances >= kGeneralityInstances && c.ok() &&
            c.instances >= kRule5Instances;
  return {ok, "soundness[" + a.summary() + "] generality[" + b.summary() + "] rule5[" + c.summary() + "]"};
}

Outcome lattice() {
  PropertyReport r = lattice_glb(8008, kLatticeExhaustiveSorts, kLatticeRandom);
  return {r.ok() && r.tally["random"] >= kLatticeRandom, r.summary()};
}

Outcome subsumption_check() { return property(subsumption(9009, kSubsumptionInstances), kSubsumptionInstances); }

Outcome round_trip() {
  return property(unskolemize_round_trip(10010, kRoundTripSets, property_limits()), kRoundTripSets);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Steamroller distributed proof, K'(x), runtime", steamroller_distributed},
      {"Steamroller payload sizes", steamroller_payloads},
      {"Steamroller centralized proof and published derivation", steamroller_centralized},
      {"un-Skolemization golden outputs", unskolemize_golden},
      {"sorted vs relativized saturation", relativization},
      {"distributed vs centralized verdicts", distributed},
      {"unification soundness, generality, BOT", unification},
      {"sort lattice GLBs", lattice},
      {"subsumption", subsumption_check},
      {"un-Skolemization round trip", round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << o.detail << "] (" << secs << " s)" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
