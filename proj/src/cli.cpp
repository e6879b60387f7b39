#include "osfol/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "osfol/error.hpp"
#include "osfol/parser.hpp"
#include "osfol/printer.hpp"
#include "osfol/proof.hpp"
#include "osfol/report.hpp"
#include "osfol/unskolemize.hpp"

namespace osfol {

namespace {

struct Common {
  std::size_t max_clauses = SaturationLimits{}.max_clauses;
  double timeout_secs = SaturationLimits{}.timeout_secs;
  bool synthesize_glbs = false;
  std::string trace_path;

  SaturationLimits limits() const {
    SaturationLimits l;
    l.max_clauses = max_clauses;
    l.timeout_secs = timeout_secs;
    return l;
  }
};

void add_limits(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-clauses", c.max_clauses, "Retained clause budget per saturation");
  cmd->add_option("--timeout-secs", c.timeout_secs, "Wall-clock budget per saturation");
}

ProblemFile load(const std::string& path, const Common& c) {
  return parse_problem(read_file(path), {c.synthesize_glbs});
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (auto p = line.find_first_of("#%"); p != std::string::npos) line.erase(p);
    out += line + "\n";
  }
  return out;
}

int exit_for(ProofStatus s) {
  switch (s) {
    case ProofStatus::kProved:
      return kExitProved;
    case ProofStatus::kSaturated:
      return kExitSaturated;
    case ProofStatus::kResourceLimit:
      return kExitResourceLimit;
  }
  return kExitInputError;
}

void emit_trace(const std::optional<ProofTrace>& proof, const Common& c, std::ostream& out) {
  if (!proof) return;
  std::string text = print_trace(*proof);
  if (!c.trace_path.empty()) {
    std::ofstream f(c.trace_path);
    if (!f) throw Error("cannot write '" + c.trace_path + "'");
    f << text;
  } else {
    out << text;
  }
}

void print_result(const SaturationResult& r, std::ostream& out) {
  out << "verdict: " << to_string(r.status) << "\n";
  if (r.status == ProofStatus::kResourceLimit) out << "limit: " << to_string(r.limit) << "\n";
  out << "stats: iterations=" << r.stats.iterations << " generated=" << r.stats.generated
      << " retained=" << r.stats.retained << "\n";
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolution prover for order-sorted first-order logic with distributed agent reports"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--synthesize-glbs", common.synthesize_glbs, "Add synthetic sorts where GLBs are missing");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check that the agent network is a signature tree");
  bool exhaustive = false;
  validate->add_option("file", file, "Problem file")->required();
  validate->add_flag("--exhaustive-peak", exhaustive, "Also check the peak property over all symbol sets");

  auto* prove = app.add_subcommand("prove", "Prove the query by the distributed report procedure");
  std::string query_path;
  bool centralized = false, concurrent = false;
  std::uint64_t seed = 0;
  prove->add_option("file", file, "Problem file")->required();
  prove->add_option("--query", query_path, "File holding the query formula");
  prove->add_flag("--centralized", centralized, "Saturate the combined knowledge base instead");
  prove->add_option("--seed", seed, "Permute agents of equal distance");
  prove->add_flag("--concurrent", concurrent, "Saturate agents of equal distance in parallel");
  prove->add_option("--trace", common.trace_path, "Write the proof trace to this file");
  add_limits(prove, common);

  auto* unsk = app.add_subcommand("unskolemize", "Un-Skolemize the clauses of a problem file");
  std::vector<std::string> skolems;
  unsk->add_option("file", file, "Problem file")->required();
  unsk->add_option("--skolems", skolems, "Symbols to treat as Skolem expressions")->delimiter(',')->required();

  auto* sat = app.add_subcommand("saturate", "Saturate the clauses of a problem file");
  sat->add_option("file", file, "Problem file")->required();
  sat->add_option("--trace", common.trace_path, "Write the proof trace to this file");
  add_limits(sat, common);

  auto* rep = app.add_subcommand("replay", "Check a proof trace");
  std::string trace_file;
  rep->add_option("trace", trace_file, "Trace file")->required();
  rep->add_option("--problem", file, "Problem file supplying the signature")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*validate) {
      ProblemFile p = load(file, common);
      ValidationReport r = validate_tree(p.network(), exhaustive);
      out << r.to_key_values();
      return r.certified() ? 0 : 1;
    }

    if (*prove) {
      ProblemFile p = load(file, common);
      AgentNetwork n = p.network();
      std::optional<Formula> q = p.query;
      if (!query_path.empty())
        q = parse_formula(strip_comments(read_file(query_path)), n.find(n.decider())->signature);
      if (!q) throw Error("no query: give --query or a [query] section");
      if (centralized) {
        SaturationResult r = prove_centralized(n, *q, common.limits());
        print_result(r, out);
        emit_trace(r.proof, common, out);
        return exit_for(r.status);
      }
      ReportOptions opts;
      opts.limits = common.limits();
      opts.seed = seed;
      opts.concurrent = concurrent;
      ReportOutcome o = osfol_report(n, *q, opts);
      for (const auto& w : o.warnings) err << "warning: " << w << "\n";
      out << "verdict: " << to_string(o.verdict) << "\n";
      out << o.log();
      if (o.failure) {
        out << "failure: " << o.failure->sender << " -> " << o.failure->receiver << ": " << o.failure->reason << "\n";
        return kExitSendFailure;
      }
      if (o.decider_result) emit_trace(o.decider_result->proof, common, out);
      switch (o.verdict) {
        case Verdict::kProved:
          return kExitProved;
        case Verdict::kSaturated:
          return kExitSaturated;
        case Verdict::kResourceLimit:
          return kExitResourceLimit;
        case Verdict::kSendFailure:
          return kExitSendFailure;
      }
    }

    if (*unsk) {
      ProblemFile p = load(file, common);
      std::vector<Clause> clauses;
      for (const auto& a : p.agents) clauses.insert(clauses.end(), a.clauses.begin(), a.clauses.end());
      std::set<Symbol> sks;
      for (const auto& s : skolems) sks.insert(Symbol(s));
      UnskolemizeResult r = unskolemize(clauses, sks);
      if (!r) {
        err << "error: " << *r.failure << "\n";
        return kExitSendFailure;
      }
      for (const auto& f : r.as_formulas()) out << to_report_string(f) << "\n";
      return 0;
    }

    if (*sat) {
      ProblemFile p = load(file, common);
      std::vector<Clause> clauses;
      for (const auto& a : p.agents) clauses.insert(clauses.end(), a.clauses.begin(), a.clauses.end());
      SaturationResult r = saturate(std::span<const Clause>(clauses), *p.hierarchy, common.limits());
      print_result(r, out);
      emit_trace(r.proof, common, out);
      return exit_for(r.status);
    }

    if (*rep) {
      ProblemFile p = load(file, common);
      ProofTrace t = parse_trace(read_file(trace_file), p.merged_signature());
      if (auto e = replay(t, *p.hierarchy)) {
        out << "replay: mismatch at step " << e->step << ": " << e->message << "\n";
        return 1;
      }
      out << "replay: ok (" << t.steps.size() << " steps" << (t.refutes() ? ", ends in []" : "") << ")\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace osfol
