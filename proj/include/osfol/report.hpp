#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osfol/network.hpp"
#include "osfol/saturation.hpp"
#include "osfol/transform.hpp"

namespace osfol {

struct Message {
  std::string sender;
  std::string receiver;
  std::vector<Formula> payload;
};

/// One line: `send <u> -> <v> <count> | <f1> ; <f2> ...`.
std::string to_string(const Message& m);

struct SendFailure {
  std::string sender;
  std::string receiver;
  std::string reason;
};

struct SendResult {
  std::optional<Message> message;
  std::optional<SendFailure> failure;
  /// Clauses not eligible for the edge; they stay with the sender.
  std::vector<Clause> retained;
};

/// Filters `k` to the clauses whose predicates are shared by u and v (and the
/// empty clause), sends those already in the common language verbatim and
/// un-Skolemizes the rest over their non-common function symbols.
SendResult osfol_send(const Agent& u, const Agent& v, std::span<const Clause> k);

/// Skolemizes the payload with symbols minted in `signature` and appends the
/// clauses to `working_set`. Clause-shaped formulas pass through unchanged.
void osfol_recv(const Message& m, Signature& signature, std::vector<InputClause>& working_set, SkolemTable& table);

enum class Verdict { kProved, kSaturated, kResourceLimit, kSendFailure };
std::string_view to_string(Verdict v);

struct ReportOptions {
  SaturationLimits limits;
  /// Nonzero: permute agents of equal distance with this seed.
  std::uint64_t seed = 0;
  /// Saturate agents of equal distance on separate threads.
  bool concurrent = false;
  std::string skolem_prefix = "sk";
  /// On success, add the clausified query to the decider's knowledge base.
  bool record_theorem = true;
};

struct AgentRun {
  std::string agent;
  ProofStatus status = ProofStatus::kSaturated;
  LimitKind limit = LimitKind::kNone;
  std::size_t working_set = 0;
};

struct ReportOutcome {
  Verdict verdict = Verdict::kSaturated;
  std::optional<SaturationResult> decider_result;
  std::vector<Message> messages;
  std::vector<AgentRun> runs;
  std::optional<SendFailure> failure;
  /// K'(D) after all receipts, before the decider saturates.
  std::vector<InputClause> decider_working_set;
  std::vector<std::string> warnings;

  std::string log() const;
};

/// Runs the report procedure for query `q` (closed, in the decider's
/// language). Agents are processed in decreasing distance to the decider;
/// each saturates, then sends once to its successor. Throws Error when the
/// network is cyclic, not pointed, or has inconsistent declarations.
ReportOutcome osfol_report(AgentNetwork& n, const Formula& q, const ReportOptions& options = {});

/// All agents' declarations in one signature.
Signature merged_signature(const AgentNetwork& n);

/// Saturates the combined knowledge base together with the clausified
/// negated query.
SaturationResult prove_centralized(const AgentNetwork& n, const Formula& q, const SaturationLimits& limits = {});

}  // namespace osfol
