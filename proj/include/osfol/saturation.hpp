#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osfol/fresh.hpp"
#include "osfol/sort_hierarchy.hpp"
#include "osfol/substitution.hpp"

namespace osfol {

enum class ProofStatus { kProved, kSaturated, kResourceLimit };
enum class LimitKind { kNone, kClauses, kTime, kIterations };

std::string_view to_string(ProofStatus s);
std::string_view to_string(LimitKind k);

struct SaturationLimits {
  std::size_t max_clauses = 100000;
  double timeout_secs = 60.0;
  std::size_t max_iterations = 0;  // 0 means unbounded
  unsigned age_ratio = 1;
  unsigned weight_ratio = 4;
};

enum class Rule { kInput, kReceived, kQuery, kResolve, kFactor, kSort };

/// How a clause was obtained. Parent ids and 0-based literal indices refer to
/// the literal order of the parent as stored (or as written in a trace):
/// resolve uses parents[0..1] with literals[0..1], factor uses parents[0]
/// with literals[0..1], sort uses parents[0] with literals[0].
struct Justification {
  Rule rule = Rule::kInput;
  std::vector<std::size_t> parents;
  std::vector<std::size_t> literals;
  std::string origin;  // sending agent for received clauses

  friend bool operator==(const Justification&, const Justification&) = default;
};

struct ProofStep {
  std::size_t id = 0;
  std::vector<Literal> literals;
  Justification by;

  Clause clause() const { return Clause(literals); }
  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

/// Derivation in id order; a refutation ends with the empty clause.
struct ProofTrace {
  std::vector<ProofStep> steps;

  bool refutes() const { return !steps.empty() && steps.back().literals.empty(); }
  friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

struct InputClause {
  Clause clause;
  Rule rule = Rule::kInput;
  std::string origin;
};

struct SaturationStats {
  std::size_t iterations = 0;
  std::size_t generated = 0;
  std::size_t retained = 0;
  std::size_t forward_subsumed = 0;
  std::size_t backward_subsumed = 0;
  std::size_t tautologies = 0;
  double seconds = 0.0;
};

struct SaturationResult {
  ProofStatus status = ProofStatus::kSaturated;
  LimitKind limit = LimitKind::kNone;
  std::optional<ProofTrace> proof;
  /// Surviving clauses (processed and unprocessed) in id order.
  std::vector<Clause> clauses;
  SaturationStats stats;
};

struct Inferred {
  Clause clause;
  Substitution sigma;
  std::size_t left_literal = 0;
  std::size_t right_literal = 0;
};

/// `s(t)` where `s` names a sort of the hierarchy other than TOP and BOT.
bool is_sort_literal(const Literal& l, const SortHierarchy& sorts);

/// Binary resolvents. `c2` is renamed apart from `c1` internally; literal
/// indices refer to the given literal orders.
std::vector<Inferred> resolvents(std::span<const Literal> c1, std::span<const Literal> c2, const SortHierarchy& sorts,
                                 FreshNames& fresh);
std::vector<Inferred> resolvents(const Clause& c1, const Clause& c2, const SortHierarchy& sorts, FreshNames& fresh);

/// Binary factors (one per unifiable same-polarity pair).
std::vector<Inferred> factors(std::span<const Literal> c, const SortHierarchy& sorts, FreshNames& fresh);
std::vector<Inferred> factors(const Clause& c, const SortHierarchy& sorts, FreshNames& fresh);

/// Resolves each negative sort literal `~s(t)` against `s(y:s)`.
std::vector<Inferred> sort_resolvents(std::span<const Literal> c, const SortHierarchy& sorts, FreshNames& fresh);

/// Complementary pair, or a positive `s(t)` with the sort of `t` below `s`.
bool is_tautology(const Clause& c, const SortHierarchy& sorts);

/// Some Σ-substitution maps every literal of `c1` into `c2`.
bool subsumes(const Clause& c1, const Clause& c2, const SortHierarchy& sorts);

/// Equal up to a sort-preserving bijective renaming of variables.
bool is_variant(const Clause& a, const Clause& b);

/// Given-clause saturation with forward and backward subsumption.
SaturationResult saturate(std::vector<InputClause> input, const SortHierarchy& sorts,
                          const SaturationLimits& limits = {});
SaturationResult saturate(std::span<const Clause> input, const SortHierarchy& sorts,
                          const SaturationLimits& limits = {});

}  // namespace osfol
