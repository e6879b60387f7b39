#include "osfol/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "osfol/transform.hpp"
#include "osfol/unify.hpp"

namespace osfol {

std::string_view to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::kProved:
      return "proved";
    case ProofStatus::kSaturated:
      return "saturated";
    case ProofStatus::kResourceLimit:
      return "resource-limit";
  }
  return "?";
}

std::string_view to_string(LimitKind k) {
  switch (k) {
    case LimitKind::kNone:
      return "none";
    case LimitKind::kClauses:
      return "clauses";
    case LimitKind::kTime:
      return "time";
    case LimitKind::kIterations:
      return "iterations";
  }
  return "?";
}

bool is_sort_literal(const Literal& l, const SortHierarchy& sorts) {
  if (l.atom.args.size() != 1) return false;
  SortId s(l.atom.predicate);
  return sorts.contains(s) && s != sorts.top() && s != sorts.bottom();
}

namespace {

std::vector<Literal> rename_literals(std::span<const Literal> avoid_in, std::span<const Literal> lits,
                                     FreshNames& fresh) {
  std::vector<Variable> taken;
  for (const auto& l : avoid_in) collect_variables(l.atom, taken);
  std::set<Variable> avoid(taken.begin(), taken.end());
  std::vector<Variable> own;
  for (const auto& l : lits) collect_variables(l.atom, own);
  Substitution s;
  for (const auto& v : own)
    if (avoid.contains(v)) s.bind(v, Term::variable(fresh.rename(v)));
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (const auto& l : lits) out.push_back(s.empty() ? l : s.apply(l));
  return out;
}

}  // namespace

std::vector<Inferred> resolvents(std::span<const Literal> c1, std::span<const Literal> c2, const SortHierarchy& sorts,
                                 FreshNames& fresh) {
  std::vector<Inferred> out;
  std::vector<Literal> right = rename_literals(c1, c2, fresh);
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const Literal& a = c1[i];
      const Literal& b = right[j];
      if (a.positive == b.positive || a.atom.predicate != b.atom.predicate) continue;
      Atom pair[2] = {a.atom, b.atom};
      UnifyResult u = sigma_mgu(std::span<const Atom>(pair, 2), sorts, fresh);
      if (!u) continue;
      std::vector<Literal> lits;
      for (std::size_t k = 0; k < c1.size(); ++k)
        if (k != i) lits.push_back(u.mgu->apply(c1[k]));
      for (std::size_t k = 0; k < right.size(); ++k)
        if (k != j) lits.push_back(u.mgu->apply(right[k]));
      out.push_back({Clause(std::move(lits)), std::move(*u.mgu), i, j});
    }
  }
  return out;
}

std::vector<Inferred> resolvents(const Clause& c1, const Clause& c2, const SortHierarchy& sorts, FreshNames& fresh) {
  return resolvents(c1.literals(), c2.literals(), sorts, fresh);
}

std::vector<Inferred> factors(std::span<const Literal> c, const SortHierarchy& sorts, FreshNames& fresh) {
  std::vector<Inferred> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i].positive != c[j].positive || c[i].atom.predicate != c[j].atom.predicate) continue;
      Atom pair[2] = {c[i].atom, c[j].atom};
      UnifyResult u = sigma_mgu(std::span<const Atom>(pair, 2), sorts, fresh);
      if (!u) continue;
      std::vector<Literal> lits;
      for (const auto& l : c) lits.push_back(u.mgu->apply(l));
      out.push_back({Clause(std::move(lits)), std::move(*u.mgu), i, j});
    }
  }
  return out;
}

std::vector<Inferred> factors(const Clause& c, const SortHierarchy& sorts, FreshNames& fresh) {
  return factors(c.literals(), sorts, fresh);
}

std::vector<Inferred> sort_resolvents(std::span<const Literal> c, const SortHierarchy& sorts, FreshNames& fresh) {
  std::vector<Inferred> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].positive || !is_sort_literal(c[i], sorts)) continue;
    SortId s(c[i].atom.predicate);
    Term y = Term::variable(fresh.variable("y", s));
    UnifyResult u = unify({{c[i].atom.args[0], y}}, sorts, fresh);
    if (!u) continue;
    std::vector<Literal> lits;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (k != i) lits.push_back(u.mgu->apply(c[k]));
    out.push_back({Clause(std::move(lits)), std::move(*u.mgu), i, 0});
  }
  return out;
}

bool is_tautology(const Clause& c, const SortHierarchy& sorts) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].positive && is_sort_literal(c[i], sorts) &&
        sorts.leq(c[i].atom.args[0].sort(), SortId(c[i].atom.predicate)))
      return true;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i].complementary(c[j])) return true;
  }
  return false;
}

namespace {

/// Backtracking search for θ with c1θ ⊆ c2. In variant mode bindings must be
/// injective variable-to-variable maps at equal sorts.
class LiteralMatcher {
 public:
  LiteralMatcher(const Clause& pattern, const Clause& target, const SortHierarchy* sorts, bool variant)
      : pattern_(pattern), target_(target), sorts_(sorts), variant_(variant) {}

  bool run() {
    Substitution theta;
    std::set<Variable> images;
    return search(0, theta, images);
  }

 private:
  bool match_term(const Term& p, const Term& t, Substitution& theta, std::set<Variable>& images) {
    if (p.is_variable()) {
      if (const Term* bound = theta.lookup(p.var())) return *bound == t;
      if (variant_) {
        if (!t.is_variable() || t.var().sort != p.var().sort || images.contains(t.var())) return false;
        images.insert(t.var());
      } else if (!sorts_->leq(t.sort(), p.var().sort)) {
        return false;
      }
      theta.bind(p.var(), t);
      return true;
    }
    if (t.is_variable() || p.functor() != t.functor() || p.args().size() != t.args().size()) return false;
    if (p.is_ground()) return p == t;
    for (std::size_t i = 0; i < p.args().size(); ++i)
      if (!match_term(p.args()[i], t.args()[i], theta, images)) return false;
    return true;
  }

  bool search(std::size_t i, const Substitution& theta, const std::set<Variable>& images) {
    if (i == pattern_.size()) return true;
    const Literal& p = pattern_[i];
    for (const auto& t : target_) {
      if (t.positive != p.positive || t.atom.predicate != p.atom.predicate || t.atom.args.size() != p.atom.args.size())
        continue;
      Substitution next = theta;
      std::set<Variable> next_images = images;
      bool ok = true;
      for (std::size_t k = 0; ok && k < p.atom.args.size(); ++k)
        ok = match_term(p.atom.args[k], t.atom.args[k], next, next_images);
      if (ok && search(i + 1, next, next_images)) return true;
    }
    return false;
  }

  const Clause& pattern_;
  const Clause& target_;
  const SortHierarchy* sorts_;
  bool variant_;
};

bool predicates_cover(const Clause& c1, const Clause& c2) {
  for (const auto& l : c1) {
    bool found = false;
    for (const auto& m : c2)
      if (m.positive == l.positive && m.atom.predicate == l.atom.predicate) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool subsumes(const Clause& c1, const Clause& c2, const SortHierarchy& sorts) {
  if (c1.empty()) return true;
  if (!predicates_cover(c1, c2)) return false;
  return LiteralMatcher(c1, c2, &sorts, false).run();
}

bool is_variant(const Clause& a, const Clause& b) {
  if (a.size() != b.size() || a.weight() != b.weight()) return false;
  if (!predicates_cover(a, b)) return false;
  return LiteralMatcher(a, b, nullptr, true).run();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Entry {
  Clause clause;
  Justification by;
  std::size_t weight = 0;
  bool deleted = false;
  bool active = false;
};

class Saturator {
 public:
  Saturator(const SortHierarchy& sorts, const SaturationLimits& limits)
      : sorts_(sorts), limits_(limits), start_(Clock::now()) {}

  SaturationResult run(std::vector<InputClause> input) {
    for (auto& in : input) {
      Justification by;
      by.rule = in.rule;
      by.origin = std::move(in.origin);
      if (add(std::move(in.clause), std::move(by))) return finish(ProofStatus::kProved);
      if (limit_ != LimitKind::kNone) return finish(ProofStatus::kResourceLimit);
    }

    unsigned ratio = std::max(1u, limits_.age_ratio + limits_.weight_ratio);
    std::size_t pick = 0;
    while (true) {
      std::optional<std::size_t> given = select(pick++ % ratio < limits_.age_ratio);
      if (!given) return finish(ProofStatus::kSaturated);
      ++stats_.iterations;
      if (limits_.max_iterations && stats_.iterations > limits_.max_iterations) {
        limit_ = LimitKind::kIterations;
        return finish(ProofStatus::kResourceLimit);
      }
      if (process(*given)) return finish(ProofStatus::kProved);
      if (limit_ != LimitKind::kNone) return finish(ProofStatus::kResourceLimit);
    }
  }

 private:
  using WeightKey = std::tuple<std::size_t, std::size_t, std::size_t>;

  std::optional<std::size_t> select(bool by_age) {
    auto usable = [&](std::size_t id) { return !entries_[id].deleted && !entries_[id].active; };
    while (!by_age_.empty() && !usable(by_age_.top())) by_age_.pop();
    while (!by_weight_.empty() && !usable(std::get<2>(by_weight_.top()))) by_weight_.pop();
    if (by_age_.empty()) return std::nullopt;
    std::size_t id;
    if (by_age || by_weight_.empty()) {
      id = by_age_.top();
      by_age_.pop();
    } else {
      id = std::get<2>(by_weight_.top());
      by_weight_.pop();
    }
    return id;
  }

  bool out_of_time() {
    if (limits_.timeout_secs <= 0) return false;
    if (std::chrono::duration<double>(Clock::now() - start_).count() > limits_.timeout_secs) {
      limit_ = LimitKind::kTime;
      return true;
    }
    return false;
  }

  /// Returns true when the empty clause was added.
  bool add(Clause c, Justification by) {
    ++stats_.generated;
    if ((stats_.generated & 63) == 0 && out_of_time()) return false;
    c = normalize_variables(c);
    if (!c.empty()) {
      if (is_tautology(c, sorts_)) {
        ++stats_.tautologies;
        return false;
      }
      for (std::size_t id = 0; id < entries_.size(); ++id) {
        const Entry& e = entries_[id];
        if (!e.deleted && e.clause.size() <= c.size() && subsumes(e.clause, c, sorts_)) {
          ++stats_.forward_subsumed;
          return false;
        }
      }
      for (std::size_t id = 0; id < entries_.size(); ++id) {
        Entry& e = entries_[id];
        if (!e.deleted && c.size() <= e.clause.size() && subsumes(c, e.clause, sorts_)) {
          e.deleted = true;
          --retained_;
          ++stats_.backward_subsumed;
        }
      }
    }
    std::size_t id = entries_.size();
    std::size_t weight = c.weight();
    bool empty = c.empty();
    entries_.push_back({std::move(c), std::move(by), weight, false, false});
    ++retained_;
    if (empty) {
      empty_id_ = id;
      return true;
    }
    by_age_.push(id);
    by_weight_.push({entries_[id].clause.size(), weight, id});
    if (retained_ > limits_.max_clauses) limit_ = LimitKind::kClauses;
    return false;
  }

  bool emit(std::vector<Inferred> inferred, Rule rule, std::size_t left, std::optional<std::size_t> right) {
    for (auto& inf : inferred) {
      Justification by;
      by.rule = rule;
      by.parents.push_back(left);
      if (right) by.parents.push_back(*right);
      by.literals.push_back(inf.left_literal);
      if (rule != Rule::kSort) by.literals.push_back(inf.right_literal);
      if (add(std::move(inf.clause), std::move(by))) return true;
      if (limit_ != LimitKind::kNone) return false;
    }
    return false;
  }

  bool process(std::size_t given) {
    entries_[given].active = true;
    const Clause g = entries_[given].clause;
    for (const auto& l : g) buckets_[{l.atom.predicate, l.positive}].push_back(given);
    active_.push_back(given);

    if (emit(factors(g, sorts_, fresh_), Rule::kFactor, given, std::nullopt)) return true;
    if (limit_ != LimitKind::kNone) return false;
    if (emit(sort_resolvents(g.literals(), sorts_, fresh_), Rule::kSort, given, std::nullopt)) return true;
    if (limit_ != LimitKind::kNone) return false;

    std::set<std::size_t> partners;
    for (const auto& l : g) {
      auto it = buckets_.find({l.atom.predicate, !l.positive});
      if (it == buckets_.end()) continue;
      for (std::size_t id : it->second)
        if (!entries_[id].deleted) partners.insert(id);
    }
    for (std::size_t id : partners) {
      if (entries_[given].deleted) break;
      if (entries_[id].deleted) continue;
      const Clause other = entries_[id].clause;
      if (emit(resolvents(g, other, sorts_, fresh_), Rule::kResolve, given, id)) return true;
      if (limit_ != LimitKind::kNone || out_of_time()) return false;
    }
    return false;
  }

  ProofTrace extract_proof() const {
    std::set<std::size_t> needed;
    std::vector<std::size_t> stack{*empty_id_};
    while (!stack.empty()) {
      std::size_t id = stack.back();
      stack.pop_back();
      if (!needed.insert(id).second) continue;
      for (std::size_t p : entries_[id].by.parents) stack.push_back(p);
    }
    std::map<std::size_t, std::size_t> number;
    ProofTrace trace;
    for (std::size_t id : needed) {
      number[id] = trace.steps.size() + 1;
      ProofStep step;
      step.id = number[id];
      const Clause& c = entries_[id].clause;
      step.literals.assign(c.begin(), c.end());
      step.by = entries_[id].by;
      for (auto& p : step.by.parents) p = number.at(p);
      trace.steps.push_back(std::move(step));
    }
    return trace;
  }

  SaturationResult finish(ProofStatus status) {
    SaturationResult r;
    r.status = status;
    r.limit = status == ProofStatus::kResourceLimit ? limit_ : LimitKind::kNone;
    if (status == ProofStatus::kProved) r.proof = extract_proof();
    for (const auto& e : entries_)
      if (!e.deleted) r.clauses.push_back(e.clause);
    stats_.retained = retained_;
    stats_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    r.stats = stats_;
    return r;
  }

  const SortHierarchy& sorts_;
  SaturationLimits limits_;
  Clock::time_point start_;
  FreshNames fresh_;
  std::vector<Entry> entries_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> by_age_;
  std::priority_queue<WeightKey, std::vector<WeightKey>, std::greater<>> by_weight_;
  std::map<std::pair<Symbol, bool>, std::vector<std::size_t>> buckets_;
  std::vector<std::size_t> active_;
  std::size_t retained_ = 0;
  std::optional<std::size_t> empty_id_;
  LimitKind limit_ = LimitKind::kNone;
  SaturationStats stats_;
};

}  // namespace

SaturationResult saturate(std::vector<InputClause> input, const SortHierarchy& sorts, const SaturationLimits& limits) {
  return Saturator(sorts, limits).run(std::move(input));
}

SaturationResult saturate(std::span<const Clause> input, const SortHierarchy& sorts, const SaturationLimits& limits) {
  std::vector<InputClause> in;
  for (const auto& c : input) in.push_back({c, Rule::kInput, {}});
  return saturate(std::move(in), sorts, limits);
}

}  // namespace osfol
