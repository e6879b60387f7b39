#include "properties.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "osfol/printer.hpp"
#include "osfol/relativize.hpp"
#include "osfol/report.hpp"
#include "osfol/unify.hpp"
#include "osfol/unskolemize.hpp"

namespace osfol::testing {

std::string PropertyReport::summary() const {
  std::ostringstream out;
  out << "instances=" << instances << " skipped=" << skipped << " failures=" << failures;
  for (const auto& [k, v] : tally) out << " " << k << "=" << v;
  if (!first_failure.empty()) out << " first: " << first_failure;
  return out.str();
}

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::size_t upto(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Replaces some variables of `t` by random terms over `vars`.
Term instance_of(Rng& rng, const Signature& sig, const Term& t, const std::vector<Variable>& vars) {
  std::vector<Variable> vs;
  collect_variables(t, vs);
  Assignment a;
  for (const auto& v : vs)
    if (auto r = random_term(rng, sig, v.sort, 1, vars)) a.insert_or_assign(v, *r);
  return substitute(t, a);
}

Clause tuple_clause(const std::vector<Term>& terms) { return Clause({{true, Atom{Symbol("tuple"), terms}}}); }

std::string show(const std::vector<Equation>& eqs) {
  std::string out;
  for (const auto& [l, r] : eqs) out += (out.empty() ? "" : ", ") + to_string(l) + " = " + to_string(r);
  return out;
}

}  // namespace

PropertyReport unify_soundness(std::uint64_t seed, std::size_t pairs) {
  PropertyReport r;
  Rng rng(seed);
  while (r.instances < pairs) {
    auto h = lattice_from(random_edges(rng, upto(rng, 2, 5), 0.4));
    Signature sig = random_signature(rng, *h, {.predicates = 0, .functions = 3, .max_arity = 2});
    auto xs = random_variables(rng, *h, 3, "x");
    auto ys = random_variables(rng, *h, 3, "y");
    std::vector<SortId> sorts = proper_sorts(*h);
    for (int k = 0; k < 10 && r.instances < pairs; ++k) {
      auto t1 = random_term(rng, sig, pick(rng, sorts), 2, xs);
      if (!t1) continue;
      std::optional<Term> t2 = coin(rng, 0.5) ? random_term(rng, sig, pick(rng, sorts), 2, coin(rng, 0.5) ? xs : ys)
                                              : std::optional<Term>(instance_of(rng, sig, *t1, ys));
      if (!t2) continue;
      ++r.instances;
      std::vector<Equation> eqs{{*t1, *t2}};
      FreshNames fresh;
      UnifyResult u = unify(eqs, *h, fresh);
      FreshNames fresh2;
      UnifyResult v = unify(eqs, *h, fresh2, 1 + r.instances);
      if (bool(u) != bool(v)) {
        r.fail("selection order changed solvability of " + show(eqs));
        continue;
      }
      if (!u) {
        ++r.tally["not-unifiable"];
        continue;
      }
      ++r.tally["unified"];
      const Substitution& s = *u.mgu;
      if (s.apply(*t1) != s.apply(*t2)) r.fail("mgu does not unify " + show(eqs));
      for (const auto& [var, term] : s.bindings()) {
        if (!h->leq(term.sort(), var.sort)) r.fail("binding " + to_string(var) + " -> " + to_string(term) + " ascends");
        for (const auto& [other, _] : s.bindings())
          if (term.occurs(other)) r.fail("mgu of " + show(eqs) + " is not idempotent");
      }
      if (!is_variant(tuple_clause({s.apply(*t1)}), tuple_clause({v.mgu->apply(*t1)})))
        r.fail("selection order changed the unifier of " + show(eqs));
    }
  }
  return r;
}

PropertyReport unify_generality(std::uint64_t seed, std::size_t instances) {
  PropertyReport r;
  Rng rng(seed);
  std::size_t attempts = 0;
  while (r.instances < instances && attempts++ < instances * 20) {
    auto h = lattice_from(random_edges(rng, upto(rng, 2, 4), 0.4));
    Signature sig = random_signature(rng, *h, {.predicates = 0, .functions = 2, .max_arity = 1});
    std::vector<SortId> sorts = proper_sorts(*h);
    auto xs = random_variables(rng, *h, upto(rng, 1, 3), "x");
    std::vector<Equation> eqs;
    for (std::size_t k = upto(rng, 1, 2); k > 0; --k) {
      auto l = random_term(rng, sig, pick(rng, sorts), 2, xs);
      if (!l) continue;
      std::optional<Term> rt =
          coin(rng, 0.5) ? random_term(rng, sig, pick(rng, sorts), 2, xs) : std::optional<Term>(instance_of(rng, sig, *l, xs));
      if (rt) eqs.emplace_back(*l, *rt);
    }
    if (eqs.empty()) continue;
    std::vector<Variable> used;
    for (const auto& [l, rr] : eqs) {
      collect_variables(l, used);
      collect_variables(rr, used);
    }
    auto grounds = ground_unifiers(eqs, used, sig, 2, 100000);
    if (!grounds) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    FreshNames fresh;
    UnifyResult u = unify(eqs, *h, fresh);
    if (!u) {
      ++r.tally["not-unifiable"];
      if (!grounds->empty()) r.fail("no mgu although a ground unifier exists for " + show(eqs));
      continue;
    }
    ++r.tally["unifiable"];
    const Substitution& s = *u.mgu;
    for (const auto& theta : *grounds) {
      Assignment tau;
      bool instance = std::all_of(used.begin(), used.end(), [&](const Variable& v) {
        return naive_match(s.apply(Term::variable(v)), theta.at(v), *h, tau);
      });
      if (!instance) {
        r.fail("ground unifier is not an instance of the mgu for " + show(eqs));
        break;
      }
    }
    // Grounding the mgu with one constant per sort must give a unifier the
    // enumeration also found whenever it stays within its depth.
    Assignment constants;
    std::vector<Variable> range;
    for (const auto& v : used) collect_variables(s.apply(Term::variable(v)), range);
    for (const auto& v : range) constants.insert_or_assign(v, Term::application(Symbol("c_" + v.sort.name()), v.sort));
    Assignment theta0;
    bool shallow = true;
    for (const auto& v : used) {
      theta0.insert_or_assign(v, substitute(s.apply(Term::variable(v)), constants));
      shallow = shallow && theta0.at(v).depth() <= 2;
    }
    if (shallow && std::find(grounds->begin(), grounds->end(), theta0) == grounds->end())
      r.fail("ground instance of the mgu missing from the enumeration for " + show(eqs));
  }
  return r;
}

PropertyReport unify_rule5(std::uint64_t seed, std::size_t instances) {
  PropertyReport r;
  Rng rng(seed);
  while (r.instances < instances) {
    auto h = lattice_from(random_edges(rng, upto(rng, 2, 7), 0.35), false);
    std::vector<SortId> sorts = proper_sorts(*h);
    for (int k = 0; k < 10 && r.instances < instances; ++k) {
      Variable x{Symbol("x"), pick(rng, sorts)}, y{Symbol("y"), pick(rng, sorts)};
      ++r.instances;
      FreshNames fresh;
      UnifyResult u = unify({{Term::variable(x), Term::variable(y)}}, *h, fresh);
      bool comparable = h->leq(x.sort, y.sort) || h->leq(y.sort, x.sort);
      auto common = common_subsorts(*h, {x.sort, y.sort});
      std::string pair = x.sort.name() + "/" + y.sort.name();
      if (comparable) {
        ++r.tally["comparable"];
        if (!u) r.fail("comparable sorts " + pair + " failed to unify");
        continue;
      }
      if (common.empty()) {
        ++r.tally["bottom"];
        if (u || u.failure != UnifyFailure::kBottomGlb) r.fail("sorts " + pair + " should fail with a BOT meet");
        continue;
      }
      ++r.tally["merged"];
      if (!u) {
        r.fail("sorts " + pair + " share a subsort but did not unify");
        continue;
      }
      Term image = u.mgu->apply(Term::variable(x));
      auto expected = maximal_lower_bounds(*h, {x.sort, y.sort});
      if (!image.is_variable() || expected.size() != 1 || image.sort() != expected.front() ||
          u.mgu->apply(Term::variable(y)) != image)
        r.fail("sorts " + pair + " merged at the wrong sort");
    }
  }
  return r;
}

namespace {

void check_lattice(const EdgeSet& e, PropertyReport& r) {
  ++r.instances;
  SortHierarchy base = SortHierarchy::build(e.sorts, e.edges);
  auto below = down_sets(e);
  for (SortId a : e.sorts)
    for (SortId b : e.sorts)
      if (base.leq(a, b) != below[b].contains(a)) r.fail("leq disagrees with the edge closure");

  for (SortId a : base.sorts())
    for (SortId b : base.sorts()) {
      auto m = maximal_lower_bounds(base, {a, b});
      std::vector<SortId> ab{a, b};
      GlbResult g = base.glb(ab);
      if ((m.size() == 1) != g.glb.has_value() || (g.glb && *g.glb != m.front()))
        r.fail("pre-synthesis glb of " + a.name() + "," + b.name() + " disagrees");
    }

  SortHierarchy h = base.synthesize_glbs();
  if (!h.is_lattice()) {
    r.fail("synthesis left pairs without a GLB");
    return;
  }
  if (base.is_lattice() && h.size() != base.size()) r.fail("synthesis changed a lattice");
  for (SortId a : h.sorts())
    for (SortId b : h.sorts()) {
      auto m = maximal_lower_bounds(h, {a, b});
      if (m.size() != 1 || h.meet(a, b) != m.front()) r.fail("glb of " + a.name() + "," + b.name() + " disagrees");
    }
  for (SortId a : e.sorts)
    for (SortId b : e.sorts) {
      std::set<SortId> expected;
      for (SortId x : below[a])
        if (below[b].contains(x)) expected.insert(x);
      std::set<SortId> got;
      SortId m = *h.meet(a, b);
      for (SortId x : e.sorts)
        if (h.leq(x, m)) got.insert(x);
      if (got != expected) r.fail("meet of " + a.name() + "," + b.name() + " is not the down-set intersection");
      for (SortId c : e.sorts) {
        std::vector<SortId> abc{a, b, c};
        auto mm = maximal_lower_bounds(h, abc);
        if (mm.size() != 1 || h.glb(abc).glb != mm.front()) r.fail("three-way glb disagrees");
      }
    }
}

}  // namespace

PropertyReport lattice_glb(std::uint64_t seed, std::size_t exhaustive_sorts, std::size_t random_instances) {
  PropertyReport r;
  for (std::size_t n = 1; n <= exhaustive_sorts; ++n)
    for (const auto& e : all_edge_sets(n)) check_lattice(e, r);
  r.tally["exhaustive"] = r.instances;
  Rng rng(seed);
  for (std::size_t i = 0; i < random_instances; ++i) {
    std::uniform_real_distribution<double> density(0.15, 0.6);
    check_lattice(random_edges(rng, upto(rng, 1, 8), density(rng)), r);
  }
  r.tally["random"] = random_instances;
  return r;
}

PropertyReport subsumption(std::uint64_t seed, std::size_t instances) {
  PropertyReport r;
  Rng rng(seed);
  while (r.instances < instances) {
    auto h = lattice_from(random_edges(rng, upto(rng, 1, 4), 0.4));
    Signature sig = random_signature(rng, *h, {.predicates = 2, .functions = 1, .max_arity = 2});
    auto xs = random_variables(rng, *h, upto(rng, 1, 3), "x");
    auto ys = random_variables(rng, *h, upto(rng, 1, 3), "y");
    for (int k = 0; k < 10 && r.instances < instances; ++k) {
      Clause c1 = random_clause(rng, sig, 3, 1, xs);
      Clause c2;
      if (coin(rng, 0.5)) {
        c2 = random_clause(rng, sig, 3, 1, ys);
      } else {
        Assignment a;
        for (const auto& v : c1.variables())
          if (auto t = random_term(rng, sig, v.sort, 1, ys)) a.insert_or_assign(v, *t);
        std::vector<Literal> lits;
        for (const auto& l : c1) lits.push_back(substitute(l, a));
        for (const auto& l : random_clause(rng, sig, 2, 1, ys))
          if (coin(rng, 0.5)) lits.push_back(l);
        c2 = Clause(std::move(lits));
      }
      ++r.instances;
      bool expected = brute_subsumes(c1, c2, *h);
      ++r.tally[expected ? "subsumed" : "not-subsumed"];
      if (subsumes(c1, c2, *h) != expected)
        r.fail("subsumes(" + to_string(c1) + ", " + to_string(c2) + ") should be " + (expected ? "true" : "false"));
      if (!subsumes(c1, c1, *h)) r.fail("not reflexive on " + to_string(c1));
      if (!subsumes(Clause(), c2, *h)) r.fail("[] does not subsume " + to_string(c2));
    }
  }
  return r;
}

PropertyReport relativization_equivalence(std::uint64_t seed, std::size_t instances, const SaturationLimits& limits) {
  PropertyReport r;
  Rng rng(seed);
  std::size_t attempts = 0;
  while (r.instances < instances && attempts++ < instances * 10) {
    auto h = lattice_from(random_edges(rng, upto(rng, 1, 4), 0.35));
    if (proper_sorts(*h).size() > 6) {  // at most five sorts besides TOP
      ++r.skipped;
      continue;
    }
    Signature sig = random_signature(
        rng, *h, {.predicates = upto(rng, 1, 4), .functions = upto(rng, 0, 2), .max_arity = 2});
    std::vector<Formula> sentences;
    for (std::size_t k = upto(rng, 1, 3); k > 0; --k) sentences.push_back(random_sentence(rng, sig, 3, 2));

    Signature sorted_sig = sig;
    SkolemTable sorted_table("sk");
    std::vector<Clause> sorted;
    for (const auto& f : sentences)
      for (auto& c : clausify(f, sorted_sig, sorted_table)) sorted.push_back(std::move(c));

    Signature flat = unsorted_signature(sig);
    SkolemTable flat_table("sk");
    std::vector<Formula> relativized = relativize(sig);
    for (const auto& f : sentences) relativized.push_back(relativize(f, *h));
    std::vector<Clause> unsorted;
    for (const auto& f : relativized)
      for (auto& c : clausify(f, flat, flat_table)) unsorted.push_back(std::move(c));

    auto a = refutable(sorted, *h, limits);
    auto b = refutable(unsorted, flat.hierarchy(), limits);
    if (!a || !b) {
      ++r.skipped;
      ++r.tally["resource-limit"];
      continue;
    }
    ++r.instances;
    ++r.tally[*a ? "proved" : "saturated"];
    if (*a != *b) {
      std::string text;
      for (const auto& f : sentences) text += to_string(f) + " ; ";
      r.fail(std::string("sorted ") + (*a ? "proved" : "saturated") + ", unsorted disagrees on " + text);
    }
  }
  return r;
}

PropertyReport distributed_agreement(std::uint64_t seed, std::size_t instances, std::size_t seeds,
                                     const SaturationLimits& limits) {
  PropertyReport r;
  Rng rng(seed);
  std::size_t attempts = 0;
  while (r.instances < instances && attempts++ < instances * 10) {
    TreeInstance t = random_tree(rng, upto(rng, 2, 6));
    if (!validate_tree(*t.network).certified()) {
      r.fail("generator produced an uncertified network");
      continue;
    }
    ReportOptions options;
    options.limits = limits;
    options.record_theorem = false;

    SaturationResult central = prove_centralized(*t.network, t.query, limits);
    AgentNetwork copy = *t.network;
    ReportOutcome base = osfol_report(copy, t.query, options);
    if (base.verdict == Verdict::kSendFailure) {
      ++r.skipped;
      ++r.tally["send-failure"];
      continue;
    }
    if (base.verdict == Verdict::kResourceLimit || central.status == ProofStatus::kResourceLimit) {
      ++r.skipped;
      ++r.tally["resource-limit"];
      continue;
    }
    ++r.instances;
    ++r.tally[base.verdict == Verdict::kProved ? "proved" : "saturated"];
    bool central_proved = central.status == ProofStatus::kProved;
    if ((base.verdict == Verdict::kProved) != central_proved)
      r.fail("distributed " + std::string(to_string(base.verdict)) + " vs centralized " +
             std::string(to_string(central.status)) + " for query " + to_string(t.query));
    for (std::size_t s = 1; s <= seeds; ++s) {
      options.seed = s * 7919;
      options.concurrent = s % 2 == 1;
      AgentNetwork again = *t.network;
      Verdict v = osfol_report(again, t.query, options).verdict;
      if (v != base.verdict) {
        r.fail("seed " + std::to_string(options.seed) + " changed the verdict to " + std::string(to_string(v)));
        break;
      }
    }
  }
  if (r.instances < instances) r.fail("only " + std::to_string(r.instances) + " comparable instances generated");
  return r;
}

PropertyReport unskolemize_round_trip(std::uint64_t seed, std::size_t instances, const SaturationLimits& limits) {
  PropertyReport r;
  Rng rng(seed);
  std::size_t attempts = 0;
  while (r.instances < instances && attempts++ < instances * 10) {
    auto h = lattice_from(random_edges(rng, upto(rng, 1, 3), 0.4));
    std::vector<SortId> sorts = proper_sorts(*h);
    Signature sig = random_signature(rng, *h, {.predicates = upto(rng, 1, 3), .functions = 0, .max_arity = 2});

    std::vector<Variable> chain{{Symbol("x1"), pick(rng, sorts)}, {Symbol("x2"), pick(rng, sorts)}};
    struct Sk {
      Symbol name;
      std::size_t arity;
      SortId result;
    };
    std::vector<Sk> sks;
    std::set<Symbol> skolems;
    for (std::size_t j = upto(rng, 1, 3); j > 0; --j) {
      Sk s{Symbol("sk" + std::to_string(j)), upto(rng, 0, 2), pick(rng, sorts)};
      std::vector<SortId> args;
      for (std::size_t i = 0; i < s.arity; ++i) args.push_back(chain[i].sort);
      sig.declare_function(s.name, args, s.result);
      skolems.insert(s.name);
      sks.push_back(s);
    }

    std::vector<Clause> input;
    for (std::size_t n = upto(rng, 1, 4); n > 0; --n) {
      std::size_t k = upto(rng, 0, 2);
      std::vector<Variable> vars(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(k));
      auto term_for = [&](SortId s) -> std::optional<Term> {
        std::vector<Term> options;
        for (const auto& v : vars)
          if (h->leq(v.sort, s)) options.push_back(Term::variable(v));
        for (const auto& sk : sks) {
          if (sk.arity > k || !h->leq(sk.result, s)) continue;
          std::vector<Term> args;
          for (std::size_t i = 0; i < sk.arity; ++i) args.push_back(Term::variable(chain[i]));
          options.push_back(Term::application(sk.name, sk.result, std::move(args)));
        }
        if (options.empty() || coin(rng, 0.2)) return random_term(rng, sig, s, 0, {});
        return pick(rng, options);
      };
      std::vector<Literal> lits;
      for (std::size_t l = upto(rng, 1, 3); l > 0; --l) {
        std::vector<const PredicateDecl*> preds;
        for (const auto& [_, d] : sig.predicates())
          if (!d.sort_predicate) preds.push_back(&d);
        const PredicateDecl* p = pick(rng, preds);
        Atom a{p->name, {}};
        for (SortId s : p->args) {
          auto t = term_for(s);
          if (!t) break;
          a.args.push_back(*t);
        }
        if (a.args.size() == p->args.size()) lits.push_back({coin(rng, 0.5), a});
      }
      input.emplace_back(std::move(lits));
    }
    if (check_acceptable(input, skolems)) {
      ++r.skipped;
      ++r.tally["not-acceptable"];
      continue;
    }
    UnskolemizeResult u = unskolemize(input, skolems);
    if (!u) {
      ++r.skipped;
      ++r.tally["unskolemize-failure"];
      continue;
    }

    std::vector<Clause> adversary;
    auto ys = random_variables(rng, *h, 2, "y");
    Signature plain = sig;
    for (std::size_t n = upto(rng, 1, 4); n > 0; --n) {
      Clause c = random_clause(rng, plain, 2, 0, ys);
      bool clean = std::none_of(c.begin(), c.end(), [&](const Literal& l) {
        std::vector<Symbol> fs;
        for (const auto& t : l.atom.args) collect_functions(t, fs);
        return std::any_of(fs.begin(), fs.end(), [&](Symbol f) { return skolems.contains(f); });
      });
      if (clean) adversary.push_back(std::move(c));
    }

    std::vector<Clause> left = input;
    left.insert(left.end(), adversary.begin(), adversary.end());
    Signature rt_sig = sig;
    SkolemTable table("rt");
    std::vector<Clause> right = adversary;
    for (const auto& f : u.as_formulas()) {
      for (Symbol s : functions_of(f))
        if (skolems.contains(s)) r.fail("un-Skolemized formula still mentions " + s.name());
      for (auto& c : clausify(f, rt_sig, table)) right.push_back(std::move(c));
    }
    auto a = refutable(left, *h, limits);
    auto b = refutable(right, *h, limits);
    if (!a || !b) {
      ++r.skipped;
      ++r.tally["resource-limit"];
      continue;
    }
    ++r.instances;
    ++r.tally[*a ? "proved" : "saturated"];
    if (*a != *b) {
      std::string text;
      for (const auto& c : input) text += to_string(c) + " ; ";
      r.fail("round trip changed refutability of " + text);
    }
  }
  if (r.instances < instances) r.fail("only " + std::to_string(r.instances) + " comparable instances generated");
  return r;
}

}  // namespace osfol::testing
