#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "osfol/error.hpp"
#include "osfol/sort_hierarchy.hpp"

using namespace osfol;
using namespace osfol::testing;

namespace {

SortHierarchy steamroller_sorts() {
  std::vector<SortId> sorts;
  for (auto s : {"A", "W", "F", "B", "C", "S", "P", "G"}) sorts.emplace_back(s);
  std::vector<std::pair<SortId, SortId>> edges;
  for (auto s : {"W", "F", "B", "C", "S"}) edges.emplace_back(SortId(s), SortId("A"));
  edges.emplace_back(SortId("G"), SortId("P"));
  return SortHierarchy::build(sorts, edges);
}

/// Two sorts sharing two incomparable lower bounds.
SortHierarchy diamond_without_meet() {
  std::vector<SortId> sorts{SortId("a"), SortId("b"), SortId("c"), SortId("d")};
  std::vector<std::pair<SortId, SortId>> edges{{SortId("c"), SortId("a")},
                                               {SortId("c"), SortId("b")},
                                               {SortId("d"), SortId("a")},
                                               {SortId("d"), SortId("b")}};
  return SortHierarchy::build(sorts, edges);
}

}  // namespace

TEST_CASE("top and bottom bracket every sort") {
  SortHierarchy h = steamroller_sorts();
  for (SortId s : h.sorts()) {
    CHECK(h.leq(s, h.top()));
    CHECK(h.leq(h.bottom(), s));
    CHECK(h.leq(s, s));
  }
  CHECK(h.less(SortId("W"), SortId("A")));
  CHECK_FALSE(h.leq(SortId("A"), SortId("W")));
  CHECK_FALSE(h.leq(SortId("G"), SortId("A")));
}

TEST_CASE("meet of siblings is bottom, meet along a chain is the lower sort") {
  SortHierarchy h = steamroller_sorts();
  CHECK(h.meet(SortId("W"), SortId("F")) == h.bottom());
  CHECK(h.meet(SortId("W"), SortId("A")) == SortId("W"));
  CHECK(h.meet(SortId("A"), h.top()) == SortId("A"));
  std::vector<SortId> three{SortId("A"), SortId("W"), h.top()};
  CHECK(h.glb(three).glb == SortId("W"));
  CHECK(h.is_lattice());
}

TEST_CASE("missing meet is reported with its maximal lower bounds") {
  SortHierarchy h = diamond_without_meet();
  std::vector<SortId> ab{SortId("a"), SortId("b")};
  GlbResult r = h.glb(ab);
  CHECK_FALSE(r);
  CHECK(r.maximal_lower_bounds.size() == 2);
  CHECK_FALSE(h.is_lattice());
  CHECK_FALSE(h.meet(SortId("a"), SortId("b")).has_value());
}

TEST_CASE("GLB synthesis adds the intersection of down-sets") {
  SortHierarchy h = diamond_without_meet().synthesize_glbs();
  REQUIRE(h.is_lattice());
  auto m = h.meet(SortId("a"), SortId("b"));
  REQUIRE(m.has_value());
  CHECK(h.is_synthetic(*m));
  CHECK(h.less(SortId("c"), *m));
  CHECK(h.less(SortId("d"), *m));
  CHECK(h.less(*m, SortId("a")));
  CHECK(h.less(*m, SortId("b")));
}

TEST_CASE("cycles and unknown sorts are rejected") {
  std::vector<SortId> sorts{SortId("a"), SortId("b")};
  std::vector<std::pair<SortId, SortId>> cyclic{{SortId("a"), SortId("b")}, {SortId("b"), SortId("a")}};
  CHECK_THROWS_AS(SortHierarchy::build(sorts, cyclic), SortHierarchyError);
  std::vector<std::pair<SortId, SortId>> unknown{{SortId("a"), SortId("z")}};
  CHECK_THROWS_AS(SortHierarchy::build(sorts, unknown), SortHierarchyError);
}

TEST_CASE("cover edges form the Hasse diagram") {
  SortHierarchy h = steamroller_sorts();
  auto covers = h.cover_edges();
  auto has = [&](const char* lo, const char* up) {
    return std::find(covers.begin(), covers.end(), std::pair{SortId(lo), SortId(up)}) != covers.end();
  };
  CHECK(has("W", "A"));
  CHECK(has("A", "TOP"));
  CHECK_FALSE(has("W", "TOP"));
  CHECK(has("BOT", "G"));
}

TEST_CASE("sort module loading") {
  std::vector<SortModuleClause> clauses;
  clauses.push_back({{Symbol("A"), Symbol("x"), true}, {{Symbol("W"), Symbol("x"), true}}, 1});
  clauses.push_back({{Symbol("W"), Symbol("w"), false}, {}, 2});

  SUBCASE("subsort axioms and witnesses") {
    SortHierarchy h = load_sort_module({}, clauses);
    CHECK(h.less(SortId("W"), SortId("A")));
    REQUIRE(h.witnesses().size() == 1);
    CHECK(h.witnesses()[0].constant == Symbol("w"));
    CHECK(h.uninhabited().empty());
  }
  SUBCASE("a sort without a witness is uninhabited") {
    std::vector<SortId> extra{SortId("Z")};
    CHECK_THROWS_AS(load_sort_module(extra, clauses), SortHierarchyError);
  }
  SUBCASE("non-definite shapes are rejected") {
    clauses.push_back({{Symbol("A"), Symbol("x"), true}, {{Symbol("W"), Symbol("y"), true}}, 3});
    CHECK_THROWS_AS(load_sort_module({}, clauses), SortHierarchyError);
  }
}

TEST_CASE("leq matches the closure of the edges on random orders") {
  Rng rng(7);
  for (int round = 0; round < 100; ++round) {
    EdgeSet e = random_edges(rng, 1 + round % 7, 0.35);
    SortHierarchy h = SortHierarchy::build(e.sorts, e.edges);
    auto below = down_sets(e);
    for (SortId a : e.sorts)
      for (SortId b : e.sorts) CHECK(h.leq(a, b) == below[b].contains(a));
  }
}

TEST_CASE("glb agrees with lower-bound enumeration after synthesis") {
  Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    EdgeSet e = random_edges(rng, 2 + round % 6, 0.4);
    SortHierarchy h = SortHierarchy::build(e.sorts, e.edges).synthesize_glbs();
    REQUIRE(h.is_lattice());
    for (SortId a : h.sorts())
      for (SortId b : h.sorts()) {
        auto expected = maximal_lower_bounds(h, {a, b});
        REQUIRE(expected.size() == 1);
        CHECK(h.meet(a, b) == expected.front());
      }
  }
}
