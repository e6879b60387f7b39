#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "osfol/symbol.hpp"

namespace osfol {

inline constexpr std::string_view kTopSortName = "TOP";
inline constexpr std::string_view kBottomSortName = "BOT";

class SortId {
 public:
  SortId() = default;
  explicit SortId(Symbol name) : name_(name) {}
  explicit SortId(std::string_view name) : name_(name) {}

  Symbol symbol() const { return name_; }
  const std::string& name() const { return name_.name(); }

  friend bool operator==(SortId, SortId) = default;
  friend auto operator<=>(SortId, SortId) = default;

 private:
  Symbol name_;
};

/// Outcome of a greatest-lower-bound query. When the common lower bounds have
/// no unique maximum, `glb` is empty and `maximal_lower_bounds` lists them.
struct GlbResult {
  std::optional<SortId> glb;
  std::vector<SortId> maximal_lower_bounds;

  explicit operator bool() const { return glb.has_value(); }
};

/// A witness constant declared by the sort module: `constant` has sort `sort`.
struct Witness {
  Symbol constant;
  SortId sort;
};

/// Finite partial order of sorts with TOP and BOT. Immutable once built.
class SortHierarchy {
 public:
  /// TOP and BOT only.
  SortHierarchy();

  /// `sorts` may omit TOP/BOT. `edges` are direct facts `first <= second`.
  /// Throws SortHierarchyError on unknown sorts or antisymmetry violations.
  static SortHierarchy build(std::span<const SortId> sorts, std::span<const std::pair<SortId, SortId>> edges,
                             std::span<const Witness> witnesses = {});

  SortId top() const { return sorts_[0]; }
  SortId bottom() const { return sorts_[1]; }

  bool contains(SortId s) const { return index_.contains(s.symbol()); }
  bool leq(SortId a, SortId b) const;
  bool less(SortId a, SortId b) const { return a != b && leq(a, b); }

  GlbResult glb(std::span<const SortId> sorts) const;
  /// Pairwise meet; empty when the pair has no unique greatest lower bound.
  std::optional<SortId> meet(SortId a, SortId b) const;

  /// Declaration order: TOP, BOT, user sorts, synthetic sorts.
  const std::vector<SortId>& sorts() const { return sorts_; }
  std::size_t size() const { return sorts_.size(); }
  bool is_synthetic(SortId s) const { return synthetic_[index_of(s)]; }

  /// Hasse diagram of the order (covering pairs `lower < upper`).
  std::vector<std::pair<SortId, SortId>> cover_edges() const;

  const std::vector<Witness>& witnesses() const { return witnesses_; }

  /// Pairs of sorts whose common lower bounds lack a unique maximum.
  std::vector<std::pair<SortId, SortId>> glb_violations() const;
  bool is_lattice() const { return glb_violations().empty(); }

  /// Non-TOP/BOT, non-synthetic sorts with no witness constant at or below them.
  std::vector<SortId> uninhabited() const;

  /// Returns a hierarchy in which every pair of sorts has a unique GLB. The
  /// added sorts are the intersections of principal down-sets that are not
  /// themselves principal; names derive from the sorted minimal upper sorts.
  SortHierarchy synthesize_glbs() const;

 private:
  std::size_t index_of(SortId s) const;
  bool leq_index(std::size_t a, std::size_t b) const { return leq_[a * sorts_.size() + b] != 0; }

  std::vector<SortId> sorts_;
  std::vector<char> synthetic_;
  std::vector<char> leq_;  // reflexive-transitive closure, row-major
  std::unordered_map<Symbol, std::size_t> index_;
  std::vector<Witness> witnesses_;
};

/// A unary sort atom inside a sort-module clause, e.g. `W(x)` or `W(w)`.
struct SortAtom {
  Symbol sort;
  Symbol argument;
  bool argument_is_variable = false;
};

/// A definite clause of the sort module: `body_1 & ... & body_n -> head`.
struct SortModuleClause {
  SortAtom head;
  std::vector<SortAtom> body;
  int line = 0;
};

/// Builds the hierarchy from subsort axioms `s1(x) -> s2(x)` and ground facts
/// `s(c)`. Other definite-clause shapes are rejected. Every sort mentioned is
/// declared implicitly; `declared` adds sorts not mentioned by any clause.
/// Throws SortHierarchyError on unsupported shapes, order violations, or
/// uninhabited sorts.
SortHierarchy load_sort_module(std::span<const SortId> declared, std::span<const SortModuleClause> clauses);

}  // namespace osfol

template <>
struct std::hash<osfol::SortId> {
  std::size_t operator()(osfol::SortId s) const noexcept { return std::hash<osfol::Symbol>{}(s.symbol()); }
};
