#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "osfol/term.hpp"

namespace osfol {

/// Separator between a variable's stem and the counter appended by
/// FreshNames. It cannot occur in parsed identifiers.
inline constexpr char kFreshSeparator = '#';

/// Session-scoped source of fresh names. Not thread-safe; each concurrent
/// proving task owns its own instance.
class FreshNames {
 public:
  /// A new variable of sort `sort` named `<stem>#<n>`.
  Variable variable(std::string_view stem, SortId sort);
  /// A fresh copy of `v` at the same sort.
  Variable rename(const Variable& v) { return variable(stem_of(v.name.name()), v.sort); }

  /// The first `<prefix><n>` (n >= 1) for which `taken` is false.
  Symbol symbol(std::string_view prefix, const std::function<bool(Symbol)>& taken);

  /// `name` without any `#<n>` suffix.
  static std::string stem_of(std::string_view name);

 private:
  std::uint64_t next_variable_ = 0;
  std::uint64_t next_symbol_ = 0;
};

/// Renames the clause's variables to short readable names (stems, suffixed
/// `_2`, `_3`, ... on collision) in first-occurrence order. The result is a
/// variant of the input.
Clause normalize_variables(const Clause& c);

}  // namespace osfol
