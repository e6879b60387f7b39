#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "osfol/saturation.hpp"
#include "osfol/signature.hpp"

namespace osfol {

/// One line per step: `id. <literals> ; <rule>` where the rule is `input`,
/// `received <agent>`, `query`, `resolve N(i) + M(j)`, `factor N(i,j)`,
/// `factor N`, or `sort N(i)`. Literal indices are 1-based.
std::string print_trace(const ProofTrace& trace);
std::string print_step(const ProofStep& step);

/// Parses the format above. A bare `N(i) + M(j)` is read as a resolution
/// step, `factoring from (N)` as `factor N`, and a leading `(id)` is allowed.
/// Literals keep their written order, which the indices refer to.
ProofTrace parse_trace(std::string_view text, const Signature& sig);

struct ReplayError {
  std::size_t step = 0;  // trace id of the failing step
  std::string message;
};

/// Recomputes every inference and checks that the recorded clause is a
/// variant of the result. If `axioms` is non-empty, every input, received or
/// query step must be a variant of one of them.
std::optional<ReplayError> replay(const ProofTrace& trace, const SortHierarchy& sorts,
                                  std::span<const Clause> axioms = {});

}  // namespace osfol
