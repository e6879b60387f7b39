#pragma once

#include <string>

#include "osfol/formula.hpp"
#include "osfol/substitution.hpp"
#include "osfol/term.hpp"

namespace osfol {

// Concrete syntax shared by the parser: variables `name:Sort`, constants bare,
// negation `~`, disjunction `|`, conjunction `&`, implication `=>`, the empty
// clause `[]`, quantifier blocks `forall x:A y:B exists z:C. body`.

std::string to_string(const Variable& v);
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(const Formula& f);
std::string to_string(const Substitution& s);

/// Prints a formula as a clause when it is a universally closed disjunction
/// of literals, otherwise as a formula.
std::string to_report_string(const Formula& f);

}  // namespace osfol
