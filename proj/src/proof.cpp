#include "osfol/proof.hpp"

#include <map>
#include <regex>
#include <sstream>

#include "osfol/error.hpp"
#include "osfol/parser.hpp"
#include "osfol/printer.hpp"

namespace osfol {

namespace {

std::string literal_list(const std::vector<Literal>& lits) {
  if (lits.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < lits.size(); ++i) out += (i ? " | " : "") + to_string(lits[i]);
  return out;
}

std::string rule_text(const Justification& by) {
  auto ref = [](std::size_t id, std::size_t lit) { return std::to_string(id) + "(" + std::to_string(lit + 1) + ")"; };
  switch (by.rule) {
    case Rule::kInput:
      return "input";
    case Rule::kReceived:
      return "received " + by.origin;
    case Rule::kQuery:
      return "query";
    case Rule::kResolve:
      return "resolve " + ref(by.parents[0], by.literals[0]) + " + " + ref(by.parents[1], by.literals[1]);
    case Rule::kFactor:
      if (by.literals.size() < 2) return "factor " + std::to_string(by.parents[0]);
      return "factor " + std::to_string(by.parents[0]) + "(" + std::to_string(by.literals[0] + 1) + "," +
             std::to_string(by.literals[1] + 1) + ")";
    case Rule::kSort:
      return "sort " + ref(by.parents[0], by.literals[0]);
  }
  return "?";
}

}  // namespace

std::string print_step(const ProofStep& step) {
  return std::to_string(step.id) + ". " + literal_list(step.literals) + " ; " + rule_text(step.by);
}

std::string print_trace(const ProofTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) out += print_step(s) + "\n";
  return out;
}

ProofTrace parse_trace(std::string_view text, const Signature& sig) {
  static const std::regex head(R"(^\s*\(?(\d+)\)?\.?\s+(.*)$)");
  static const std::regex resolve(R"(^(?:resolve\s+)?(\d+)\s*\((\d+)\)\s*\+\s*(\d+)\s*\((\d+)\)$)");
  static const std::regex factor_pair(R"(^factor\s+(\d+)\s*\((\d+)\s*,\s*(\d+)\)$)");
  static const std::regex factor_any(R"(^(?:factor\s+(\d+)|factoring from \((\d+)\))$)");
  static const std::regex sort_rule(R"(^sort\s+(\d+)\s*\((\d+)\)$)");
  static const std::regex received(R"(^received\s+(\S+)$)");

  ProofTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto c = line.find_first_of("#%"); c != std::string::npos) line.erase(c);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (!std::regex_match(line, m, head)) throw ParseError("expected '<id>. <clause> ; <rule>'", number, 1);
    ProofStep step;
    step.id = std::stoul(m[1]);
    std::string rest = m[2];
    auto semi = rest.rfind(';');
    if (semi == std::string::npos) throw ParseError("missing ';' before the rule", number, 1);
    step.literals = parse_literals(rest.substr(0, semi), sig, number);
    std::string rule = rest.substr(semi + 1);
    rule.erase(0, rule.find_first_not_of(" \t"));
    rule.erase(rule.find_last_not_of(" \t\r") + 1);

    auto idx = [](const std::ssub_match& s) { return std::stoul(s.str()) - 1; };
    if (rule == "input") {
      step.by.rule = Rule::kInput;
    } else if (rule == "query") {
      step.by.rule = Rule::kQuery;
    } else if (std::regex_match(rule, m, received)) {
      step.by.rule = Rule::kReceived;
      step.by.origin = m[1];
    } else if (std::regex_match(rule, m, resolve)) {
      step.by = {Rule::kResolve, {std::stoul(m[1]), std::stoul(m[3])}, {idx(m[2]), idx(m[4])}, {}};
    } else if (std::regex_match(rule, m, factor_pair)) {
      step.by = {Rule::kFactor, {std::stoul(m[1])}, {idx(m[2]), idx(m[3])}, {}};
    } else if (std::regex_match(rule, m, factor_any)) {
      step.by = {Rule::kFactor, {std::stoul(m[1].matched ? m[1] : m[2])}, {}, {}};
    } else if (std::regex_match(rule, m, sort_rule)) {
      step.by = {Rule::kSort, {std::stoul(m[1])}, {idx(m[2])}, {}};
    } else {
      throw ParseError("unknown rule '" + rule + "'", number, static_cast<int>(line.size() - rule.size()) + 1);
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

std::optional<ReplayError> replay(const ProofTrace& trace, const SortHierarchy& sorts,
                                  std::span<const Clause> axioms) {
  std::map<std::size_t, const ProofStep*> seen;
  FreshNames fresh;
  for (const auto& step : trace.steps) {
    auto error = [&](const std::string& msg) { return ReplayError{step.id, msg}; };
    if (seen.contains(step.id)) return error("duplicate step id");
    const Clause claimed = step.clause();

    std::vector<const ProofStep*> parents;
    for (std::size_t p : step.by.parents) {
      auto it = seen.find(p);
      if (it == seen.end()) return error("parent " + std::to_string(p) + " is not an earlier step");
      parents.push_back(it->second);
    }
    auto literal_ok = [&](std::size_t parent, std::size_t lit) { return lit < parents[parent]->literals.size(); };

    std::vector<Inferred> candidates;
    switch (step.by.rule) {
      case Rule::kInput:
      case Rule::kReceived:
      case Rule::kQuery: {
        if (!axioms.empty()) {
          bool found = false;
          for (const auto& a : axioms)
            if (is_variant(a, claimed)) {
              found = true;
              break;
            }
          if (!found) return error("not among the input clauses");
        }
        seen[step.id] = &step;
        continue;
      }
      case Rule::kResolve: {
        if (parents.size() != 2 || step.by.literals.size() != 2) return error("malformed resolution step");
        if (!literal_ok(0, step.by.literals[0]) || !literal_ok(1, step.by.literals[1]))
          return error("literal index out of range");
        for (auto& r : resolvents(parents[0]->literals, parents[1]->literals, sorts, fresh))
          if (r.left_literal == step.by.literals[0] && r.right_literal == step.by.literals[1])
            candidates.push_back(std::move(r));
        if (candidates.empty()) return error("the selected literals do not resolve");
        break;
      }
      case Rule::kFactor: {
        if (parents.size() != 1) return error("malformed factoring step");
        for (auto& f : factors(parents[0]->literals, sorts, fresh)) {
          if (step.by.literals.size() == 2) {
            std::size_t a = std::min(step.by.literals[0], step.by.literals[1]);
            std::size_t b = std::max(step.by.literals[0], step.by.literals[1]);
            if (f.left_literal != a || f.right_literal != b) continue;
          }
          candidates.push_back(std::move(f));
        }
        if (candidates.empty()) return error("no factor of the parent");
        break;
      }
      case Rule::kSort: {
        if (parents.size() != 1 || step.by.literals.size() != 1) return error("malformed sort step");
        for (auto& s : sort_resolvents(parents[0]->literals, sorts, fresh))
          if (s.left_literal == step.by.literals[0]) candidates.push_back(std::move(s));
        if (candidates.empty()) return error("the selected literal is not a resolvable sort literal");
        break;
      }
    }
    bool matched = false;
    for (const auto& c : candidates)
      if (is_variant(c.clause, claimed)) {
        matched = true;
        break;
      }
    if (!matched) return error("recorded clause is not a variant of " + to_string(candidates.front().clause));
    seen[step.id] = &step;
  }
  return std::nullopt;
}

}  // namespace osfol
