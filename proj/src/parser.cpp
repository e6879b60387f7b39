#include "osfol/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "osfol/error.hpp"
#include "osfol/printer.hpp"

namespace osfol {

namespace {

enum class Tok { kIdent, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 0;
  int column = 0;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view text, int line) {
  std::vector<Token> out;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (ident_char(c) || (c == '$' && i + 1 < text.size() && ident_char(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (ident_char(text[j]) || (text[j] == '-' && j + 1 < text.size() && std::isalpha(static_cast<unsigned char>(text[j + 1])))))
        ++j;
      t.kind = Tok::kIdent;
      t.text = std::string(text.substr(i, j - i));
    } else if (text.substr(i, 2) == "=>" || text.substr(i, 2) == "->" || text.substr(i, 2) == "[]") {
      t.kind = Tok::kPunct;
      t.text = std::string(text.substr(i, 2));
    } else if (std::string_view("(),:.~&|<[];").find(c) != std::string_view::npos) {
      t.kind = Tok::kPunct;
      t.text = std::string(1, c);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    i += t.text.size();
    column += static_cast<int>(t.text.size());
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists"; }

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig, int line) : tokens_(tokenize(text, line)), sig_(sig) {}

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::kEnd; }
  bool is(std::string_view punct) const { return peek().kind == Tok::kPunct && peek().text == punct; }
  bool is_word(std::string_view w) const { return peek().kind == Tok::kIdent && peek().text == w; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, at.line, at.column); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void expect(std::string_view punct) {
    if (!is(punct)) fail("expected '" + std::string(punct) + "'" + found());
    ++pos_;
  }

  Token ident(std::string_view what) {
    if (peek().kind != Tok::kIdent) fail("expected " + std::string(what) + found());
    return next();
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

  std::string found() const {
    if (at_end()) return " at end of input";
    return ", found '" + peek().text + "'";
  }

  SortId sort_name(const Token& t) const {
    SortId s(t.text);
    if (sig_ && !sig_->hierarchy().contains(s)) fail("unknown sort '" + t.text + "'", t);
    return s;
  }

  std::vector<std::pair<Term, Token>> arguments() {
    std::vector<std::pair<Term, Token>> args;
    expect("(");
    if (is(")")) {
      ++pos_;
      return args;
    }
    while (true) {
      Token at = peek();
      args.emplace_back(term(), at);
      if (is(")")) {
        ++pos_;
        return args;
      }
      if (is(",")) ++pos_;
      if (at_end()) fail("expected ')'" + found());
    }
  }

  void check_arguments(const std::string& kind, const Token& name, const std::vector<SortId>& declared,
                       const std::vector<std::pair<Term, Token>>& args) const {
    if (declared.size() != args.size())
      fail(kind + " '" + name.text + "' expects " + std::to_string(declared.size()) + " arguments, got " +
               std::to_string(args.size()),
           name);
    for (std::size_t i = 0; i < args.size(); ++i)
      if (!sig_->hierarchy().leq(args[i].first.sort(), declared[i]))
        fail("argument " + std::to_string(i + 1) + " of '" + name.text + "' has sort " +
                 args[i].first.sort().name() + ", expected a subsort of " + declared[i].name(),
             args[i].second);
  }

  Term term() {
    Token name = ident("a term");
    if (is(":")) {
      ++pos_;
      Token s = ident("a sort");
      return Term::variable({Symbol(name.text), sort_name(s)});
    }
    if (is("(")) {
      const FunctionDecl* f = sig_->find_function(Symbol(name.text));
      if (!f) fail("undeclared function '" + name.text + "'", name);
      auto args = arguments();
      check_arguments("function", name, f->args, args);
      std::vector<Term> ts;
      for (auto& [t, tok] : args) ts.push_back(std::move(t));
      return Term::application(f->name, f->result, std::move(ts));
    }
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name.name() == name.text) return Term::variable(*it);
    const FunctionDecl* f = sig_->find_function(Symbol(name.text));
    if (!f) fail("undeclared symbol '" + name.text + "' (variables are written name:Sort)", name);
    if (!f->args.empty()) fail("function '" + name.text + "' needs arguments", name);
    return Term::application(f->name, f->result);
  }

  Atom atom() {
    Token name = ident("a predicate");
    const PredicateDecl* p = sig_->find_predicate(Symbol(name.text));
    if (!p) {
      if (sig_->find_function(Symbol(name.text))) fail("'" + name.text + "' is a function, expected a predicate", name);
      fail("undeclared predicate '" + name.text + "'", name);
    }
    std::vector<std::pair<Term, Token>> args;
    if (is("(")) args = arguments();
    check_arguments("predicate", name, p->args, args);
    Atom a{p->name, {}};
    for (auto& [t, tok] : args) a.args.push_back(std::move(t));
    return a;
  }

  Literal literal() {
    bool positive = true;
    while (is("~")) {
      ++pos_;
      positive = !positive;
    }
    return {positive, atom()};
  }

  std::vector<Literal> literals() {
    std::vector<Literal> out;
    if (is("[]")) {
      ++pos_;
      return out;
    }
    out.push_back(literal());
    while (is("|")) {
      ++pos_;
      out.push_back(literal());
    }
    return out;
  }

  Formula formula() {
    if (is_word("forall") || is_word("exists")) return quantified();
    Formula lhs = disjunction();
    if (is("=>")) {
      ++pos_;
      return Formula::implication(lhs, formula());
    }
    return lhs;
  }

  Formula quantified() {
    std::vector<std::pair<Formula::Kind, Variable>> block;
    while (is_word("forall") || is_word("exists")) {
      Formula::Kind kind = next().text == "forall" ? Formula::Kind::Forall : Formula::Kind::Exists;
      if (peek().kind != Tok::kIdent || is_keyword(peek().text)) fail("expected a variable" + found());
      while (peek().kind == Tok::kIdent && !is_keyword(peek().text)) {
        Token v = next();
        expect(":");
        Token s = ident("a sort");
        block.emplace_back(kind, Variable{Symbol(v.text), sort_name(s)});
      }
    }
    expect(".");
    std::size_t mark = scope_.size();
    for (const auto& [k, v] : block) scope_.push_back(v);
    Formula body = formula();
    scope_.resize(mark);
    for (auto it = block.rbegin(); it != block.rend(); ++it)
      body = it->first == Formula::Kind::Forall ? Formula::forall(it->second, body) : Formula::exists(it->second, body);
    return body;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (is("|")) {
      ++pos_;
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? parts[0] : Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (is("&")) {
      ++pos_;
      parts.push_back(unary());
    }
    return parts.size() == 1 ? parts[0] : Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    if (is("~")) {
      ++pos_;
      return Formula::negation(unary());
    }
    if (is("(")) {
      ++pos_;
      Formula f = formula();
      expect(")");
      return f;
    }
    if (is_word("forall") || is_word("exists")) return quantified();
    if (is_word("$true")) {
      ++pos_;
      return Formula::truth();
    }
    if (is_word("$false")) {
      ++pos_;
      return Formula::falsity();
    }
    return Formula::atom(atom());
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* sig_;
  std::vector<Variable> scope_;
};

struct Line {
  int number;
  std::string text;
};

struct Section {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<Line> lines;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto c = raw.find_first_of("#%"); c != std::string_view::npos) raw = raw.substr(0, c);
    std::string line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[' && line != "[]" && line.back() == ']') {
      std::string inner = trim(std::string_view(line).substr(1, line.size() - 2));
      Section s;
      s.line = number;
      auto sp = inner.find_first_of(" \t");
      s.kind = inner.substr(0, sp);
      if (sp != std::string::npos) s.name = trim(std::string_view(inner).substr(sp));
      out.push_back(std::move(s));
    } else {
      if (out.empty()) throw ParseError("content before the first section header", number, 1);
      out.back().lines.push_back({number, line});
    }
    if (end == text.size()) break;
  }
  return out;
}

bool starts_with_word(const std::string& line, std::string_view word) {
  return line.size() > word.size() && line.compare(0, word.size(), word) == 0 &&
         std::isspace(static_cast<unsigned char>(line[word.size()]));
}

void note_sort(std::vector<SortId>& sorts, SortId s) {
  if (s.name() == kTopSortName || s.name() == kBottomSortName) return;
  if (std::find(sorts.begin(), sorts.end(), s) == sorts.end()) sorts.push_back(s);
}

/// `sort W < A, B`, `witness w : W`, or a first-order sort module clause.
void parse_sort_line(const Line& l, ProblemFile& p, std::vector<SortModuleClause>& general) {
  Parser ps(l.text, nullptr, l.number);
  if (starts_with_word(l.text, "sort") || l.text == "sort") {
    ps.next();
    Token s = ps.ident("a sort name");
    note_sort(p.sorts, SortId(s.text));
    if (ps.is("<")) {
      ps.next();
      while (true) {
        Token up = ps.ident("a sort name");
        note_sort(p.sorts, SortId(up.text));
        p.subsorts.emplace_back(SortId(s.text), SortId(up.text));
        if (!ps.is(",")) break;
        ps.next();
      }
    }
    ps.expect_end();
    return;
  }
  if (starts_with_word(l.text, "witness")) {
    ps.next();
    Token c = ps.ident("a constant");
    ps.expect(":");
    Token s = ps.ident("a sort name");
    ps.expect_end();
    note_sort(p.sorts, SortId(s.text));
    p.witnesses.push_back({Symbol(c.text), SortId(s.text)});
    return;
  }
  if (l.text == "synthesize-glbs") {
    p.synthesize_glbs = true;
    return;
  }

  std::set<std::string> bound;
  if (ps.is_word("forall")) {
    ps.next();
    while (ps.peek().kind == Tok::kIdent) bound.insert(ps.next().text);
    ps.expect(".");
  }
  struct RawAtom {
    std::string sort, arg;
  };
  auto raw_atom = [&]() {
    Token s = ps.ident("a sort name");
    ps.expect("(");
    Token a = ps.ident("an argument");
    ps.expect(")");
    return RawAtom{s.text, a.text};
  };
  std::vector<RawAtom> body{raw_atom()};
  while (ps.is("&")) {
    ps.next();
    body.push_back(raw_atom());
  }
  std::optional<RawAtom> head;
  if (ps.is("->") || ps.is("=>")) {
    ps.next();
    head = raw_atom();
  }
  ps.expect_end();
  if (!head) {
    if (body.size() != 1) throw ParseError("a sort module fact must be a single atom", l.number, 1);
    head = body.front();
    body.clear();
  }
  auto to_sort_atom = [&](const RawAtom& r) {
    bool var = !body.empty() || bound.contains(r.arg);
    return SortAtom{Symbol(r.sort), Symbol(r.arg), var};
  };
  SortModuleClause c{to_sort_atom(*head), {}, l.number};
  for (const auto& b : body) c.body.push_back(to_sort_atom(b));
  note_sort(p.sorts, SortId(c.head.sort));
  for (const auto& b : c.body) note_sort(p.sorts, SortId(b.sort));
  if (c.body.empty() && !c.head.argument_is_variable) {
    p.witnesses.push_back({c.head.argument, SortId(c.head.sort)});
  } else if (c.body.size() == 1 && c.body[0].argument_is_variable && c.head.argument_is_variable &&
             c.body[0].argument == c.head.argument) {
    p.subsorts.emplace_back(SortId(c.body[0].sort), SortId(c.head.sort));
  } else {
    general.push_back(std::move(c));
  }
}

std::vector<SortId> sort_list(Parser& ps) {
  std::vector<SortId> out;
  ps.expect("(");
  if (ps.is(")")) {
    ps.next();
    return out;
  }
  while (true) {
    out.push_back(ps.sort_name(ps.ident("a sort name")));
    if (ps.is(")")) {
      ps.next();
      return out;
    }
    ps.expect(",");
  }
}

template <typename F>
auto at_line(const Line& l, F&& f) {
  try {
    return f();
  } catch (const SortError& e) {
    throw ParseError(e.what(), l.number, 1);
  } catch (const SortHierarchyError& e) {
    throw ParseError(e.what(), l.number, 1);
  }
}

}  // namespace

bool operator==(const AgentSection& a, const AgentSection& b) {
  return a.id == b.id && a.reports_to == b.reports_to && a.predicates == b.predicates && a.functions == b.functions &&
         a.clauses == b.clauses;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  auto edges = [](const ProblemFile& p) { return std::set(p.subsorts.begin(), p.subsorts.end()); };
  auto witnesses = [](const ProblemFile& p) {
    std::vector<std::pair<Symbol, SortId>> w;
    for (const auto& x : p.witnesses) w.emplace_back(x.constant, x.sort);
    return w;
  };
  bool same_query = a.query.has_value() == b.query.has_value() && (!a.query || *a.query == *b.query);
  return a.sorts == b.sorts && edges(a) == edges(b) && witnesses(a) == witnesses(b) &&
         a.synthesize_glbs == b.synthesize_glbs && a.decider == b.decider && a.agents == b.agents && same_query;
}

Signature ProblemFile::signature_of(const AgentSection& a) const {
  Signature sig(*hierarchy);
  for (const auto& p : a.predicates) sig.declare_predicate(p.name, p.args);
  for (const auto& f : a.functions) sig.declare_function(f.name, f.args, f.result);
  return sig;
}

Signature ProblemFile::merged_signature() const {
  Signature sig(*hierarchy);
  for (const auto& a : agents) {
    for (const auto& p : a.predicates) sig.declare_predicate(p.name, p.args);
    for (const auto& f : a.functions) sig.declare_function(f.name, f.args, f.result);
  }
  return sig;
}

AgentNetwork ProblemFile::network() const {
  std::string d;
  if (decider) {
    d = *decider;
  } else if (agents.size() == 1) {
    d = agents.front().id;
  } else {
    throw Error(agents.empty() ? "problem has no agents" : "problem has several agents but no decider");
  }
  std::vector<Agent> out;
  for (const auto& a : agents) out.push_back({a.id, a.reports_to, signature_of(a), a.clauses});
  return AgentNetwork(hierarchy, std::move(out), d);
}

ProblemFile parse_problem(std::string_view text, const ParseOptions& options) {
  ProblemFile p;
  p.synthesize_glbs = options.synthesize_glbs;
  std::vector<Section> sections = split_sections(text);

  std::vector<SortModuleClause> general;
  bool seen_sorts = false;
  for (const auto& s : sections) {
    if (s.kind != "sorts") continue;
    if (seen_sorts) throw ParseError("duplicate [sorts] section", s.line, 1);
    seen_sorts = true;
    for (const auto& l : s.lines) parse_sort_line(l, p, general);
  }

  std::vector<SortModuleClause> clauses = general;
  for (const auto& [lo, up] : p.subsorts)
    clauses.push_back({{up.symbol(), Symbol("x"), true}, {{lo.symbol(), Symbol("x"), true}}, 0});
  for (const auto& w : p.witnesses) clauses.push_back({{w.sort.symbol(), w.constant, false}, {}, 0});
  SortHierarchy h = load_sort_module(p.sorts, clauses);
  if (!h.is_lattice()) {
    if (!p.synthesize_glbs) {
      auto [a, b] = h.glb_violations().front();
      throw SortHierarchyError("sorts " + a.name() + " and " + b.name() +
                               " have no unique greatest lower bound (enable GLB synthesis to add one)");
    }
    h = h.synthesize_glbs();
  }
  p.hierarchy = std::make_shared<const SortHierarchy>(std::move(h));

  std::vector<const Section*> agent_sections;
  const Section* query = nullptr;
  for (const auto& s : sections) {
    if (s.kind == "sorts") continue;
    if (s.kind == "network") {
      for (const auto& l : s.lines) {
        Parser ps(l.text, nullptr, l.number);
        if (!ps.is_word("decider")) ps.fail("expected 'decider <agent>'");
        ps.next();
        Token d = ps.ident("an agent name");
        ps.expect_end();
        if (p.decider && *p.decider != d.text) throw ParseError("several deciders declared", l.number, 1);
        p.decider = d.text;
      }
    } else if (s.kind == "agent") {
      if (s.name.empty()) throw ParseError("agent section needs a name", s.line, 1);
      agent_sections.push_back(&s);
    } else if (s.kind == "query") {
      if (query) throw ParseError("duplicate [query] section", s.line, 1);
      query = &s;
    } else {
      throw ParseError("unknown section [" + s.kind + "]", s.line, 1);
    }
  }

  for (const Section* s : agent_sections) {
    AgentSection a;
    a.id = s->name;
    a.line = s->line;
    for (const auto& existing : p.agents)
      if (existing.id == a.id) throw ParseError("duplicate agent '" + a.id + "'", s->line, 1);
    Signature sig(*p.hierarchy);
    std::vector<const Line*> clause_lines;
    for (const auto& l : s->lines) {
      Parser ps(l.text, &sig, l.number);
      if (starts_with_word(l.text, "reports-to")) {
        ps.next();
        while (true) {
          a.reports_to.push_back(ps.ident("an agent name").text);
          if (!ps.is(",")) break;
          ps.next();
        }
        ps.expect_end();
      } else if (starts_with_word(l.text, "pred") && ps.peek(1).kind == Tok::kIdent &&
                 (ps.peek(2).kind == Tok::kEnd || ps.peek(2).text == ":")) {
        ps.next();
        Token name = ps.ident("a predicate name");
        std::vector<SortId> args;
        if (ps.is(":")) {
          ps.next();
          args = sort_list(ps);
        }
        ps.expect_end();
        PredicateDecl d{Symbol(name.text), args, false};
        at_line(l, [&] {
          sig.declare_predicate(d.name, d.args);
          return 0;
        });
        a.predicates.push_back(std::move(d));
      } else if ((starts_with_word(l.text, "func") || starts_with_word(l.text, "const")) &&
                 ps.peek(1).kind == Tok::kIdent && ps.peek(2).text == ":") {
        bool constant = ps.next().text == "const";
        Token name = ps.ident("a function name");
        ps.expect(":");
        std::vector<SortId> args;
        if (!constant) {
          args = sort_list(ps);
          ps.expect("->");
        }
        SortId result = ps.sort_name(ps.ident("a sort name"));
        ps.expect_end();
        FunctionDecl d{Symbol(name.text), args, result};
        at_line(l, [&] {
          sig.declare_function(d.name, d.args, d.result);
          return 0;
        });
        a.functions.push_back(std::move(d));
      } else {
        clause_lines.push_back(&l);
      }
    }
    for (const Line* l : clause_lines) a.clauses.push_back(parse_clause(l->text, sig, l->number));
    p.agents.push_back(std::move(a));
  }

  if (p.decider && std::none_of(p.agents.begin(), p.agents.end(),
                                [&](const AgentSection& a) { return a.id == *p.decider; }))
    throw ParseError("decider '" + *p.decider + "' has no [agent] section", 1, 1);

  if (query) {
    std::string body;
    for (const auto& l : query->lines) body += l.text + "\n";
    const AgentSection* d = nullptr;
    for (const auto& a : p.agents)
      if ((p.decider && a.id == *p.decider) || (!p.decider && p.agents.size() == 1)) d = &a;
    Signature sig = d ? p.signature_of(*d) : Signature(*p.hierarchy);
    int first = query->lines.empty() ? query->line : query->lines.front().number;
    if (!query->lines.empty()) p.query = parse_formula(body, sig, first);
  }
  return p;
}

namespace {

std::string sort_tuple(const std::vector<SortId>& args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i].name();
  return out + ")";
}

}  // namespace

std::string print_problem(const ProblemFile& p) {
  std::ostringstream out;
  out << "[sorts]\n";
  if (p.synthesize_glbs) out << "synthesize-glbs\n";
  for (SortId s : p.sorts) {
    out << "sort " << s.name();
    bool first = true;
    for (const auto& [lo, up] : p.subsorts)
      if (lo == s) {
        out << (first ? " < " : ", ") << up.name();
        first = false;
      }
    out << "\n";
  }
  for (const auto& w : p.witnesses) out << "witness " << w.constant.name() << " : " << w.sort.name() << "\n";
  if (p.decider) out << "\n[network]\ndecider " << *p.decider << "\n";
  for (const auto& a : p.agents) {
    out << "\n[agent " << a.id << "]\n";
    if (!a.reports_to.empty()) {
      out << "reports-to ";
      for (std::size_t i = 0; i < a.reports_to.size(); ++i) out << (i ? ", " : "") << a.reports_to[i];
      out << "\n";
    }
    for (const auto& d : a.predicates) out << "pred " << d.name.name() << " : " << sort_tuple(d.args) << "\n";
    for (const auto& d : a.functions) {
      if (d.args.empty()) {
        out << "const " << d.name.name() << " : " << d.result.name() << "\n";
      } else {
        out << "func " << d.name.name() << " : " << sort_tuple(d.args) << " -> " << d.result.name() << "\n";
      }
    }
    for (const auto& c : a.clauses) out << to_string(c) << "\n";
  }
  if (p.query) out << "\n[query]\n" << to_string(*p.query) << "\n";
  return out.str();
}

Formula parse_formula(std::string_view text, const Signature& sig, int line) {
  Parser ps(text, &sig, line);
  if (ps.at_end()) ps.fail("empty formula");
  Formula f = ps.formula();
  ps.expect_end();
  return f;
}

std::vector<Literal> parse_literals(std::string_view text, const Signature& sig, int line) {
  Parser ps(text, &sig, line);
  if (ps.at_end()) ps.fail("empty clause text (write [] for the empty clause)");
  auto lits = ps.literals();
  ps.expect_end();
  return lits;
}

Clause parse_clause(std::string_view text, const Signature& sig, int line) {
  return Clause(parse_literals(text, sig, line));
}

Term parse_term(std::string_view text, const Signature& sig, int line) {
  Parser ps(text, &sig, line);
  Term t = ps.term();
  ps.expect_end();
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace osfol
