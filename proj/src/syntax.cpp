#include "etf/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace etf::syntax {

// ---------------------------------------------------------------- sorts

int arity(Sort s) {
  switch (s) {
    case Sort::N: return 0;
    case Sort::F1: return 1;
    case Sort::F2: return 2;
    case Sort::F3: return 3;
  }
  return 0;
}

Sort function_sort(int k) {
  switch (k) {
    case 1: return Sort::F1;
    case 2: return Sort::F2;
    case 3: return Sort::F3;
    default: throw SortError("function arity must be 1, 2 or 3, got " + std::to_string(k));
  }
}

std::string to_string(Sort s) {
  switch (s) {
    case Sort::N: return "N";
    case Sort::F1: return "F1";
    case Sort::F2: return "F2";
    case Sort::F3: return "F3";
  }
  return "?";
}

Sort parse_sort(std::string_view s) {
  if (s == "N") return Sort::N;
  if (s == "F1") return Sort::F1;
  if (s == "F2") return Sort::F2;
  if (s == "F3") return Sort::F3;
  throw SortError("unknown sort '" + std::string(s) + "'");
}

SyntaxError::SyntaxError(std::size_t pos, const std::string& expected, const std::string& found)
    : std::runtime_error("syntax error at " + std::to_string(pos) + ": expected " + expected + ", found " + found),
      pos_(pos) {}

// -------------------------------------------------------------- context

Context::Context(std::initializer_list<std::pair<std::string, Sort>> decls) {
  for (const auto& [n, s] : decls) declare(n, s);
}

void Context::declare(const std::string& name, Sort s) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    if (it->second != s)
      throw SortError("'" + name + "' already declared as " + to_string(it->second) + ", not " + to_string(s));
    return;
  }
  index_.emplace(name, s);
  decls_.emplace_back(name, s);
}

std::optional<Sort> Context::lookup(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Context Context::parse_file_text(std::string_view text) {
  Context ctx;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw, name, colon, sort;
    if (!(ls >> kw)) continue;
    std::string rest;
    if (kw != "decl" || !(ls >> name)) throw SyntaxError(0, "'decl <ident> : <Sort>' on line " + std::to_string(lineno), line);
    // accept both "x : N" and "x:N"
    auto c = name.find(':');
    if (c != std::string::npos) {
      sort = name.substr(c + 1);
      name = name.substr(0, c);
      if (sort.empty()) ls >> sort;
    } else {
      if (!(ls >> colon)) throw SyntaxError(0, "':' on line " + std::to_string(lineno), line);
      if (colon == ":") {
        ls >> sort;
      } else if (colon.front() == ':') {
        sort = colon.substr(1);
      } else {
        throw SyntaxError(0, "':' on line " + std::to_string(lineno), colon);
      }
    }
    if (ls >> rest) throw SyntaxError(0, "end of line " + std::to_string(lineno), rest);
    ctx.declare(name, parse_sort(sort));
  }
  return ctx;
}

// ---------------------------------------------------------------- terms

Term::Term() : Term(zero()) {}

Term Term::zero() {
  static const Term z(std::make_shared<const Node>(Node{Kind::Zero, {}, {}}));
  return z;
}
Term Term::var(std::string name) { return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}})); }
Term Term::succ(Term t) { return Term(std::make_shared<const Node>(Node{Kind::Succ, {}, {std::move(t)}})); }
Term Term::app(std::string fn, std::vector<Term> args) {
  if (args.empty() || args.size() > 3) throw SortError("application of '" + fn + "' must have 1 to 3 arguments");
  return Term(std::make_shared<const Node>(Node{Kind::App, std::move(fn), std::move(args)}));
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : args()) n += a.size();
  return n;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args()) d = std::max(d, a.depth());
  return d + 1;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

bool operator<(const Term& a, const Term& b) { return print(a) < print(b); }

Term numeral(std::uint64_t k) {
  Term t = Term::zero();
  for (std::uint64_t i = 0; i < k; ++i) t = Term::succ(t);
  return t;
}

std::optional<std::uint64_t> numeral_value(const Term& t) {
  std::uint64_t k = 0;
  const Term* cur = &t;
  while (cur->is_succ()) {
    ++k;
    cur = &cur->arg(0);
  }
  if (!cur->is_zero()) return std::nullopt;
  return k;
}

Term hole() {
  static const Term h = Term::var("_");
  return h;
}
bool is_hole(const Term& t) { return t.is_var() && t.name() == "_"; }

Term fill_hole(const Term& c, const Term& filler) {
  switch (c.kind()) {
    case Term::Kind::Zero: return c;
    case Term::Kind::Var: return is_hole(c) ? filler : c;
    case Term::Kind::Succ: return Term::succ(fill_hole(c.arg(0), filler));
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const auto& a : c.args()) args.push_back(fill_hole(a, filler));
      return Term::app(c.name(), std::move(args));
    }
  }
  return c;
}

// ------------------------------------------------------------- formulas

namespace {
template <class Node>
std::shared_ptr<const Node> mk(Node n) {
  return std::make_shared<const Node>(std::move(n));
}
}  // namespace

Formula Formula::eq(Term a, Term b) { return Formula(mk(Node{Kind::Eq, std::move(a), std::move(b), {}, {}, Sort::N})); }
Formula Formula::neg(Formula f) { return Formula(mk(Node{Kind::Not, {}, {}, {std::move(f)}, {}, Sort::N})); }
Formula Formula::conj(Formula a, Formula b) {
  return Formula(mk(Node{Kind::And, {}, {}, {std::move(a), std::move(b)}, {}, Sort::N}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(mk(Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}, {}, Sort::N}));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(mk(Node{Kind::Implies, {}, {}, {std::move(a), std::move(b)}, {}, Sort::N}));
}
Formula Formula::iff(Formula a, Formula b) {
  return Formula(mk(Node{Kind::Iff, {}, {}, {std::move(a), std::move(b)}, {}, Sort::N}));
}
Formula Formula::quantifier(Kind k, std::string var, Sort s, Formula body) {
  return Formula(mk(Node{k, {}, {}, {std::move(body)}, std::move(var), s}));
}
Formula Formula::forall(std::string var, Sort s, Formula body) {
  return quantifier(Kind::Forall, std::move(var), s, std::move(body));
}
Formula Formula::exists(std::string var, Sort s, Formula body) {
  return quantifier(Kind::Exists, std::move(var), s, std::move(body));
}
Formula Formula::exists_unique(std::string var, Sort s, Formula body) {
  return quantifier(Kind::ExistsUnique, std::move(var), s, std::move(body));
}

bool Formula::is_quantifier() const {
  return kind() == Kind::Forall || kind() == Kind::Exists || kind() == Kind::ExistsUnique;
}
bool Formula::is_binary() const {
  return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies || kind() == Kind::Iff;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& s : node_->subs) d = std::max(d, s.depth());
  return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Eq) return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  if (a.is_quantifier() && (a.var() != b.var() || a.sort() != b.sort())) return false;
  const auto& sa = a.node_->subs;
  const auto& sb = b.node_->subs;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!(sa[i] == sb[i])) return false;
  return true;
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("conj_all: empty list");
  Formula out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::conj(fs[i], out);
  return out;
}

Formula implies_chain(const std::vector<Formula>& hyps, const Formula& concl) {
  Formula out = concl;
  for (std::size_t i = hyps.size(); i-- > 0;) out = Formula::implies(hyps[i], out);
  return out;
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Ident, Upper, Zero, LParen, RParen, Comma, Eq, Tilde, Amp, Bar, Arrow, DArrow, Colon, Dot, All, Ex, ExU, Hole, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      if (word == "all") {
        out.push_back({Tok::All, word, start});
      } else if (word == "ex") {
        if (i < s.size() && s[i] == '!') {
          ++i;
          out.push_back({Tok::ExU, "ex!", start});
        } else {
          out.push_back({Tok::Ex, word, start});
        }
      } else {
        out.push_back({Tok::Ident, word, start});
      }
      continue;
    }
    if (c >= 'A' && c <= 'Z') {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Upper, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto two = s.substr(i, 2);
    auto three = s.substr(i, 3);
    if (three == "<->") {
      out.push_back({Tok::DArrow, "<->", start});
      i += 3;
      continue;
    }
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '0': k = Tok::Zero; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Eq; break;
      case '~': k = Tok::Tilde; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Bar; break;
      case ':': k = Tok::Colon; break;
      case '.': k = Tok::Dot; break;
      case '_': k = Tok::Hole; break;
      default: throw SyntaxError(start, "a token", "'" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Context& ctx, bool holes) : toks_(lex(text)), ctx_(ctx), holes_(holes) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  int holes_seen() const { return holes_seen_; }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw SyntaxError(peek().pos, what, describe(peek()));
    return next();
  }

  std::optional<Sort> resolve(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return it->second;
    return ctx_.lookup(name);
  }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: next(); return Term::zero();
      case Tok::Hole:
        if (!holes_) throw SyntaxError(t.pos, "a term", "'_'");
        next();
        ++holes_seen_;
        return hole();
      case Tok::Upper: {
        if (t.text != "S") throw SyntaxError(t.pos, "a term", describe(t));
        next();
        expect(Tok::LParen, "'('");
        Term a = term();
        expect(Tok::RParen, "')'");
        return Term::succ(a);
      }
      case Tok::Ident: {
        Token id = next();
        auto sort = resolve(id.text);
        if (!sort) throw UnboundVariable(id.text);
        if (accept(Tok::LParen)) {
          std::vector<Term> args{term()};
          while (accept(Tok::Comma)) args.push_back(term());
          expect(Tok::RParen, "')' or ','");
          if (*sort == Sort::N) throw SortError("'" + id.text + "' has sort N but is applied to arguments");
          if (arity(*sort) != static_cast<int>(args.size()))
            throw SortError("'" + id.text + "' has sort " + to_string(*sort) + " but is applied to " +
                            std::to_string(args.size()) + " argument(s)");
          return Term::app(id.text, std::move(args));
        }
        if (*sort != Sort::N) throw SortError("'" + id.text + "' has sort " + to_string(*sort) + " but is used as a number");
        return Term::var(id.text);
      }
      default: throw SyntaxError(t.pos, "a term", describe(t));
    }
  }

  Formula formula() {
    Formula f = implication();
    while (accept(Tok::DArrow)) f = Formula::iff(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(f, implication());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Bar)) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde: next(); return Formula::neg(unary());
      case Tok::LParen: {
        next();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::All:
      case Tok::Ex:
      case Tok::ExU: {
        Token q = next();
        Token v = expect(Tok::Ident, "a variable name");
        expect(Tok::Colon, "':'");
        Token s = expect(Tok::Upper, "a sort");
        Sort sort;
        try {
          sort = parse_sort(s.text);
        } catch (const SortError&) {
          throw SyntaxError(s.pos, "a sort (N, F1, F2, F3)", describe(s));
        }
        expect(Tok::Dot, "'.'");
        scope_.emplace_back(v.text, sort);
        Formula body = formula();
        scope_.pop_back();
        auto kind = q.kind == Tok::All ? Formula::Kind::Forall
                    : q.kind == Tok::Ex ? Formula::Kind::Exists
                                        : Formula::Kind::ExistsUnique;
        return Formula::quantifier(kind, v.text, sort, body);
      }
      default: {
        Term a = term();
        expect(Tok::Eq, "'='");
        Term b = term();
        return Formula::eq(a, b);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Context& ctx_;
  bool holes_;
  int holes_seen_ = 0;
  std::vector<std::pair<std::string, Sort>> scope_;
};

}  // namespace

Term parse_term(std::string_view text, const Context& ctx) { return Parser(text, ctx, false).whole_term(); }

Formula parse_formula(std::string_view text, const Context& ctx) { return Parser(text, ctx, false).whole_formula(); }

Term parse_context_term(std::string_view text, const Context& ctx) {
  Parser p(text, ctx, true);
  Term t = p.whole_term();
  if (p.holes_seen() != 1)
    throw SyntaxError(0, "exactly one hole '_'", std::to_string(p.holes_seen()) + " holes");
  return t;
}

// -------------------------------------------------------------- printer

namespace {

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::Var: out += t.name(); return;
    case Term::Kind::Succ:
      out += "S(";
      print_term(t.arg(0), out);
      out += ')';
      return;
    case Term::Kind::App:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ',';
        print_term(t.args()[i], out);
      }
      out += ')';
      return;
  }
}

int prec(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    default: return 5;
  }
}

const char* op_text(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return " <-> ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::And: return " & ";
    default: return "?";
  }
}

// `trailing`: more text follows in the enclosing context, so a quantifier
// printed here would swallow it and must be parenthesized.
void print_formula(const Formula& f, std::string& out, bool trailing) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
      print_term(f.lhs(), out);
      out += '=';
      print_term(f.rhs(), out);
      return;
    case K::Not:
      out += '~';
      if (f.sub().kind() == K::Not) {
        print_formula(f.sub(), out, trailing);
      } else {
        out += '(';
        print_formula(f.sub(), out, false);
        out += ')';
      }
      return;
    case K::Forall:
    case K::Exists:
    case K::ExistsUnique:
      if (trailing) out += '(';
      out += f.kind() == K::Forall ? "all " : f.kind() == K::Exists ? "ex " : "ex! ";
      out += f.var();
      out += ':';
      out += to_string(f.sort());
      out += ". ";
      print_formula(f.body(), out, false);
      if (trailing) out += ')';
      return;
    default: {
      const int p = prec(f);
      const bool right_assoc = f.kind() == K::Implies;
      const bool left_assoc = f.kind() == K::And || f.kind() == K::Or;
      const int pl = prec(f.left());
      const bool paren_l = pl < p || (pl == p && !left_assoc);
      if (paren_l) out += '(';
      print_formula(f.left(), out, !paren_l);
      if (paren_l) out += ')';
      out += op_text(f.kind());
      const int pr = prec(f.right());
      const bool paren_r = pr < p || (pr == p && !right_assoc);
      if (paren_r) out += '(';
      print_formula(f.right(), out, paren_r ? false : trailing);
      if (paren_r) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string print(const Formula& f) {
  std::string out;
  print_formula(f, out, false);
  return out;
}

// --------------------------------------------------------- free variables

namespace {

void term_vars(const Term& t, const std::set<std::string>& bound,
               const std::function<void(const std::string&, Sort)>& emit) {
  switch (t.kind()) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var:
      if (!bound.count(t.name())) emit(t.name(), Sort::N);
      return;
    case Term::Kind::Succ: term_vars(t.arg(0), bound, emit); return;
    case Term::Kind::App:
      if (!bound.count(t.name())) emit(t.name(), function_sort(static_cast<int>(t.args().size())));
      for (const auto& a : t.args()) term_vars(a, bound, emit);
      return;
  }
}

void formula_vars(const Formula& f, std::set<std::string>& bound,
                  const std::function<void(const std::string&, Sort)>& emit) {
  if (f.kind() == Formula::Kind::Eq) {
    term_vars(f.lhs(), bound, emit);
    term_vars(f.rhs(), bound, emit);
    return;
  }
  if (f.is_quantifier()) {
    const bool was = bound.count(f.var()) > 0;
    bound.insert(f.var());
    formula_vars(f.body(), bound, emit);
    if (!was) bound.erase(f.var());
    return;
  }
  formula_vars(f.sub(0), bound, emit);
  if (f.is_binary()) formula_vars(f.sub(1), bound, emit);
}

void names_of(const Term& t, std::set<std::string>& out) {
  if (t.is_var() || t.is_app()) out.insert(t.name());
  for (const auto& a : t.args()) names_of(a, out);
}

void names_of(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Eq) {
    names_of(f.lhs(), out);
    names_of(f.rhs(), out);
    return;
  }
  if (f.is_quantifier()) out.insert(f.var());
  names_of(f.sub(0), out);
  if (f.is_binary()) names_of(f.sub(1), out);
}

}  // namespace

FreeVars free_vars(const Term& t) {
  FreeVars out;
  term_vars(t, {}, [&](const std::string& n, Sort s) { out.emplace(n, s); });
  return out;
}

FreeVars free_vars(const Formula& f) {
  FreeVars out;
  std::set<std::string> bound;
  formula_vars(f, bound, [&](const std::string& n, Sort s) { out.emplace(n, s); });
  return out;
}

std::vector<std::pair<std::string, Sort>> free_vars_ordered(const Formula& f) {
  std::vector<std::pair<std::string, Sort>> out;
  std::set<std::string> seen, bound;
  formula_vars(f, bound, [&](const std::string& n, Sort s) {
    if (seen.insert(n).second) out.emplace_back(n, s);
  });
  return out;
}

std::set<std::string> free_names(const Formula& f) {
  std::set<std::string> out;
  for (const auto& [n, s] : free_vars(f)) out.insert(n);
  return out;
}

std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  names_of(f, out);
  return out;
}

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  names_of(t, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  for (std::uint64_t k = 1;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}

// ----------------------------------------------------------- substitution

namespace {

bool occurs_as_function(const Term& t, const std::string& name) {
  if (t.is_app() && t.name() == name) return true;
  for (const auto& a : t.args())
    if (occurs_as_function(a, name)) return true;
  return false;
}

bool occurs_as_function(const Formula& f, const std::string& name) {
  if (f.kind() == Formula::Kind::Eq) return occurs_as_function(f.lhs(), name) || occurs_as_function(f.rhs(), name);
  if (f.is_quantifier() && f.var() == name) return false;
  if (occurs_as_function(f.sub(0), name)) return true;
  return f.is_binary() && occurs_as_function(f.sub(1), name);
}

bool free_in(const Formula& f, const std::string& name) {
  for (const auto& [n, s] : free_vars(f))
    if (n == name) return true;
  return false;
}

Formula rebuild(const Formula& f, std::vector<Formula> subs) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: return Formula::neg(subs[0]);
    case K::And: return Formula::conj(subs[0], subs[1]);
    case K::Or: return Formula::disj(subs[0], subs[1]);
    case K::Implies: return Formula::implies(subs[0], subs[1]);
    case K::Iff: return Formula::iff(subs[0], subs[1]);
    default: return Formula::quantifier(f.kind(), f.var(), f.sort(), subs[0]);
  }
}

Formula rename_bound(const Formula& body, const std::string& from, const std::string& to, Sort s) {
  if (s == Sort::N) return substitute(body, from, Term::var(to));
  return rename_function(body, from, to);
}

}  // namespace

Term substitute(const Term& t, const std::string& var, const Term& repl) {
  switch (t.kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: return t.name() == var ? repl : t;
    case Term::Kind::Succ: return Term::succ(substitute(t.arg(0), var, repl));
    case Term::Kind::App: {
      if (t.name() == var) throw SortError("cannot substitute a term for function variable '" + var + "'");
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(substitute(a, var, repl));
      return Term::app(t.name(), std::move(args));
    }
  }
  return t;
}

namespace {

Formula subst(const Formula& f, const std::string& var, const Term& repl) {
  if (f.kind() == Formula::Kind::Eq) return Formula::eq(substitute(f.lhs(), var, repl), substitute(f.rhs(), var, repl));
  if (f.is_quantifier()) {
    if (f.var() == var || !free_in(f.body(), var)) return f;
    const auto repl_names = all_names(repl);
    if (repl_names.count(f.var())) {
      std::set<std::string> used = all_names(f.body());
      used.insert(repl_names.begin(), repl_names.end());
      used.insert(var);
      const std::string y = fresh_name(f.var(), used);
      Formula body = rename_bound(f.body(), f.var(), y, f.sort());
      return Formula::quantifier(f.kind(), y, f.sort(), subst(body, var, repl));
    }
    return Formula::quantifier(f.kind(), f.var(), f.sort(), subst(f.body(), var, repl));
  }
  std::vector<Formula> subs{subst(f.sub(0), var, repl)};
  if (f.is_binary()) subs.push_back(subst(f.sub(1), var, repl));
  return rebuild(f, std::move(subs));
}

}  // namespace

Formula substitute(const Formula& f, const std::string& var, const Term& repl) {
  if (occurs_as_function(f, var)) throw SortError("cannot substitute a term for function variable '" + var + "'");
  return subst(f, var, repl);
}

Term rename_function(const Term& t, const std::string& from, const std::string& to) {
  switch (t.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::Var: return t;
    case Term::Kind::Succ: return Term::succ(rename_function(t.arg(0), from, to));
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(rename_function(a, from, to));
      return Term::app(t.name() == from ? to : t.name(), std::move(args));
    }
  }
  return t;
}

Formula rename_function(const Formula& f, const std::string& from, const std::string& to) {
  if (f.kind() == Formula::Kind::Eq)
    return Formula::eq(rename_function(f.lhs(), from, to), rename_function(f.rhs(), from, to));
  if (f.is_quantifier()) {
    if (f.var() == from || !free_in(f.body(), from)) return f;
    if (f.var() == to) {
      std::set<std::string> used = all_names(f.body());
      used.insert(from);
      used.insert(to);
      const std::string y = fresh_name(f.var(), used);
      Formula body = rename_bound(f.body(), f.var(), y, f.sort());
      return Formula::quantifier(f.kind(), y, f.sort(), rename_function(body, from, to));
    }
    return Formula::quantifier(f.kind(), f.var(), f.sort(), rename_function(f.body(), from, to));
  }
  std::vector<Formula> subs{rename_function(f.sub(0), from, to)};
  if (f.is_binary()) subs.push_back(rename_function(f.sub(1), from, to));
  return rebuild(f, std::move(subs));
}

Term replace_subterm(const Term& t, const Term& from, const Term& to) {
  if (t == from) return to;
  switch (t.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::Var: return t;
    case Term::Kind::Succ: return Term::succ(replace_subterm(t.arg(0), from, to));
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(replace_subterm(a, from, to));
      return Term::app(t.name(), std::move(args));
    }
  }
  return t;
}

// ---------------------------------------------------------------- desugar

bool has_exists_unique(const Formula& f) {
  if (f.kind() == Formula::Kind::Eq) return false;
  if (f.kind() == Formula::Kind::ExistsUnique) return true;
  if (has_exists_unique(f.sub(0))) return true;
  return f.is_binary() && has_exists_unique(f.sub(1));
}

bool is_open(const Formula& f) {
  if (f.kind() == Formula::Kind::Eq) return true;
  if (f.is_quantifier()) return false;
  if (!is_open(f.sub(0))) return false;
  return !f.is_binary() || is_open(f.sub(1));
}

Formula desugar(const Formula& f) {
  if (f.kind() == Formula::Kind::Eq) return f;
  if (f.is_quantifier()) {
    Formula body = desugar(f.body());
    if (f.kind() != Formula::Kind::ExistsUnique) return Formula::quantifier(f.kind(), f.var(), f.sort(), body);
    const std::string& x = f.var();
    std::set<std::string> used = all_names(body);
    used.insert(x);
    const std::string y = fresh_name(x, used);
    used.insert(y);
    Formula same = Formula::eq(Term::var(y), Term::var(x));
    Formula body_y = rename_bound(body, x, y, f.sort());
    if (f.sort() != Sort::N) {
      std::vector<std::string> args;
      std::vector<Term> arg_terms;
      for (int i = 0; i < arity(f.sort()); ++i) {
        args.push_back(fresh_name("a", used));
        used.insert(args.back());
        arg_terms.push_back(Term::var(args.back()));
      }
      same = Formula::eq(Term::app(y, arg_terms), Term::app(x, arg_terms));
      for (std::size_t i = args.size(); i-- > 0;) same = Formula::forall(args[i], Sort::N, same);
    }
    Formula unique = Formula::forall(y, f.sort(), Formula::implies(body_y, same));
    return Formula::exists(x, f.sort(), Formula::conj(body, unique));
  }
  std::vector<Formula> subs{desugar(f.sub(0))};
  if (f.is_binary()) subs.push_back(desugar(f.sub(1)));
  return rebuild(f, std::move(subs));
}

Formula universal_closure(const Formula& f) {
  auto vars = free_vars_ordered(f);
  Formula out = f;
  for (std::size_t i = vars.size(); i-- > 0;) out = Formula::forall(vars[i].first, vars[i].second, out);
  return out;
}

// ------------------------------------------------------------------ alpha

namespace {

struct Binders {
  std::vector<std::string> names;
  int index_of(const std::string& n) const {
    for (std::size_t i = names.size(); i-- > 0;)
      if (names[i] == n) return static_cast<int>(i);
    return -1;
  }
};

bool alpha_term(const Term& a, const Term& b, const Binders& ba, const Binders& bb) {
  if (a.kind() != b.kind() || a.args().size() != b.args().size()) return false;
  if (a.is_var() || a.is_app()) {
    const int ia = ba.index_of(a.name());
    const int ib = bb.index_of(b.name());
    if (ia != ib) return false;
    if (ia < 0 && a.name() != b.name()) return false;
  }
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], ba, bb)) return false;
  return true;
}

bool alpha_formula(const Formula& a, const Formula& b, Binders& ba, Binders& bb) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Eq) return alpha_term(a.lhs(), b.lhs(), ba, bb) && alpha_term(a.rhs(), b.rhs(), ba, bb);
  if (a.is_quantifier()) {
    if (a.sort() != b.sort()) return false;
    ba.names.push_back(a.var());
    bb.names.push_back(b.var());
    const bool ok = alpha_formula(a.body(), b.body(), ba, bb);
    ba.names.pop_back();
    bb.names.pop_back();
    return ok;
  }
  if (!alpha_formula(a.sub(0), b.sub(0), ba, bb)) return false;
  return !a.is_binary() || alpha_formula(a.sub(1), b.sub(1), ba, bb);
}

void key_term(const Term& t, const Binders& b, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::Succ:
      out += "S(";
      key_term(t.arg(0), b, out);
      out += ')';
      return;
    case Term::Kind::Var:
    case Term::Kind::App: {
      const int i = b.index_of(t.name());
      if (i >= 0) {
        out += '#';
        out += std::to_string(i);
      } else {
        out += t.name();
      }
      if (t.is_app()) {
        out += '(';
        for (std::size_t k = 0; k < t.args().size(); ++k) {
          if (k) out += ',';
          key_term(t.args()[k], b, out);
        }
        out += ')';
      }
      return;
    }
  }
}

void key_formula(const Formula& f, Binders& b, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
      out += "E[";
      key_term(f.lhs(), b, out);
      out += '=';
      key_term(f.rhs(), b, out);
      out += ']';
      return;
    case K::Not:
      out += "N[";
      key_formula(f.sub(), b, out);
      out += ']';
      return;
    case K::Forall:
    case K::Exists:
    case K::ExistsUnique:
      out += f.kind() == K::Forall ? "A" : f.kind() == K::Exists ? "X" : "U";
      out += to_string(f.sort());
      out += '[';
      b.names.push_back(f.var());
      key_formula(f.body(), b, out);
      b.names.pop_back();
      out += ']';
      return;
    default:
      out += f.kind() == K::And ? "C[" : f.kind() == K::Or ? "D[" : f.kind() == K::Implies ? "I[" : "Q[";
      key_formula(f.left(), b, out);
      out += ';';
      key_formula(f.right(), b, out);
      out += ']';
      return;
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  Binders ba, bb;
  return alpha_formula(a, b, ba, bb);
}

std::string alpha_key(const Formula& f) {
  std::string out;
  Binders b;
  key_formula(f, b, out);
  return out;
}

}  // namespace etf::syntax
