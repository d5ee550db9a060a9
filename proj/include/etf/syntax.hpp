#pragma once

// Abstract syntax of the four-sorted language: sorts, contexts, terms and
// formulas, with parsing, printing and capture-avoiding substitution.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace etf::syntax {

enum class Sort { N, F1, F2, F3 };

int arity(Sort s);  // 0 for N
Sort function_sort(int arity);
std::string to_string(Sort s);
Sort parse_sort(std::string_view s);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t pos, const std::string& expected, const std::string& found);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class SortError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Ordered declarations; insertion order is kept for printing.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<std::string, Sort>> decls);

  void declare(const std::string& name, Sort s);  // SortError on a conflicting redeclaration
  std::optional<Sort> lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  const std::vector<std::pair<std::string, Sort>>& declarations() const { return decls_; }

  static Context parse_file_text(std::string_view text);  // lines "decl x : N"

 private:
  std::vector<std::pair<std::string, Sort>> decls_;
  std::map<std::string, Sort> index_;
};

class Term {
 public:
  enum class Kind { Zero, Var, Succ, App };

  Term();  // zero
  static Term zero();
  static Term var(std::string name);
  static Term succ(Term t);
  static Term app(std::string fn, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_succ() const { return kind() == Kind::Succ; }
  bool is_app() const { return kind() == Kind::App; }
  const std::string& name() const { return node_->name; }  // Var name or App function name
  const std::vector<Term>& args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }
  std::size_t size() const;  // node count
  std::size_t depth() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind { Eq, Not, And, Or, Implies, Iff, Forall, Exists, ExistsUnique };

  static Formula eq(Term a, Term b);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula forall(std::string var, Sort s, Formula body);
  static Formula exists(std::string var, Sort s, Formula body);
  static Formula exists_unique(std::string var, Sort s, Formula body);
  static Formula quantifier(Kind k, std::string var, Sort s, Formula body);

  Kind kind() const { return node_->kind; }
  bool is_quantifier() const;
  bool is_binary() const;
  const Term& lhs() const { return node_->lhs; }
  const Term& rhs() const { return node_->rhs; }
  const Formula& sub(std::size_t i = 0) const { return node_->subs.at(i); }
  const Formula& left() const { return sub(0); }
  const Formula& right() const { return sub(1); }
  const Formula& body() const { return sub(0); }
  const std::string& var() const { return node_->var; }
  Sort sort() const { return node_->sort; }
  std::size_t depth() const;

  // Structural equality (bound names significant). See alpha_equal.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    Term lhs, rhs;
    std::vector<Formula> subs;
    std::string var;
    Sort sort = Sort::N;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using FreeVars = std::set<std::pair<std::string, Sort>>;

Term numeral(std::uint64_t k);
std::optional<std::uint64_t> numeral_value(const Term& t);  // k when t is S^k(0)

Term parse_term(std::string_view text, const Context& ctx);
Formula parse_formula(std::string_view text, const Context& ctx);
// A term with exactly one hole written "_" (congruence contexts).
Term parse_context_term(std::string_view text, const Context& ctx);
Term hole();
bool is_hole(const Term& t);
Term fill_hole(const Term& context, const Term& filler);

std::string print(const Term& t);
std::string print(const Formula& f);

FreeVars free_vars(const Term& t);
FreeVars free_vars(const Formula& f);
// Free variables ordered by first occurrence (left to right), all sorts.
std::vector<std::pair<std::string, Sort>> free_vars_ordered(const Formula& f);
std::set<std::string> free_names(const Formula& f);
std::set<std::string> all_names(const Formula& f);  // free, bound and function names
std::set<std::string> all_names(const Term& t);

// Smallest numeric suffix k >= 1 such that base+k is not in `used`.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

Term substitute(const Term& t, const std::string& var, const Term& replacement);
// Throws SortError when `var` is used as a function variable in f.
Formula substitute(const Formula& f, const std::string& var, const Term& replacement);
// Renames free occurrences of a function variable, avoiding capture.
Formula rename_function(const Formula& f, const std::string& from, const std::string& to);
Term rename_function(const Term& t, const std::string& from, const std::string& to);
// Replaces every occurrence of the subterm `from` by `to` (terms only).
Term replace_subterm(const Term& t, const Term& from, const Term& to);

Formula desugar(const Formula& f);
bool has_exists_unique(const Formula& f);
bool is_open(const Formula& f);

// Universal closure over free variables in order of first occurrence.
Formula universal_closure(const Formula& f);

// Bound-variable-insensitive comparison.
bool alpha_equal(const Formula& a, const Formula& b);
std::string alpha_key(const Formula& f);

// Helpers for building formulas.
Formula conj_all(const std::vector<Formula>& fs);  // right-nested; requires non-empty
Formula implies_chain(const std::vector<Formula>& hyps, const Formula& concl);

}  // namespace etf::syntax
