#pragma once

// Term language over variables and named function symbols, with a small
// recursive-descent parser.
//
//   term := var | name "(" term {"," term} ")" | name
//   var  := "x" digits          names are [a-z][a-z0-9_]*
//
// A bare name denotes the named table itself and is only accepted where a
// whole function is expected; inside a larger term every symbol must be
// applied to exactly arity-many subterms.

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dm4/catalog.hpp"
#include "dm4/core.hpp"

namespace dm4 {

struct Term {
  int var = 0;                // >= 1 for variables
  std::string sym;            // symbol name for applications
  std::vector<Term> kids;

  static Term variable(int i) {
    Term t;
    t.var = i;
    return t;
  }
  static Term apply(std::string name, std::vector<Term> kids = {}) {
    Term t;
    t.sym = std::move(name);
    t.kids = std::move(kids);
    return t;
  }
  bool is_var() const { return var >= 1; }

  int max_var() const {
    int m = var;
    for (const Term& k : kids) m = std::max(m, k.max_var());
    return m;
  }

  // number of symbol applications; the derivation-size measure
  std::size_t applications() const {
    if (is_var()) return 0;
    std::size_t s = 1;
    for (const Term& k : kids) s += k.applications();
    return s;
  }

  std::string str() const {
    if (is_var()) return "x" + std::to_string(var);
    std::string s = sym;
    if (!kids.empty()) {
      s += '(';
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) s += ", ";
        s += kids[i].str();
      }
      s += ')';
    }
    return s;
  }
};

using SymbolEnv = std::map<std::string, FnTable>;

inline SymbolEnv catalog_env() { return catalog(); }

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view src) : s_(src) {}

  Term parse() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  Term parse_term() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (!std::islower(static_cast<unsigned char>(s_[pos_]))) fail("expected a name or variable");
    std::string name = parse_name();
    if (name.size() >= 2 && name[0] == 'x' && all_digits(name.substr(1))) {
      int v = std::stoi(name.substr(1));
      if (v < 1) fail("variable index must be >= 1");
      return Term::variable(v);
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      std::vector<Term> kids;
      kids.push_back(parse_term());
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        kids.push_back(parse_term());
        skip_ws();
      }
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return Term::apply(std::move(name), std::move(kids));
    }
    return Term::apply(std::move(name));
  }

  static bool all_digits(std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::islower(static_cast<unsigned char>(s_[pos_])) ||
            std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("term parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view src) { return detail::TermParser(src).parse(); }

// Evaluates a term to the table of the declared arity. Unused variables are
// permitted; a bare (unapplied) symbol of arity >= 1 is an arity error.
inline FnTable term_to_table(const Term& t, const SymbolEnv& env, int arity) {
  if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("arity out of range 1..6");
  if (t.is_var()) {
    if (t.var > arity)
      throw std::invalid_argument("variable x" + std::to_string(t.var) + " out of range 1.." +
                                  std::to_string(arity));
    return FnTable::projection(arity, t.var);
  }
  auto it = env.find(t.sym);
  if (it == env.end()) throw std::invalid_argument("unresolved symbol: " + t.sym);
  const FnTable& g = it->second;
  if (static_cast<int>(t.kids.size()) != g.arity())
    throw std::invalid_argument("symbol " + t.sym + " has arity " + std::to_string(g.arity()) +
                                ", applied to " + std::to_string(t.kids.size()) + " arguments");
  std::vector<FnTable> inner;
  inner.reserve(t.kids.size());
  for (const Term& k : t.kids) inner.push_back(term_to_table(k, env, arity));
  return compose(g, std::span<const FnTable>(inner));
}

// "name or term or @file" convenience used by the CLI and tests: a bare
// catalog/env name yields the table itself, otherwise the term is parsed and
// evaluated at its max-variable arity (or the given one).
inline FnTable resolve_function(std::string_view text, const SymbolEnv& env, int arity = 0) {
  Term t = parse_term(text);
  if (!t.is_var() && t.kids.empty()) {
    auto it = env.find(t.sym);
    if (it == env.end()) throw std::invalid_argument("unresolved symbol: " + t.sym);
    return it->second;
  }
  int n = arity > 0 ? arity : std::max(1, t.max_var());
  return term_to_table(t, env, n);
}

}  // namespace dm4
