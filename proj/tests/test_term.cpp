#include <doctest.h>

#include "dm4/term.hpp"

using namespace dm4;

TEST_CASE("parser accepts the grammar") {
  Term t = parse_term("meet(x1, conf(x1))");
  CHECK(t.sym == "meet");
  CHECK(t.kids.size() == 2);
  CHECK(t.kids[0].is_var());
  CHECK(t.kids[1].sym == "conf");
  CHECK(t.str() == "meet(x1, conf(x1))");
  CHECK(parse_term("x2").var == 2);
  CHECK(parse_term("  join ( x1 , x2 ) ").str() == "join(x1, x2)");
  CHECK_THROWS_AS(parse_term("meet(x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("Meet(x1,x2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("x0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("meet(x1,x2) trailing"), std::invalid_argument);
}

TEST_CASE("term_to_table") {
  SymbolEnv env = catalog_env();
  CHECK(term_to_table(parse_term("meet(x1, conf(x1))"), env, 1) == catalog_lookup("box"));
  CHECK(term_to_table(parse_term("x2"), env, 2) == FnTable::projection(2, 2));
  CHECK(term_to_table(parse_term("neg(neg(x1))"), env, 1) == FnTable::projection(1, 1));
  CHECK(term_to_table(parse_term("x1"), env, 3) == FnTable::projection(3, 1));
  CHECK_THROWS_AS(term_to_table(parse_term("zoop(x1)"), env, 1), std::invalid_argument);
  CHECK_THROWS_AS(term_to_table(parse_term("meet(x1)"), env, 1), std::invalid_argument);
  CHECK_THROWS_AS(term_to_table(parse_term("x3"), env, 2), std::invalid_argument);
}

TEST_CASE("resolve_function handles bare names and terms") {
  SymbolEnv env = catalog_env();
  CHECK(resolve_function("box", env) == catalog_lookup("box"));
  CHECK(resolve_function("join(join(x1, neg(x1)), const_n(x1))", env) == catalog_lookup("t_n_to_n"));
  CHECK(resolve_function("meet(x1, x2)", env).arity() == 2);
}
