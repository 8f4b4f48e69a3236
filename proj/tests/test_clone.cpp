#include <doctest.h>

#include "dm4/clone.hpp"
#include "dm4/invariants.hpp"

using namespace dm4;

TEST_CASE("closure sizes match the worked examples") {
  CloneSpec neg_only{"neg", Base::none, {}};
  neg_only.add("neg", catalog_lookup("neg"));
  ClosureResult a = closure_fixed_arity(neg_only, 1);
  CHECK(a.count() == 2);
  CHECK_FALSE(a.exhausted);

  // unary harmonious functions: f(t),f(f) in {t,f}, f(n) free, f(b) forced
  ClosureResult b = closure_fixed_arity(CloneSpec::of("h", Base::dlat, {"neg", "conf"}), 1);
  CHECK(b.count() == 16);

  ClosureResult c = closure_fixed_arity(CloneSpec::of("dlat", Base::dlat), 2);
  CHECK(c.count() == 6);

  ClosureResult d = closure_fixed_arity(CloneSpec::of("dma", Base::dma), 2);
  CHECK(d.count() == 168);
}

TEST_CASE("derivations re-evaluate to their tables") {
  CloneSpec s = CloneSpec::of("dma", Base::dma);
  ClosureResult r = closure_fixed_arity(s, 2);
  SymbolEnv env = s.env();
  for (std::size_t i = 0; i < r.count(); i += 7)
    CHECK(term_to_table(r.term_for(i), env, 2) == r.table(i));
}

TEST_CASE("closure is monotone and idempotent at arity 1") {
  CloneSpec small = CloneSpec::of("dlat", Base::dlat);
  CloneSpec big = CloneSpec::of("dlat+neg", Base::dlat, {"neg"});
  ClosureResult rs = closure_fixed_arity(small, 1), rb = closure_fixed_arity(big, 1);
  for (std::size_t i = 0; i < rs.count(); ++i) CHECK(rb.find(rs.table(i)).has_value());
  // closing the closure adds nothing: feed the closure's tables back as generators
  CloneSpec again{"again", Base::none, {}};
  int k = 0;
  for (std::size_t i = 0; i < rs.count(); ++i) again.add("g" + std::to_string(k++), rs.table(i));
  CHECK(closure_fixed_arity(again, 1).count() == rs.count());
}

TEST_CASE("find_term returns minimal witnesses") {
  CloneSpec s{"mc", Base::none, {}};
  s.add("meet", catalog_lookup("meet"));
  s.add("conf", catalog_lookup("conf"));
  auto r = find_term(s, catalog_lookup("box"));
  REQUIRE(r.term.has_value());
  CHECK(r.term->applications() == 2);
  CHECK(term_to_table(*r.term, s.env(), 1) == catalog_lookup("box"));

  CloneSpec s2{"jnn", Base::none, {}};
  s2.add("join", catalog_lookup("join"));
  s2.add("neg", catalog_lookup("neg"));
  s2.add("const_n", catalog_lookup("const_n"));
  auto r2 = find_term(s2, catalog_lookup("t_n_to_n"));
  REQUIRE(r2.term.has_value());
  CHECK(term_to_table(*r2.term, s2.env(), 1) == catalog_lookup("t_n_to_n"));
  // the known witness t_n_to_n x = x v -x v n has four applications
  CHECK(r2.term->applications() == 4);

  // absent: box is not persistent, so it is not a DMA term function
  auto r3 = find_term(CloneSpec::of("dma", Base::dma), catalog_lookup("box"), {100000, 100'000'000});
  CHECK_FALSE(r3.term.has_value());
  CHECK_FALSE(member(catalog_lookup("box"), CloneSpec::of("dma", Base::dma)));
}

TEST_CASE("closure caps report exhaustion") {
  ClosureOptions opt;
  opt.cap = 10;
  ClosureResult r = closure_fixed_arity(CloneSpec::of("dma", Base::dma), 2, opt);
  CHECK(r.exhausted);
  CHECK(r.count() <= 10 + 4);  // projections plus a truncated layer
}
