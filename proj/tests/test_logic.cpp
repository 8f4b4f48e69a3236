#include <doctest.h>

#include "dm4/logic.hpp"

using namespace dm4;

static const FnTable& T(const char* n) { return catalog_lookup(n); }

TEST_CASE("entails") {
  Sequent mp{2, {FnTable::projection(2, 1), T("to_tmax")}, {FnTable::projection(2, 2)}};
  CHECK(entails(mp).holds);
  Sequent weak{2, {FnTable::projection(2, 1)}, {T("join")}};
  CHECK(entails(weak).holds);
  Sequent bad{2,
              {FnTable::from_fn(2, [](std::span<const Elem> a) { return meet(a[0], neg(a[0])); })},
              {FnTable::projection(2, 2)}};
  auto r = entails(bad);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counter.has_value());
  CHECK((*r.counter)[0] == Elem::b);
  CHECK((*r.counter)[1] == Elem::f);
}

TEST_CASE("implication_check") {
  CHECK(implication_check(T("to_godel"), ImplicationKind::protoimplication));
  CHECK(implication_check(T("eq_tf"), ImplicationKind::equivalence));
  CHECK_FALSE(implication_check(T("meet"), ImplicationKind::protoimplication));
  CHECK_FALSE(implication_check(T("to_tmax"), ImplicationKind::equivalence));
  CHECK_THROWS_AS(implication_check(T("box"), ImplicationKind::protoimplication),
                  std::invalid_argument);
}

TEST_CASE("interval") {
  CHECK(interval_contains(T("to_tmax")));
  CHECK(interval_contains(T("eq_tmin")));
  CHECK(interval_contains(T("to_godel")));
  CHECK_FALSE(interval_contains(T("meet")));
  CHECK(interval_count() == 16777216);
}

TEST_CASE("classify matches the published classification") {
  ClassificationRecord r = classify(CloneSpec::of("b", Base::dma, {"box"}));
  CHECK(r.protoalgebraic);
  CHECK(r.equivalential);
  CHECK_FALSE(r.truth_equational);
  CHECK_FALSE(r.algebraizable);
  CHECK(r.selfextensional);

  ClassificationRecord d = classify(CloneSpec::of("dma", Base::dma));
  CHECK_FALSE(d.protoalgebraic);
  CHECK(d.selfextensional);

  ClassificationRecord del = classify(CloneSpec::of("d", Base::dma, {"delta"}));
  CHECK(del.protoalgebraic);
  CHECK(del.truth_equational);
  CHECK(del.algebraizable);
  CHECK_FALSE(del.selfextensional);

  CHECK_THROWS_AS(classify(CloneSpec::of("dlat", Base::dlat)), std::invalid_argument);
}

TEST_CASE("semantic selfextensionality") {
  auto a = semantic_selfextensionality(CloneSpec::of("d", Base::dma, {"delta"}), 1);
  REQUIRE(a.counterexample.has_value());
  REQUIRE(a.tables.has_value());
  CHECK(profile_of(a.tables->first).truth == profile_of(a.tables->second).truth);
  CHECK(a.tables->first != a.tables->second);

  auto b = semantic_selfextensionality(CloneSpec::of("dma", Base::dma), 2);
  CHECK_FALSE(b.counterexample.has_value());
  CHECK_FALSE(b.inconclusive);

  auto c = semantic_selfextensionality(CloneSpec::of("tn", Base::dma, {"t_n_to_n"}), 2);
  CHECK(c.counterexample.has_value());
}
