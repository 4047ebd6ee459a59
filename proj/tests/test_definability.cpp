#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tamecheck/definability.hpp"
#include "tamecheck/errors.hpp"

using namespace tamecheck;
using DC = DefinabilityClass;

namespace {
const std::vector<DC> kAll = {DC::SemiAlgebraic, DC::RAn,  DC::RExp,
                              DC::RAnExp,        DC::PfaffianClosure,
                              DC::Top,           DC::NotDefinable};
}

TEST_CASE("chain order") {
  CHECK(class_leq(DC::SemiAlgebraic, DC::RAn));
  CHECK(class_leq(DC::SemiAlgebraic, DC::RExp));
  CHECK(class_leq(DC::RAn, DC::RAnExp));
  CHECK(class_leq(DC::RExp, DC::RAnExp));
  CHECK(class_leq(DC::RAnExp, DC::Top));
  CHECK(class_leq(DC::Top, DC::NotDefinable));
  CHECK_FALSE(class_leq(DC::RAn, DC::RExp));
  CHECK_FALSE(class_leq(DC::RExp, DC::RAn));
}

TEST_CASE("the Pfaffian closure is incomparable to the analytic chain") {
  for (DC c : {DC::RAn, DC::RExp, DC::RAnExp}) {
    CHECK_FALSE(class_leq(DC::PfaffianClosure, c));
    CHECK_FALSE(class_leq(c, DC::PfaffianClosure));
  }
  CHECK(class_leq(DC::SemiAlgebraic, DC::PfaffianClosure));
  CHECK(class_leq(DC::PfaffianClosure, DC::Top));
}

TEST_CASE("join of incomparable classes") {
  CHECK(join(DC::RAn, DC::RExp) == DC::RAnExp);
  CHECK(join(DC::PfaffianClosure, DC::RExp) == DC::Top);
  CHECK(join(DC::PfaffianClosure, DC::RAnExp) == DC::Top);
  CHECK(join(DC::SemiAlgebraic, DC::PfaffianClosure) == DC::PfaffianClosure);
  CHECK(join(DC::NotDefinable, DC::SemiAlgebraic) == DC::NotDefinable);
}

TEST_CASE("join is a semilattice operation") {
  for (DC a : kAll)
    for (DC b : kAll) {
      CHECK(join(a, b) == join(b, a));
      CHECK(join(a, a) == a);
      CHECK(class_leq(a, join(a, b)));
      CHECK(class_leq(b, join(a, b)));
      for (DC c : kAll) {
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        // join is the least upper bound
        if (class_leq(a, c) && class_leq(b, c)) CHECK(class_leq(join(a, b), c));
      }
    }
}

TEST_CASE("leq is a partial order") {
  for (DC a : kAll) {
    CHECK(class_leq(a, a));
    for (DC b : kAll) {
      if (class_leq(a, b) && class_leq(b, a)) CHECK(a == b);
      for (DC c : kAll)
        if (class_leq(a, b) && class_leq(b, c)) CHECK(class_leq(a, c));
    }
  }
}

TEST_CASE("names round-trip") {
  for (DC c : kAll) CHECK(class_from_name(class_name(c)) == c);
  CHECK(class_name(DC::RAnExp) == "R_an_exp");
  CHECK_THROWS_AS(class_from_name("bogus"), Error);
}

TEST_CASE("join over a list") {
  std::vector<DC> cs = {DC::SemiAlgebraic, DC::RExp, DC::RAn};
  CHECK(join_classes(cs) == DC::RAnExp);
  CHECK_THROWS_AS(join_classes(std::vector<DC>{}), Error);
}
