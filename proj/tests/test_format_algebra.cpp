#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tamecheck/errors.hpp"
#include "tamecheck/format_algebra.hpp"

using namespace tamecheck;

namespace {
PfaffFormat rand_fmt(std::mt19937_64& gen, int max_q = 4, int max_D = 4,
                     int max_d = 4) {
  return {BigInt(gen() % (max_q + 1)), BigInt(gen() % (max_D + 1)),
          BigInt(1 + gen() % max_d)};
}
}  // namespace

TEST_CASE("sum and product combine chains and degrees") {
  PfaffFormat a{1, 2, 3}, b{2, 1, 4};
  CHECK(fmt_sum(a, b) == PfaffFormat{3, 2, 4});
  CHECK(fmt_product(a, b) == PfaffFormat{3, 2, 7});
  CHECK(fmt_sum(a, b, ChainMode::SharedChain) == PfaffFormat{2, 2, 4});
  CHECK(fmt_product(a, b, ChainMode::SharedChain) == PfaffFormat{2, 2, 7});
}

TEST_CASE("derivative degree D+d-1 with a floor at zero") {
  CHECK(fmt_derivative({1, 2, 1}) == PfaffFormat{1, 2, 2});
  CHECK(fmt_derivative({0, 0, 0}) == PfaffFormat{0, 0, 0});
  CHECK(fmt_derivative({2, 0, 0}) == PfaffFormat{2, 0, 0});
}

TEST_CASE("chain extension") {
  CHECK(fmt_chain_extend({1, 2, 1}) == PfaffFormat{2, 2, 1});
  CHECK(fmt_chain_extend({1, 1, 3}) == PfaffFormat{2, 3, 3});
  // degree-0 output must not shrink the chain degree
  CHECK(fmt_chain_extend({1, 2, 0}) == PfaffFormat{2, 2, 0});
}

TEST_CASE("composition examples") {
  CHECK(fmt_compose({1, 2, 1}, {PfaffFormat{0, 0, 1}}) == PfaffFormat{1, 2, 1});
  CHECK(fmt_compose({1, 1, 1}, {PfaffFormat{1, 1, 1}}) == PfaffFormat{2, 2, 1});
  CHECK(fmt_compose({1, 2, 1}, {PfaffFormat{1, 2, 2}, PfaffFormat{1, 2, 2}}) ==
        PfaffFormat{3, 7, 2});
  CHECK(fmt_compose({1, 2, 1}, {PfaffFormat{1, 2, 2}, PfaffFormat{1, 2, 2}},
                    ChainMode::SharedChain) == PfaffFormat{2, 7, 2});
}

TEST_CASE("composition rejects constant inner functions") {
  CHECK_THROWS_AS(fmt_compose({1, 1, 1}, {PfaffFormat{0, 0, 0}}),
                  DegenerateInnerDegree);
  CHECK_THROWS_AS(
      fmt_compose({1, 1, 1}, {PfaffFormat{0, 0, 1}, PfaffFormat{2, 3, 0}}),
      DegenerateInnerDegree);
}

TEST_CASE("composition with no inners is the outer format") {
  PfaffFormat a{2, 3, 4};
  CHECK(fmt_compose(a, std::initializer_list<PfaffFormat>{}) == a);
}

TEST_CASE("residual, affine precompose, replicate") {
  CHECK(fmt_residual({1, 2, 0}) == PfaffFormat{1, 2, 1});
  CHECK(fmt_residual({1, 2, 3}) == PfaffFormat{1, 2, 3});
  CHECK(fmt_affine_precompose({1, 2, 3}) == PfaffFormat{1, 2, 3});
  CHECK(fmt_replicate({2, 3, 4}, 3) == PfaffFormat{6, 3, 4});
  CHECK_THROWS_AS(fmt_replicate({1, 1, 1}, 0), Error);
}

TEST_CASE("all operations are componentwise monotone") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    PfaffFormat a = rand_fmt(gen), b = rand_fmt(gen);
    PfaffFormat a2{a.q + gen() % 3, a.D + gen() % 3, a.d + gen() % 3};
    CHECK(fmt_sum(a, b).dominated_by(fmt_sum(a2, b)));
    CHECK(fmt_product(a, b).dominated_by(fmt_product(a2, b)));
    CHECK(fmt_chain_extend(a).dominated_by(fmt_chain_extend(a2)));
    CHECK(fmt_compose(a, {b}).dominated_by(fmt_compose(a2, {b})));
    PfaffFormat b2{b.q + gen() % 3, b.D + gen() % 3, b.d + gen() % 3};
    CHECK(fmt_compose(a, {b}).dominated_by(fmt_compose(a, {b2})));
  }
}

TEST_CASE("shared-chain results never exceed disjoint-chain results") {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 200; ++i) {
    PfaffFormat a = rand_fmt(gen), b = rand_fmt(gen);
    CHECK(fmt_sum(a, b, ChainMode::SharedChain).dominated_by(fmt_sum(a, b)));
    CHECK(fmt_product(a, b, ChainMode::SharedChain)
              .dominated_by(fmt_product(a, b)));
  }
}

TEST_CASE("sum and product are commutative in the format") {
  std::mt19937_64 gen(13);
  for (int i = 0; i < 200; ++i) {
    PfaffFormat a = rand_fmt(gen), b = rand_fmt(gen);
    CHECK(fmt_sum(a, b) == fmt_sum(b, a));
    CHECK(fmt_product(a, b) == fmt_product(b, a));
  }
}
