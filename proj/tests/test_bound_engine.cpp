#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tamecheck/bound_engine.hpp"
#include "tamecheck/errors.hpp"

using namespace tamecheck;

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
  CHECK(ceil_log2(BigInt(1) << 100) == 100);
  CHECK(ceil_log2((BigInt(1) << 100) + 1) == 101);
  CHECK_THROWS_AS(ceil_log2(0), NonPositive);
}

TEST_CASE("khovanskii count") {
  CHECK(khovanskii_count(2, 0, 0, {2, 2}) == 4);
  CHECK(khovanskii_count(1, 1, 1, {1}) == 2);
  CHECK(khovanskii_count(1, 0, 0, {3}) == 3);
  // q = 0 collapses to Bezout for any degrees
  std::mt19937_64 gen(3);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + gen() % 4;
    std::vector<BigInt> degs;
    BigInt prod = 1;
    for (int j = 0; j < n; ++j) {
      degs.push_back(BigInt(1 + gen() % 5));
      prod *= degs.back();
    }
    CHECK(khovanskii_count(n, 0, BigInt(gen() % 4), degs) == prod);
  }
  CHECK_THROWS_AS(khovanskii_count(3, 0, 0, {0, 0, 0}), NegativeBase);
  CHECK_THROWS_AS(khovanskii_count(0, 0, 0, {}), InvalidFormat);
}

TEST_CASE("component bound B") {
  CHECK(component_bound_B(1, 1, 1, 1) == 8);
  CHECK(component_bound_B(2, 0, 0, 1) == 1);
  CHECK_THROWS_AS(component_bound_B(0, 1, 1, 1), InvalidFormat);
  CHECK_THROWS_AS(component_bound_B(1, 1, 1, 0), InvalidFormat);

  std::mt19937_64 gen(4);
  for (int i = 0; i < 200; ++i) {
    BigInt p = 1 + gen() % 5, q = gen() % 5, D = gen() % 8, d = 1 + gen() % 8;
    BigInt b = component_bound_B(p, q, D, d);
    CHECK(component_bound_B(p, q, D, d + 1) >= b);
    CHECK(component_bound_B(p, q, D + 1, d) >= b);
    CHECK(component_bound_B(p, q + 1, D, d) >= b);
    CHECK(component_bound_B(p + 1, q, D, d) >= b);
  }
}

TEST_CASE("km vc bound") {
  CHECK(km_vc_bound(1, 1, 8) == 22);
  CHECK(km_vc_bound(2, 1, 1) == 32);
  CHECK(km_vc_bound(1, 1, 1) == 16);
  CHECK(km_vc_bound(1, 2, 1) == 18);
  CHECK_THROWS_AS(km_vc_bound(1, 1, 0), NonPositive);
}

TEST_CASE("pnn pseudo-dimension bound") {
  BoundReport a = pnn_pdim_bound({1, 1, 1}, 1);
  CHECK(a.pdim_bound == 22);
  CHECK(a.B_log2_ceil == 3);
  CHECK(a.pdim_bound == 16 * a.p + 2 * a.B_log2_ceil);

  BoundReport b = pnn_pdim_bound({0, 0, 1}, 2);
  CHECK(b.pdim_bound == 32);
  CHECK(b.B_log2_ceil == 0);

  // doubling d never decreases the bound
  std::mt19937_64 gen(5);
  for (int i = 0; i < 100; ++i) {
    BigInt p = 1 + gen() % 4, q = gen() % 4, D = gen() % 6, d = 1 + gen() % 6;
    CHECK(pnn_pdim_bound({q, D, 2 * d}, p).pdim_bound >=
          pnn_pdim_bound({q, D, d}, p).pdim_bound);
  }
}

TEST_CASE("exact-B route dominates the expanded closed form") {
  std::mt19937_64 gen(6);
  for (int i = 0; i < 1000; ++i) {
    double p = 1 + gen() % 8, q = gen() % 9, D = gen() % 17, d = 1 + gen() % 16;
    BigInt pdim =
        pnn_pdim_bound({BigInt(q), BigInt(D), BigInt(d)}, BigInt(p)).pdim_bound;
    double t = p * (D + d - 1) + 1;
    double expansion = 16 * p + p * q * (p * q - 1) + 2 * p * std::log2(d) +
                       2 * p * std::log2(t) + 2 * p * q * std::log2(p + 1) +
                       2 * p * q * std::log2(t);
    CHECK(pdim >= BigInt(static_cast<long long>(std::floor(expansion))));
  }
}

TEST_CASE("classification planner") {
  CHECK(sample_size_classification(22, 0.1, 0.05).N == 2500);
  CHECK(sample_size_classification(22, 0.1, 1.0).N == 2200);  // ln 1 = 0
  CHECK_THROWS_AS(sample_size_classification(0, 0.1, 0.05), BadRange);
  CHECK_THROWS_AS(sample_size_classification(22, 0.0, 0.05), BadRange);
  CHECK_THROWS_AS(sample_size_classification(22, 0.1, 0.05, 0.0), BadRange);
  CHECK_THROWS_AS(sample_size_classification(22, 1.5, 0.05), BadRange);
}

TEST_CASE("regression planner") {
  CHECK(sample_size_regression(22, 0.1, 0.05).N == 64301);
  CHECK_THROWS_AS(sample_size_regression(1, 1.0, 0.05), DegenerateLog);
  CHECK_THROWS_AS(sample_size_regression(22, 0.0, 0.05), BadRange);
}

TEST_CASE("planner monotonicity") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 300; ++i) {
    BigInt K = 2 + gen() % 100;
    double eps = 0.01 + 0.5 * (gen() % 1000) / 1000.0;
    double del = 0.01 + 0.9 * (gen() % 1000) / 1000.0;
    for (bool reg : {false, true}) {
      auto plan = [&](BigInt k, double e, double d) {
        return reg ? sample_size_regression(k, e, d).N
                   : sample_size_classification(k, e, d).N;
      };
      BigInt n = plan(K, eps, del);
      CHECK(plan(K + 5, eps, del) >= n);           // nondecreasing in K
      CHECK(plan(K, eps * 0.5, del) >= n);         // antitone in epsilon
      CHECK(plan(K, eps, del * 0.5) >= n);         // antitone in delta
    }
  }
}

TEST_CASE("halving epsilon roughly quadruples the classification count") {
  auto n1 = sample_size_classification(50, 0.2, 1.0).N;
  auto n2 = sample_size_classification(50, 0.1, 1.0).N;
  CHECK(n2 == 4 * n1);
}
