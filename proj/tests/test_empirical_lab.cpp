#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tamecheck/bound_engine.hpp"
#include "tamecheck/empirical_lab.hpp"
#include "tamecheck/errors.hpp"

using namespace tamecheck;

TEST_CASE("affine family lower bounds") {
  ParametricFamily fam = make_affine_family();
  ProbeResult pd = pdim_lower_bound(fam, 4);
  CHECK(pd.value == 2);
  CHECK(replay_shatter_witness(fam, pd.witness));

  ProbeResult vc = vc_lower_bound(fam, 4);
  CHECK(vc.value == 2);
  CHECK(replay_shatter_witness(fam, vc.witness));
  CHECK(vc.value <= pd.value);  // thresholds include 0
}

TEST_CASE("constant family pseudo-shatters nothing") {
  ParametricFamily fam = make_constant_family(0.5);
  CHECK(pdim_lower_bound(fam, 3).value == 0);
  CHECK(vc_lower_bound(fam, 3).value == 0);
}

TEST_CASE("sigmoid families stay under their symbolic bounds") {
  ParametricFamily neuron = make_sigmoid_neuron_family();
  ProbeResult pd = pdim_lower_bound(neuron, 3);
  CHECK(replay_shatter_witness(neuron, pd.witness));
  PfaffFormat fmt = fmt_compose({1, 2, 1}, {PfaffFormat{0, 0, 2}});
  CHECK(BigInt(pd.value) <= pnn_pdim_bound(fmt, 2).pdim_bound);

  ParametricFamily net = make_two_layer_sigmoid_family(15, 200, 9);
  ProbeResult pd5 = pdim_lower_bound(net, 3);
  CHECK(replay_shatter_witness(net, pd5.witness));
  CHECK(pd5.value >= 2);
}

TEST_CASE("tampered witnesses fail replay") {
  ParametricFamily fam = make_affine_family();
  ProbeResult pd = pdim_lower_bound(fam, 3);
  LabJson bad = pd.witness;
  bad["pattern_witnesses"][0] = bad["pattern_witnesses"][1];
  CHECK_FALSE(replay_shatter_witness(fam, bad));
}

TEST_CASE("refining the grids never lowers the bound") {
  ProbeResult coarse = pdim_lower_bound(make_affine_family(7), 3);
  ProbeResult fine = pdim_lower_bound(make_affine_family(15), 3);
  CHECK(fine.value >= coarse.value);
}

TEST_CASE("budget guard") {
  ParametricFamily fam = make_affine_family();
  CHECK_THROWS_AS(pdim_lower_bound(fam, 6, 2), GridTooLarge);
  CHECK_THROWS_AS(pdim_lower_bound(fam, 13), GridTooLarge);
}

TEST_CASE("sign components in one dimension") {
  ParametricFamily quad;
  quad.input_dim = 1;
  quad.param_dim = 0;
  quad.name = "x^2-1";
  quad.evaluator = [](const std::vector<double>& x, const std::vector<double>&) {
    return x[0] * x[0] - 1;
  };
  quad.input_grid = cartesian_grid({linspace(-3, 3, 301)});
  CHECK(sign_components_1d(quad, {}).value == 1);

  quad.evaluator = [](const std::vector<double>&, const std::vector<double>&) {
    return 1.0;
  };
  CHECK(sign_components_1d(quad, {}).value == 0);

  quad.evaluator = [](const std::vector<double>& x, const std::vector<double>&) {
    return (x[0] * x[0] - 1) * (x[0] - 2);
  };
  CHECK(sign_components_1d(quad, {}).value == 2);
}

TEST_CASE("Sturm root counting") {
  CHECK(poly_roots_count({-1, 0, 1}) == 2);        // x^2 - 1
  CHECK(poly_roots_count({1, 0, 1}) == 0);         // x^2 + 1
  CHECK(poly_roots_count({0, 1}) == 1);            // x
  CHECK(poly_roots_count({0, 0, 0, 1}) == 1);      // x^3: distinct roots
  CHECK(poly_roots_count({1, 2, 1}) == 1);         // (x+1)^2
  CHECK(poly_roots_count({5}) == 0);               // nonzero constant
  CHECK(poly_roots_count({0, -1, 0, 1}) == 3);     // x^3 - x
  CHECK_THROWS_AS(poly_roots_count({0, 0}), ZeroPolynomial);
}

TEST_CASE("random polynomials never beat Bezout") {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 200; ++i) {
    int deg = 1 + gen() % 6;
    std::vector<BigRat> coeffs;
    for (int j = 0; j <= deg; ++j)
      coeffs.emplace_back(static_cast<long>(gen() % 19) - 9,
                          1 + static_cast<long>(gen() % 7));
    if (coeffs.back() == 0) coeffs.back() = 1;
    CHECK(poly_roots_count(coeffs) <=
          khovanskii_count(1, 0, 0, {BigInt(deg)}));
  }
}

TEST_CASE("exp-linear functions have at most two zeros") {
  std::mt19937_64 gen(22);
  BigInt cap = khovanskii_count(1, 1, 1, {BigInt(1)});
  REQUIRE(cap == 2);
  for (int i = 0; i < 200; ++i) {
    double a = 6.0 * (gen() % 1000) / 1000.0 - 3;
    double b = 6.0 * (gen() % 1000) / 1000.0 - 3;
    double c = 6.0 * (gen() % 1000) / 1000.0 - 3;
    CHECK(exp_linear_roots_lb(a, b, c, -8, 8, 4000) <= 2);
  }
}

TEST_CASE("verification suite") {
  VerifySummary ok = verify_suite({{"fine", 2, 3, ""}, {"tight", 5, 5, ""}});
  CHECK(ok.ok);
  CHECK(ok.violations.empty());

  VerifySummary bad = verify_suite({{"fine", 2, 3, ""}, {"broken", 7, 5, ""}});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].find("broken") != std::string::npos);

  VerifySummary empty = verify_suite({});
  CHECK(empty.ok);
  CHECK(empty.vacuous);
  CHECK(empty.to_json().contains("warning"));
}

TEST_CASE("default suite passes and is deterministic") {
  auto checks = default_suite(7, 3);
  CHECK_FALSE(checks.empty());
  CHECK(verify_suite(checks).ok);
  auto again = default_suite(7, 3);
  REQUIRE(checks.size() == again.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].oracle == again[i].oracle);
    CHECK(checks[i].bound == again[i].bound);
  }
}

TEST_CASE("random sampling is seed-reproducible") {
  auto a = random_points({{-1, 1}, {0, 2}}, 10, 42);
  auto b = random_points({{-1, 1}, {0, 2}}, 10, 42);
  auto c = random_points({{-1, 1}, {0, 2}}, 10, 43);
  CHECK(a == b);
  CHECK(a != c);
}
