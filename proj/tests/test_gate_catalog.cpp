#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamecheck/errors.hpp"
#include "tamecheck/gate_catalog.hpp"

using namespace tamecheck;
using DC = DefinabilityClass;

namespace {
const GateCatalog& cat = default_catalog();

PfaffFormat fmt_of(const std::string& name, const Json& h = Json::object()) {
  auto spec = cat.lookup(name, h);
  REQUIRE(spec.format.has_value());
  return *spec.format;
}
}  // namespace

TEST_CASE("golden activation formats") {
  CHECK(fmt_of("sigmoid") == PfaffFormat{1, 2, 1});
  CHECK(fmt_of("tanh") == PfaffFormat{1, 2, 1});
  CHECK(fmt_of("softplus") == PfaffFormat{2, 2, 1});
  CHECK(fmt_of("gelu") == PfaffFormat{2, 2, 2});
  CHECK(fmt_of("swish") == PfaffFormat{2, 4, 2});
  CHECK(fmt_of("swiglu") == PfaffFormat{2, 4, 3});
  CHECK(fmt_of("exp") == PfaffFormat{1, 1, 1});
}

TEST_CASE("classes") {
  CHECK(cat.lookup("sigmoid").cls == DC::RExp);
  CHECK(cat.lookup("gelu").cls == DC::PfaffianClosure);
  CHECK(cat.lookup("relu").cls == DC::SemiAlgebraic);
  CHECK(cat.lookup("fourier_pe", {{"num_freq", 1}, {"domain", "bounded"}}).cls ==
        DC::RAn);
  CHECK(cat.lookup("fourier_pe", {{"num_freq", 1}, {"domain", "unbounded"}}).cls ==
        DC::NotDefinable);
}

TEST_CASE("piecewise gates carry no format") {
  for (const char* g : {"relu", "leaky_relu", "hard_tanh", "softsign", "elu"})
    CHECK_FALSE(cat.lookup(g).format.has_value());
  CHECK_FALSE(cat.lookup("max_pool", {{"dim", 3}}).format.has_value());
}

TEST_CASE("parameter counts") {
  CHECK(cat.lookup("affine", {{"in_dim", 2}, {"out_dim", 3}}).param_count == 9);
  CHECK(cat.lookup("affine", {{"in_dim", 2}, {"out_dim", 3}, {"bias", false}})
            .param_count == 6);
  CHECK(cat.lookup("conv", {{"in_dim", 8}, {"out_dim", 8}, {"kernel_size", 3}})
            .param_count == 11);
  CHECK(cat.lookup("embedding", {{"vocab", 10}, {"dim", 4}}).param_count == 40);
  CHECK(cat.lookup("maxout", {{"in_dim", 3}, {"pieces", 2}}).param_count == 8);
  auto attn = cat.lookup("multihead_attention",
                         {{"seq_len", 2}, {"d_in", 2}, {"heads", 1},
                          {"d_k", 1}, {"d_v", 1}, {"d_out", 2}});
  CHECK(attn.param_count == 8);  // h*d_in*(2dk+dv) + h*dv*d_out
  CHECK(attn.input_dim == 4);
  CHECK(attn.output_dim == 4);
}

TEST_CASE("hyperparameter errors") {
  CHECK_THROWS_AS(cat.lookup("nope"), UnknownGate);
  CHECK_THROWS_AS(cat.lookup("affine"), MissingHyperparam);
  CHECK_THROWS_AS(cat.lookup("deq", {{"dim", 1}}), MissingHyperparam);
  CHECK_THROWS_AS(
      cat.lookup("fourier_pe", {{"num_freq", 1}, {"trainable_freq", true}}),
      UnboundedDomain);
  CHECK_THROWS_AS(cat.lookup("sliding_window_attention",
                             {{"seq_len", 2}, {"d_in", 1}, {"heads", 1},
                              {"d_k", 1}, {"d_v", 1}, {"d_out", 1},
                              {"window", 3}}),
                  MissingHyperparam);
}

TEST_CASE("deq joins the branch classes and records the obligation") {
  auto spec = cat.lookup("deq", {{"f_class", "R_an"}, {"g_class", "R_exp"}});
  CHECK(spec.cls == DC::RAnExp);
  bool warned = false;
  for (const auto& n : spec.notes)
    if (n.find("not asserted") != std::string::npos) warned = true;
  CHECK(warned);
}

TEST_CASE("exp of a polynomial") {
  CHECK(exp_of_polynomial_format(1) == PfaffFormat{1, 1, 1});
  CHECK(exp_of_polynomial_format(3) == PfaffFormat{1, 3, 1});
  CHECK(exp_of_polynomial_format(0) == PfaffFormat{1, 1, 1});
  CHECK_THROWS_AS(exp_of_polynomial_format(-1), InvalidFormat);
}

TEST_CASE("attention row format") {
  auto t1 = cat.attention_format(1, 2);
  CHECK(t1.format == PfaffFormat{0, 0, 1});
  auto t4 = cat.attention_format(4, 2);
  CHECK(t4.format.q == 5);  // 4 exp gates + the reciprocal
  CHECK(t4.format.D == 4);  // score_degree + 2
  CHECK(t4.format.d == 4);
  CHECK_FALSE(t4.provenance.empty());
  CHECK_THROWS_AS(cat.attention_format(0, 1), InvalidSequenceLength);
  CHECK_THROWS_AS(cat.attention_format(2, 0), InvalidSequenceLength);
}

TEST_CASE("losses") {
  CHECK(cat.loss_lookup("exp_squashed_mse").format == PfaffFormat{1, 2, 1});
  CHECK(cat.loss_lookup("clipped_mse").cls == DC::SemiAlgebraic);
  CHECK_FALSE(cat.loss_lookup("zero_one").format.has_value());
  CHECK_THROWS_AS(cat.loss_lookup("hinge"), UnknownLoss);
}

TEST_CASE("catalog dump covers every gate and round-trips as JSON") {
  Json doc = cat.dump();
  CHECK(doc.at("gates").size() == cat.gate_names().size());
  CHECK(doc.at("losses").size() == cat.loss_names().size());
  bool saw_sigmoid = false, relu_absent = false;
  for (const auto& e : doc.at("gates")) {
    if (e.at("name") == "sigmoid") {
      saw_sigmoid = true;
      CHECK(e.at("format").at("q") == "1");
      CHECK(e.at("format").at("D") == "2");
      CHECK(e.at("format").at("d") == "1");
    }
    if (e.at("name") == "relu") relu_absent = e.at("format").is_null();
  }
  CHECK(saw_sigmoid);
  CHECK(relu_absent);
  CHECK(Json::parse(doc.dump()) == doc);
}

TEST_CASE("gelu tanh approximation format comes out of the algebra") {
  // tanh over a cubic: (1, 8, 3); 1 + that keeps the format; times x/2
  // raises the degree by one.
  CHECK(fmt_of("gelu_tanh") == PfaffFormat{1, 8, 4});
}
