#include "tamecheck/gate_catalog.hpp"

#include <algorithm>

#include "tamecheck/errors.hpp"

namespace tamecheck {

namespace {

using DC = DefinabilityClass;

std::int64_t geti(const Json& h, const std::string& key) {
  if (!h.contains(key)) throw MissingHyperparam("missing hyperparameter: " + key);
  return h.at(key).get<std::int64_t>();
}

std::int64_t geti_or(const Json& h, const std::string& key, std::int64_t def) {
  return h.contains(key) ? h.at(key).get<std::int64_t>() : def;
}

bool getb_or(const Json& h, const std::string& key, bool def) {
  return h.contains(key) ? h.at(key).get<bool>() : def;
}

std::string gets_or(const Json& h, const std::string& key, const std::string& def) {
  return h.contains(key) ? h.at(key).get<std::string>() : def;
}

GateSpec make(std::string name, std::int64_t n, std::int64_t p, std::int64_t m,
              DC cls, std::optional<PfaffFormat> fmt, bool smooth,
              std::vector<std::string> notes = {}) {
  return GateSpec{std::move(name), n, p, m, cls, std::move(fmt), smooth,
                  std::move(notes)};
}

// GELU tanh approximation: (x/2) * (1 + tanh(c*(x + 0.044715 x^3))).
// The format is derived through the algebra rather than hard-coded.
PfaffFormat gelu_tanh_format() {
  PfaffFormat tanh_fmt{1, 2, 1};
  PfaffFormat cubic{0, 0, 3};
  PfaffFormat inner = fmt_compose(tanh_fmt, {cubic});
  PfaffFormat one_plus = fmt_sum(PfaffFormat{0, 0, 0}, inner);
  return fmt_product(PfaffFormat{0, 0, 1}, one_plus);
}

}  // namespace

PfaffFormat exp_of_polynomial_format(std::int64_t degree) {
  if (degree < 0) throw InvalidFormat("exp_of_polynomial_format: negative degree");
  return {1, std::max<BigInt>(BigInt(degree), 1), 1};
}

GateCatalog::GateCatalog() = default;

const GateCatalog& default_catalog() {
  static const GateCatalog catalog;
  return catalog;
}

bool GateCatalog::contains(const std::string& name) const {
  const auto names = gate_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> GateCatalog::gate_names() const {
  return {
      "identity",        "affine",         "conv",
      "polynomial",      "exp",            "sigmoid",
      "tanh",            "softplus",       "gelu",
      "gelu_tanh",       "swish",          "swiglu",
      "relu",            "leaky_relu",     "prelu",
      "relu_p",          "hard_tanh",      "hard_sigmoid",
      "spline",          "softsign",       "elu",
      "selu",            "mish",           "maxout",
      "winner_take_all", "softmax",        "multihead_attention",
      "cross_attention", "sliding_window_attention",
      "layer_norm",      "group_norm",     "instance_norm",
      "rms_norm",        "batch_norm_inference",
      "embedding",       "fourier_pe",     "avg_pool",
      "max_pool",        "deq",            "residual_add",
      "gated_residual",  "custom_pfaffian",
  };
}

std::vector<std::string> GateCatalog::loss_names() const {
  return {"zero_one", "clipped_mse", "clipped_mae", "exp_squashed_mse"};
}

GateSpec GateCatalog::lookup(const std::string& name, const Json& h) const {
  if (!contains(name)) throw UnknownGate(name);
  return lookup_impl(name, h);
}

GateSpec GateCatalog::lookup_impl(const std::string& name, const Json& h) const {
  if (name == "identity") {
    std::int64_t d = geti_or(h, "dim", 1);
    return make(name, d, 0, d, DC::SemiAlgebraic, PfaffFormat{0, 0, 1}, true);
  }
  if (name == "affine") {
    std::int64_t n = geti(h, "in_dim");
    std::int64_t m = geti(h, "out_dim");
    bool bias = getb_or(h, "bias", true);
    return make(name, n, m * (n + (bias ? 1 : 0)), m, DC::SemiAlgebraic,
                PfaffFormat{0, 0, 2}, true,
                {"format (0,0,2) jointly in inputs and parameters; (0,0,1) in inputs alone"});
  }
  if (name == "conv") {
    std::int64_t n = geti(h, "in_dim");
    std::int64_t m = geti(h, "out_dim");
    std::int64_t k = geti(h, "kernel_size");
    bool bias = getb_or(h, "bias", true);
    return make(name, n, k + (bias ? m : 0), m, DC::SemiAlgebraic,
                PfaffFormat{0, 0, 2}, true,
                {"Toeplitz-type weight sharing: kernel slice counted once"});
  }
  if (name == "polynomial") {
    std::int64_t deg = geti(h, "degree");
    std::int64_t d = geti_or(h, "dim", 1);
    if (deg < 0) throw MissingHyperparam("polynomial: degree must be >= 0");
    return make(name, d, 0, d, DC::SemiAlgebraic,
                PfaffFormat{0, 0, BigInt(deg)}, true);
  }
  if (name == "exp") {
    return make(name, 1, 0, 1, DC::RExp, PfaffFormat{1, 1, 1}, true);
  }
  if (name == "sigmoid" || name == "tanh") {
    return make(name, 1, 0, 1, DC::RExp, PfaffFormat{1, 2, 1}, true);
  }
  if (name == "softplus") {
    return make(name, 1, 0, 1, DC::RExp, PfaffFormat{2, 2, 1}, true);
  }
  if (name == "gelu") {
    return make(name, 1, 0, 1, DC::PfaffianClosure, PfaffFormat{2, 2, 2}, true,
                {"exact erf-based GELU; classified via the Pfaffian closure"});
  }
  if (name == "gelu_tanh") {
    return make(name, 1, 0, 1, DC::RExp, gelu_tanh_format(), true,
                {"format derived through the algebra from tanh over a cubic"});
  }
  if (name == "swish") {
    std::int64_t p = getb_or(h, "trainable_beta", false) ? 1 : 0;
    return make(name, 1, p, 1, DC::RExp, PfaffFormat{2, 4, 2}, true);
  }
  if (name == "swiglu") {
    std::int64_t p = getb_or(h, "trainable_beta", false) ? 1 : 0;
    return make(name, 2, p, 1, DC::RExp, PfaffFormat{2, 4, 3}, true);
  }
  if (name == "relu" || name == "leaky_relu" || name == "relu_p" ||
      name == "hard_tanh" || name == "hard_sigmoid") {
    return make(name, 1, 0, 1, DC::SemiAlgebraic, std::nullopt, false,
                {"piecewise-polynomial; blocks the Pfaffian route"});
  }
  if (name == "prelu") {
    return make(name, 1, 1, 1, DC::SemiAlgebraic, std::nullopt, false,
                {"trainable slope; piecewise-polynomial jointly in (x, alpha)"});
  }
  if (name == "spline") {
    std::int64_t knots = geti(h, "knots");
    return make(name, 1, knots, 1, DC::SemiAlgebraic, std::nullopt, false,
                {"finite-knot spline (KAN-style); piecewise-polynomial"});
  }
  if (name == "softsign") {
    return make(name, 1, 0, 1, DC::SemiAlgebraic, std::nullopt, false);
  }
  if (name == "elu" || name == "selu") {
    return make(name, 1, 0, 1, DC::RExp, std::nullopt, false,
                {"non-smooth at 0: no global Pfaffian chain despite R_exp definability"});
  }
  if (name == "mish") {
    return make(name, 1, 0, 1, DC::RExp, std::nullopt, true);
  }
  if (name == "maxout") {
    std::int64_t d = geti(h, "in_dim");
    std::int64_t k = geti(h, "pieces");
    return make(name, d, k * (d + 1), 1, DC::SemiAlgebraic, std::nullopt, false);
  }
  if (name == "winner_take_all") {
    std::int64_t d = geti(h, "in_dim");
    std::int64_t m = geti_or(h, "out_dim", d);
    std::int64_t cells = geti(h, "cells");
    return make(name, d, cells * m * (d + 1), m, DC::SemiAlgebraic, std::nullopt,
                false, {"polyhedral cell partition with one affine map per cell"});
  }
  if (name == "softmax") {
    std::int64_t k = geti(h, "dim");
    return make(name, k, 0, k, DC::RExp, std::nullopt, true,
                {"Pfaffian format built on demand (attention_format mechanics)"});
  }
  if (name == "multihead_attention" || name == "cross_attention" ||
      name == "sliding_window_attention") {
    std::int64_t t = geti(h, "seq_len");
    std::int64_t din = geti(h, "d_in");
    std::int64_t heads = geti(h, "heads");
    std::int64_t dk = geti(h, "d_k");
    std::int64_t dv = geti(h, "d_v");
    std::int64_t dout = geti(h, "d_out");
    if (t < 1) throw InvalidSequenceLength("attention: seq_len must be >= 1");
    std::vector<std::string> notes;
    if (name == "sliding_window_attention") {
      std::int64_t w = geti(h, "window");
      if (w < 1 || w > t)
        throw MissingHyperparam("sliding_window_attention: window must be in [1, seq_len]");
      notes.push_back("fixed nonempty finite attention window");
    }
    std::int64_t p = heads * din * (2 * dk + dv) + heads * dv * dout;
    return make(name, t * din, p, t * dout, DC::RExp, std::nullopt, true,
                std::move(notes));
  }
  if (name == "layer_norm" || name == "group_norm" || name == "instance_norm" ||
      name == "rms_norm") {
    std::int64_t d = geti(h, "dim");
    return make(name, d, 0, d, DC::SemiAlgebraic, std::nullopt, false,
                {"gamma/beta fixed; stabilization epsilon > 0 assumed"});
  }
  if (name == "batch_norm_inference") {
    std::int64_t d = geti(h, "dim");
    return make(name, d, 0, d, DC::SemiAlgebraic, PfaffFormat{0, 0, 1}, true,
                {"fixed population statistics: affine at inference time"});
  }
  if (name == "embedding") {
    std::int64_t vocab = geti(h, "vocab");
    std::int64_t d = geti(h, "dim");
    return make(name, 1, vocab * d, d, DC::SemiAlgebraic, std::nullopt, false,
                {"row lookup on a finite index set"});
  }
  if (name == "fourier_pe") {
    std::int64_t m = geti(h, "num_freq");
    std::string domain = gets_or(h, "domain", "finite");
    bool trainable = getb_or(h, "trainable_freq", false);
    bool bounded_params = getb_or(h, "bounded_param_domain", false);
    if (trainable && !bounded_params) {
      throw UnboundedDomain(
          "fourier_pe: trainable frequencies require a declared bounded parameter domain");
    }
    std::int64_t p = trainable ? 2 * m : 0;
    if (domain == "finite") {
      return make(name, 1, p, 2 * m, DC::SemiAlgebraic, std::nullopt, false,
                  {"finite position set: the encoding is a finite lookup"});
    }
    if (domain == "bounded") {
      return make(name, 1, p, 2 * m, DC::RAn, std::nullopt, true,
                  {"restricted sine/cosine on a bounded position domain"});
    }
    if (domain == "unbounded") {
      return make(name, 1, p, 2 * m, DC::NotDefinable, std::nullopt, true,
                  {"global sine on an unbounded domain: infinitely many connected "
                   "components in the zero set"});
    }
    throw MissingHyperparam("fourier_pe: domain must be finite|bounded|unbounded");
  }
  if (name == "avg_pool") {
    std::int64_t d = geti(h, "dim");
    return make(name, d, 0, 1, DC::SemiAlgebraic, PfaffFormat{0, 0, 1}, true);
  }
  if (name == "max_pool") {
    std::int64_t d = geti(h, "dim");
    return make(name, d, 0, 1, DC::SemiAlgebraic, std::nullopt, false);
  }
  if (name == "deq") {
    if (!h.contains("f_class") || !h.contains("g_class"))
      throw MissingHyperparam("deq: f_class and g_class are required");
    DC f_cls = class_from_name(h.at("f_class").get<std::string>());
    DC g_cls = class_from_name(h.at("g_class").get<std::string>());
    std::int64_t d = geti_or(h, "dim", 1);
    std::int64_t p = geti_or(h, "param_count", 0);
    std::vector<std::string> notes = {
        "obligation: caller asserts existence and uniqueness of the fixed point"};
    if (!getb_or(h, "fixed_point_asserted", false)) {
      notes.push_back("warning: fixed-point obligation not asserted by the caller");
    }
    return make(name, d, p, d, join(f_cls, g_cls), std::nullopt, false,
                std::move(notes));
  }
  if (name == "residual_add") {
    std::int64_t d = geti(h, "dim");
    return make(name, 2 * d, 0, d, DC::SemiAlgebraic, PfaffFormat{0, 0, 1}, true,
                {"componentwise skip addition"});
  }
  if (name == "gated_residual") {
    std::int64_t d = geti(h, "dim");
    return make(name, 3 * d, 0, d, DC::SemiAlgebraic, PfaffFormat{0, 0, 2}, true,
                {"x + g(x) .* f(x) over precomputed branches"});
  }
  if (name == "custom_pfaffian") {
    // A user-declared smooth Pfaffian gate: the caller asserts the format.
    std::int64_t q = geti(h, "q"), D = geti(h, "D"), d = geti(h, "d");
    if (q < 0 || D < 0 || d < 0)
      throw MissingHyperparam("custom_pfaffian: q, D, d must be >= 0");
    std::int64_t p = geti_or(h, "param_count", 0);
    return make(name, geti_or(h, "dim", 1), p, geti_or(h, "dim", 1),
                DC::PfaffianClosure, PfaffFormat{BigInt(q), BigInt(D), BigInt(d)},
                true, {"obligation: caller asserts the declared chain exists"});
  }
  throw UnknownGate(name);
}

GateSpec GateCatalog::loss_lookup(const std::string& name) const {
  if (name == "zero_one") {
    return make(name, 2, 0, 1, DC::SemiAlgebraic, std::nullopt, false,
                {"classification indicator: handled by the classification planner"});
  }
  if (name == "clipped_mse" || name == "clipped_mae") {
    return make(name, 2, 0, 1, DC::SemiAlgebraic, std::nullopt, false,
                {"bounded range [0,1]"});
  }
  if (name == "exp_squashed_mse") {
    // 1 - e^{-(yhat - y)^2}: the chain is the single function e^{-(yhat-y)^2},
    // whose derivative -2(yhat-y) f1 has degree 2; output 1 - f1 has degree 1.
    PfaffFormat fmt = exp_of_polynomial_format(2);
    return make(name, 2, 0, 1, DC::RExp, fmt, true, {"bounded range [0,1]"});
  }
  throw UnknownLoss(name);
}

DerivedFormat GateCatalog::attention_format(std::int64_t seq_len,
                                            std::int64_t score_degree) const {
  if (seq_len < 1) throw InvalidSequenceLength("attention_format: seq_len must be >= 1");
  if (score_degree < 1)
    throw InvalidSequenceLength("attention_format: score_degree must be >= 1");

  DerivedFormat out;
  if (seq_len == 1) {
    out.format = {0, 0, 1};
    out.provenance = {"T = 1: softmax weight is constant 1; identity weighting"};
    return out;
  }

  // T exponential gates e^{score_i}, each a one-element chain of degree
  // score_degree; the denominator sum concatenates the chains.
  PfaffFormat exp_gate = exp_of_polynomial_format(score_degree);
  PfaffFormat denom = exp_gate;
  for (std::int64_t i = 1; i < seq_len; ++i) denom = fmt_sum(denom, exp_gate);
  out.provenance.push_back("denominator: " + std::to_string(seq_len) +
                           " exp gates of format " + exp_gate.str() +
                           " summed to " + denom.str());

  // Reciprocal g = 1/denominator appended to the chain: g' = -u' g^2 is a
  // polynomial of degree score_degree + 2 over (vars, exps, g).
  BigInt recip_degree = BigInt(score_degree) + 2;
  PfaffFormat with_recip{denom.q + 1, std::max(denom.D, recip_degree), 1};
  out.provenance.push_back("reciprocal gate appended: chain " + with_recip.str());

  // Softmax weight e^{s_m} * g has degree 2 over the chain; the value
  // projection W_V X_m is a degree-2 polynomial jointly in inputs and
  // parameters; the weighted sum multiplies the degrees.
  PfaffFormat weight{with_recip.q, with_recip.D, 2};
  PfaffFormat value{0, 0, 2};
  PfaffFormat row = fmt_product(weight, value, ChainMode::Disjoint);
  out.provenance.push_back("row = softmax weights times degree-2 value projection: " +
                           row.str());
  out.format = row;
  return out;
}

Json GateCatalog::dump() const {
  // Representative instantiations for dimension-parametrized entries.
  Json defaults = {
      {"affine", {{"in_dim", 1}, {"out_dim", 1}}},
      {"conv", {{"in_dim", 4}, {"out_dim", 4}, {"kernel_size", 3}}},
      {"polynomial", {{"degree", 2}}},
      {"spline", {{"knots", 8}}},
      {"maxout", {{"in_dim", 2}, {"pieces", 2}}},
      {"winner_take_all", {{"in_dim", 2}, {"cells", 2}}},
      {"softmax", {{"dim", 2}}},
      {"multihead_attention",
       {{"seq_len", 2}, {"d_in", 2}, {"heads", 1}, {"d_k", 1}, {"d_v", 1}, {"d_out", 2}}},
      {"cross_attention",
       {{"seq_len", 2}, {"d_in", 2}, {"heads", 1}, {"d_k", 1}, {"d_v", 1}, {"d_out", 2}}},
      {"sliding_window_attention",
       {{"seq_len", 2}, {"d_in", 2}, {"heads", 1}, {"d_k", 1}, {"d_v", 1}, {"d_out", 2},
        {"window", 1}}},
      {"layer_norm", {{"dim", 2}}},
      {"group_norm", {{"dim", 2}}},
      {"instance_norm", {{"dim", 2}}},
      {"rms_norm", {{"dim", 2}}},
      {"batch_norm_inference", {{"dim", 2}}},
      {"embedding", {{"vocab", 2}, {"dim", 2}}},
      {"fourier_pe", {{"num_freq", 1}, {"domain", "finite"}}},
      {"avg_pool", {{"dim", 2}}},
      {"max_pool", {{"dim", 2}}},
      {"deq", {{"f_class", "semi_algebraic"}, {"g_class", "semi_algebraic"},
               {"fixed_point_asserted", true}}},
      {"residual_add", {{"dim", 1}}},
      {"gated_residual", {{"dim", 1}}},
      {"custom_pfaffian", {{"q", 1}, {"D", 1}, {"d", 1}}},
  };

  Json entries = Json::array();
  for (const std::string& name : gate_names()) {
    Json hyper = defaults.contains(name) ? defaults.at(name) : Json::object();
    GateSpec spec = lookup(name, hyper);
    Json e;
    e["name"] = spec.name;
    e["class"] = class_name(spec.cls);
    e["smooth"] = spec.smooth;
    if (spec.format) {
      e["format"] = {{"q", spec.format->q.str()},
                     {"D", spec.format->D.str()},
                     {"d", spec.format->d.str()}};
    } else {
      e["format"] = nullptr;
    }
    e["caveats"] = spec.notes;
    entries.push_back(std::move(e));
  }
  Json losses = Json::array();
  for (const std::string& name : loss_names()) {
    GateSpec spec = loss_lookup(name);
    Json e;
    e["name"] = spec.name;
    e["class"] = class_name(spec.cls);
    if (spec.format) {
      e["format"] = {{"q", spec.format->q.str()},
                     {"D", spec.format->D.str()},
                     {"d", spec.format->d.str()}};
    } else {
      e["format"] = nullptr;
    }
    e["caveats"] = spec.notes;
    losses.push_back(std::move(e));
  }
  return Json{{"gates", entries}, {"losses", losses}};
}

}  // namespace tamecheck
