#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tamecheck/definability.hpp"
#include "tamecheck/format_algebra.hpp"

namespace tamecheck {

using Json = nlohmann::ordered_json;

/// One instantiated entry of the gate dictionary: arities, trainable
/// parameter count, definability class, and (for smooth Pfaffian gates)
/// a format bound.
struct GateSpec {
  std::string name;
  std::int64_t input_dim = 1;
  std::int64_t param_count = 0;
  std::int64_t output_dim = 1;
  DefinabilityClass cls = DefinabilityClass::SemiAlgebraic;
  std::optional<PfaffFormat> format;
  bool smooth = false;
  std::vector<std::string> notes;  // caveats and declared obligations
};

struct DerivedFormat {
  PfaffFormat format;
  std::vector<std::string> provenance;
};

// e^{p(x)} for a polynomial p of degree k has the one-element chain
// (e^{p}) with derivative p'*e^{p}: format (1, max{k,1}, 1).
PfaffFormat exp_of_polynomial_format(std::int64_t degree);

class GateCatalog {
 public:
  GateCatalog();

  // Instantiate a catalog entry.  Throws UnknownGate, MissingHyperparam,
  // UnboundedDomain.
  GateSpec lookup(const std::string& name, const Json& hyperparams = Json::object()) const;

  bool contains(const std::string& name) const;

  // Loss entries for the regression planner path.  Throws UnknownLoss.
  GateSpec loss_lookup(const std::string& name) const;

  // Format bound for one attention row: T exponential score gates, one
  // reciprocal gate for the softmax denominator, then the product with the
  // degree-2 value projection.  T = 1 degenerates to constant weighting.
  DerivedFormat attention_format(std::int64_t seq_len, std::int64_t score_degree) const;

  // Machine-readable listing for the CLI `catalog` command.
  Json dump() const;

  std::vector<std::string> gate_names() const;
  std::vector<std::string> loss_names() const;

 private:
  GateSpec lookup_impl(const std::string& name, const Json& h) const;
};

const GateCatalog& default_catalog();

}  // namespace tamecheck
