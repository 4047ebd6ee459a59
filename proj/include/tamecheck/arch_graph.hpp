#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tamecheck/gate_catalog.hpp"
#include "tamecheck/numeric.hpp"

namespace tamecheck {

struct Diagnostic {
  std::string code;
  std::string node;  // empty for graph-level diagnostics
  std::string message;
};

struct NodeDecl {
  std::string id;
  bool is_input = false;
  std::int64_t input_dim = 1;  // input nodes only
  std::string gate;            // catalog name, gate nodes only
  Json hyperparams = Json::object();
  std::string param_group;     // shared parameter slice; "" means unique
};

// Linear readout applied to the concatenated output-node state.  `rows > 1`
// means the weight block is shared across that many rows of the output state
// (per-position readout); `bias` adds d_out trainable bias entries.
struct ReadoutSpec {
  std::int64_t rows = 1;
  bool bias = false;
};

/// The computational-graph IR: a DAG of gate instantiations with a binary
/// lifting channel and a linear readout.  Graphs are value types; analysis
/// passes treat them as immutable.
struct ArchGraph {
  std::int64_t version = 1;
  std::int64_t d_in = 1;
  std::int64_t d_out = 1;
  std::vector<NodeDecl> nodes;                              // declaration order
  std::vector<std::pair<std::string, std::string>> edges;   // insertion order fixes parent concatenation
  std::vector<std::vector<int>> lifting;                    // empty = identity
  ReadoutSpec readout;

  void add_input(const std::string& id, std::int64_t dim);
  void add_gate(const std::string& id, const std::string& gate,
                Json hyperparams, const std::vector<std::string>& parents,
                const std::string& param_group = "");

  const NodeDecl* find(const std::string& id) const;
  std::vector<std::string> parents_of(const std::string& id) const;
};

// Per-node resolved shape and gate instantiation.  `copies` is the number of
// componentwise applications of the gate (weight-shared broadcast).
struct ResolvedNode {
  GateSpec gate;
  std::int64_t in_dim = 0;
  std::int64_t out_dim = 0;
  std::int64_t copies = 1;
  bool is_input = false;
};

struct ResolvedGraph {
  std::vector<std::string> order;  // topological, ties by node id
  std::map<std::string, ResolvedNode> nodes;
  std::vector<std::string> outputs;  // childless nodes, in topo order
  std::int64_t m_out = 0;            // concatenated output dimension
};

// Structural diagnostics; empty iff the graph satisfies every IR invariant.
std::vector<Diagnostic> validate(const ArchGraph& g,
                                 const GateCatalog& catalog = default_catalog());

// Deterministic topological order (Kahn, ties by node id).  Throws
// CycleDetected.
std::vector<std::string> topo_order(const ArchGraph& g);

// Shape and gate resolution; requires a valid graph (throws on diagnostics).
ResolvedGraph resolve(const ArchGraph& g,
                      const GateCatalog& catalog = default_catalog());

// Exact trainable-parameter count P, with shared parameter slices counted
// once.
BigInt param_count(const ArchGraph& g,
                   const GateCatalog& catalog = default_catalog());

// Line-graph MLP: widths (d_0, ..., d_{L+1}), one activation per hidden
// layer.  Throws BadWidths, UnknownGate.
ArchGraph build_mlp(const std::vector<std::int64_t>& widths,
                    const std::vector<std::string>& activations,
                    const GateCatalog& catalog = default_catalog());

struct TransformerConfig {
  std::int64_t vocab = 1;       // N
  std::int64_t d0 = 2;          // embedding width (even: Fourier PE pairs)
  std::int64_t seq_len = 1;     // T
  std::int64_t num_layers = 0;  // L
  std::int64_t d_out = 1;
  // Per-block hyperparameters, each of size num_layers.
  std::vector<std::int64_t> heads, d_model, d_k, d_v, d_ff;
  std::string activation = "relu";
  double lambda = 1.0;
  double epsilon = 1e-5;
  // Positional-encoding position domain: finite | bounded | unbounded.
  std::string pe_domain = "bounded";
  bool pe_trainable_freq = false;
  bool pe_bounded_param_domain = false;
};

// Post-LN transformer encoder: embedding + positional encoding, per block
// MHA + norms + feedforward + residuals, per-position affine readout.
// Throws BadConfig, UnboundedPE.
ArchGraph build_transformer(const TransformerConfig& cfg,
                            const GateCatalog& catalog = default_catalog());

// Closed-form parameter counts used by tests and builders.
BigInt mlp_param_formula(const std::vector<std::int64_t>& widths);
BigInt transformer_param_formula(const TransformerConfig& cfg);

// JSON architecture document (schema: schemas/arch_spec.schema.json).
ArchGraph parse_spec(const Json& doc);
ArchGraph parse_spec_text(const std::string& text);
Json emit_spec(const ArchGraph& g);

}  // namespace tamecheck
