#include "tamecheck/arch_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tamecheck/errors.hpp"

namespace tamecheck {

void ArchGraph::add_input(const std::string& id, std::int64_t dim) {
  NodeDecl n;
  n.id = id;
  n.is_input = true;
  n.input_dim = dim;
  nodes.push_back(std::move(n));
}

void ArchGraph::add_gate(const std::string& id, const std::string& gate,
                         Json hyperparams, const std::vector<std::string>& parents,
                         const std::string& param_group) {
  NodeDecl n;
  n.id = id;
  n.gate = gate;
  n.hyperparams = std::move(hyperparams);
  n.param_group = param_group;
  nodes.push_back(std::move(n));
  for (const auto& p : parents) edges.emplace_back(p, id);
}

const NodeDecl* ArchGraph::find(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

std::vector<std::string> ArchGraph::parents_of(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& [u, v] : edges)
    if (v == id) out.push_back(u);
  return out;
}

std::vector<std::string> topo_order(const ArchGraph& g) {
  std::map<std::string, int> indeg;
  std::map<std::string, std::vector<std::string>> children;
  for (const auto& n : g.nodes) indeg[n.id] = 0;
  for (const auto& [u, v] : g.edges) {
    if (!indeg.count(u) || !indeg.count(v)) continue;  // validated elsewhere
    ++indeg[v];
    children[u].push_back(v);
  }
  std::set<std::string> ready;  // ordered set: ties broken by node id
  for (const auto& [id, deg] : indeg)
    if (deg == 0) ready.insert(id);
  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (const auto& c : children[id])
      if (--indeg[c] == 0) ready.insert(c);
  }
  if (order.size() != g.nodes.size())
    throw CycleDetected("graph contains a directed cycle");
  return order;
}

namespace {

// Shape/gate resolution shared by validate() and resolve().  Appends
// diagnostics instead of throwing so validate can report every problem.
ResolvedGraph resolve_impl(const ArchGraph& g, const GateCatalog& catalog,
                           std::vector<Diagnostic>& diags) {
  ResolvedGraph r;
  std::set<std::string> seen;
  for (const auto& n : g.nodes) {
    if (!seen.insert(n.id).second)
      diags.push_back({"DuplicateNode", n.id, "node id declared twice"});
  }
  for (const auto& [u, v] : g.edges) {
    if (!g.find(u)) diags.push_back({"UnknownEdgeEndpoint", u, "edge source not declared"});
    if (!g.find(v)) diags.push_back({"UnknownEdgeEndpoint", v, "edge target not declared"});
  }
  if (!diags.empty()) return r;

  try {
    r.order = topo_order(g);
  } catch (const CycleDetected&) {
    diags.push_back({"CycleDetected", "", "graph contains a directed cycle"});
    return r;
  }

  std::set<std::string> has_child;
  for (const auto& [u, v] : g.edges) has_child.insert(u);

  for (const auto& id : r.order) {
    const NodeDecl* decl = g.find(id);
    auto parents = g.parents_of(id);
    ResolvedNode rn;
    if (decl->is_input) {
      if (!parents.empty())
        diags.push_back({"InputHasParents", id, "input node has incoming edges"});
      if (decl->input_dim < 1)
        diags.push_back({"BadDim", id, "input node dimension must be >= 1"});
      rn.is_input = true;
      rn.in_dim = 0;
      rn.out_dim = decl->input_dim;
      r.nodes[id] = std::move(rn);
      continue;
    }
    if (parents.empty()) {
      diags.push_back({"GateWithoutParents", id, "computation node has no parents"});
      continue;
    }
    std::int64_t m_in = 0;
    bool parents_ok = true;
    for (const auto& p : parents) {
      auto it = r.nodes.find(p);
      if (it == r.nodes.end()) {
        parents_ok = false;
        break;
      }
      m_in += it->second.out_dim;
    }
    if (!parents_ok) continue;
    GateSpec spec;
    try {
      spec = catalog.lookup(decl->gate, decl->hyperparams);
    } catch (const Error& e) {
      diags.push_back({"GateInstantiation", id, e.what()});
      continue;
    }
    if (spec.input_dim < 1 || m_in % spec.input_dim != 0) {
      diags.push_back({"DimMismatch", id,
                       "parent state dimension " + std::to_string(m_in) +
                           " is not a multiple of gate input dimension " +
                           std::to_string(spec.input_dim)});
      continue;
    }
    rn.copies = m_in / spec.input_dim;
    rn.in_dim = m_in;
    rn.out_dim = rn.copies * spec.output_dim;
    rn.gate = std::move(spec);
    r.nodes[id] = std::move(rn);
  }
  if (!diags.empty()) return r;

  for (const auto& id : r.order) {
    if (!has_child.count(id)) {
      r.outputs.push_back(id);
      r.m_out += r.nodes.at(id).out_dim;
    }
  }

  // Lifting channel: rows = total input-node coordinates, cols = d_in.
  std::int64_t in_coords = 0;
  for (const auto& n : g.nodes)
    if (n.is_input) in_coords += n.input_dim;
  if (in_coords == 0) diags.push_back({"NoInputs", "", "graph has no input nodes"});
  if (g.lifting.empty()) {
    if (in_coords != g.d_in && in_coords != 0)
      diags.push_back({"LiftingShape", "",
                       "identity lifting requires total input coordinates == d_in"});
  } else {
    if (static_cast<std::int64_t>(g.lifting.size()) != in_coords)
      diags.push_back({"LiftingShape", "", "lifting row count != input coordinates"});
    for (const auto& row : g.lifting) {
      if (static_cast<std::int64_t>(row.size()) != g.d_in) {
        diags.push_back({"LiftingShape", "", "lifting column count != d_in"});
        break;
      }
      for (int x : row)
        if (x != 0 && x != 1) {
          diags.push_back({"LiftingEntry", "", "lifting entries must be 0 or 1"});
          break;
        }
    }
  }
  if (g.d_in < 1) diags.push_back({"BadDim", "", "d_in must be >= 1"});
  if (g.d_out < 1) diags.push_back({"BadDim", "", "d_out must be >= 1"});
  if (g.readout.rows < 1)
    diags.push_back({"BadReadout", "", "readout rows must be >= 1"});
  else if (r.m_out % g.readout.rows != 0)
    diags.push_back({"BadReadout", "", "readout rows must divide the output dimension"});
  return r;
}

}  // namespace

std::vector<Diagnostic> validate(const ArchGraph& g, const GateCatalog& catalog) {
  std::vector<Diagnostic> diags;
  resolve_impl(g, catalog, diags);
  return diags;
}

ResolvedGraph resolve(const ArchGraph& g, const GateCatalog& catalog) {
  std::vector<Diagnostic> diags;
  ResolvedGraph r = resolve_impl(g, catalog, diags);
  if (!diags.empty())
    throw Error("invalid graph: [" + diags.front().code + "] " +
                (diags.front().node.empty() ? "" : diags.front().node + ": ") +
                diags.front().message);
  return r;
}

BigInt param_count(const ArchGraph& g, const GateCatalog& catalog) {
  ResolvedGraph r = resolve(g, catalog);
  BigInt p = 0;
  std::set<std::string> counted_groups;
  for (const auto& id : r.order) {
    const ResolvedNode& rn = r.nodes.at(id);
    if (rn.is_input) continue;
    const NodeDecl* decl = g.find(id);
    if (!decl->param_group.empty()) {
      if (!counted_groups.insert(decl->param_group).second) continue;
    }
    p += rn.gate.param_count;
  }
  // Readout block: weights shared across rows, optional bias.
  BigInt weight_cols = BigInt(r.m_out) / g.readout.rows;
  p += BigInt(g.d_out) * weight_cols + (g.readout.bias ? BigInt(g.d_out) : 0);
  return p;
}

ArchGraph build_mlp(const std::vector<std::int64_t>& widths,
                    const std::vector<std::string>& activations,
                    const GateCatalog& catalog) {
  if (widths.size() < 2) throw BadWidths("build_mlp: need at least (d_in, d_out)");
  if (activations.size() + 2 != widths.size())
    throw BadWidths("build_mlp: expected " + std::to_string(widths.size() - 2) +
                    " activations, got " + std::to_string(activations.size()));
  for (auto w : widths)
    if (w < 1) throw BadWidths("build_mlp: widths must be >= 1");
  for (const auto& a : activations)
    if (!catalog.contains(a)) throw UnknownGate(a);

  ArchGraph g;
  g.d_in = widths.front();
  g.d_out = widths.back();
  g.readout.rows = 1;
  g.readout.bias = true;
  g.add_input("in", widths.front());
  std::string prev = "in";
  for (std::size_t l = 0; l + 2 < widths.size(); ++l) {
    std::string aff = "affine" + std::to_string(l + 1);
    g.add_gate(aff, "affine",
               Json{{"in_dim", widths[l]}, {"out_dim", widths[l + 1]}}, {prev});
    std::string act = "act" + std::to_string(l + 1);
    g.add_gate(act, activations[l], Json::object(), {aff});
    prev = act;
  }
  // The final affine layer is the (bias-carrying) readout block.
  return g;
}

BigInt mlp_param_formula(const std::vector<std::int64_t>& widths) {
  BigInt p = 0;
  for (std::size_t l = 0; l + 1 < widths.size(); ++l)
    p += BigInt(widths[l + 1]) * (BigInt(widths[l]) + 1);
  return p;
}

BigInt transformer_param_formula(const TransformerConfig& cfg) {
  BigInt p = BigInt(cfg.vocab) * cfg.d0;
  std::int64_t d_prev = cfg.d0;
  for (std::int64_t l = 0; l < cfg.num_layers; ++l) {
    BigInt h = cfg.heads[l], dl = cfg.d_model[l], dk = cfg.d_k[l],
           dv = cfg.d_v[l], dff = cfg.d_ff[l];
    p += h * d_prev * (2 * dk + dv) + h * dv * dl + BigInt(d_prev) * dl +
         dff * (2 * dl + 1) + dl;
    d_prev = cfg.d_model[l];
  }
  p += BigInt(cfg.d_out) * (d_prev + 1);
  return p;
}

ArchGraph build_transformer(const TransformerConfig& cfg, const GateCatalog& catalog) {
  auto check_vec = [&](const std::vector<std::int64_t>& v, const char* name) {
    if (static_cast<std::int64_t>(v.size()) != cfg.num_layers)
      throw BadConfig(std::string("build_transformer: ") + name +
                      " must have one entry per layer");
    for (auto x : v)
      if (x < 1) throw BadConfig(std::string("build_transformer: ") + name + " entries must be >= 1");
  };
  if (cfg.vocab < 1 || cfg.d0 < 1 || cfg.seq_len < 1 || cfg.d_out < 1 ||
      cfg.num_layers < 0)
    throw BadConfig("build_transformer: all dimensions must be >= 1");
  if (cfg.lambda <= 0 || cfg.epsilon <= 0)
    throw BadConfig("build_transformer: lambda and epsilon must be > 0");
  if (cfg.d0 % 2 != 0)
    throw BadConfig("build_transformer: d0 must be even (sine/cosine PE pairs)");
  check_vec(cfg.heads, "heads");
  check_vec(cfg.d_model, "d_model");
  check_vec(cfg.d_k, "d_k");
  check_vec(cfg.d_v, "d_v");
  check_vec(cfg.d_ff, "d_ff");
  if (!catalog.contains(cfg.activation)) throw UnknownGate(cfg.activation);
  if (cfg.pe_trainable_freq && !cfg.pe_bounded_param_domain)
    throw UnboundedPE(
        "build_transformer: trainable PE frequencies require a bounded parameter domain");

  ArchGraph g;
  g.d_in = cfg.seq_len;  // token index per position
  g.d_out = cfg.d_out;
  g.readout.rows = cfg.seq_len;
  g.readout.bias = true;
  g.add_input("tokens", cfg.seq_len);
  g.add_gate("emb", "embedding", Json{{"vocab", cfg.vocab}, {"dim", cfg.d0}},
             {"tokens"});
  Json pe_hyper{{"num_freq", cfg.d0 / 2},
                {"domain", cfg.pe_domain},
                {"trainable_freq", cfg.pe_trainable_freq},
                {"bounded_param_domain", cfg.pe_bounded_param_domain}};
  g.add_gate("pe", "fourier_pe", pe_hyper, {"tokens"});
  g.add_gate("z0", "residual_add", Json{{"dim", cfg.seq_len * cfg.d0}},
             {"emb", "pe"});

  std::string prev = "z0";
  std::int64_t d_prev = cfg.d0;
  for (std::int64_t l = 0; l < cfg.num_layers; ++l) {
    std::string tag = std::to_string(l + 1);
    std::int64_t dl = cfg.d_model[l];
    g.add_gate("attn" + tag, "multihead_attention",
               Json{{"seq_len", cfg.seq_len},
                    {"d_in", d_prev},
                    {"heads", cfg.heads[l]},
                    {"d_k", cfg.d_k[l]},
                    {"d_v", cfg.d_v[l]},
                    {"d_out", dl}},
               {prev});
    g.add_gate("proj" + tag, "affine",
               Json{{"in_dim", d_prev}, {"out_dim", dl}, {"bias", false}}, {prev});
    g.add_gate("res_attn" + tag, "residual_add", Json{{"dim", cfg.seq_len * dl}},
               {"proj" + tag, "attn" + tag});
    g.add_gate("norm1_" + tag, "layer_norm", Json{{"dim", dl}}, {"res_attn" + tag});
    g.add_gate("ff1_" + tag, "affine", Json{{"in_dim", dl}, {"out_dim", cfg.d_ff[l]}},
               {"norm1_" + tag});
    g.add_gate("ffact" + tag, cfg.activation, Json::object(), {"ff1_" + tag});
    g.add_gate("ff2_" + tag, "affine", Json{{"in_dim", cfg.d_ff[l]}, {"out_dim", dl}},
               {"ffact" + tag});
    g.add_gate("res_ff" + tag, "residual_add", Json{{"dim", cfg.seq_len * dl}},
               {"norm1_" + tag, "ff2_" + tag});
    g.add_gate("norm2_" + tag, "layer_norm", Json{{"dim", dl}}, {"res_ff" + tag});
    prev = "norm2_" + tag;
    d_prev = dl;
  }
  return g;
}

ArchGraph parse_spec(const Json& doc) {
  auto require = [&](const Json& j, const char* field) -> const Json& {
    if (!j.contains(field))
      throw ParseError(std::string("missing field: ") + field);
    return j.at(field);
  };
  ArchGraph g;
  try {
    g.version = require(doc, "version").get<std::int64_t>();
    g.d_in = require(doc, "d_in").get<std::int64_t>();
    g.d_out = require(doc, "d_out").get<std::int64_t>();
    for (const auto& jn : require(doc, "nodes")) {
      NodeDecl n;
      n.id = require(jn, "id").get<std::string>();
      std::string kind = require(jn, "kind").get<std::string>();
      if (kind == "input") {
        n.is_input = true;
        n.input_dim = require(jn, "dim").get<std::int64_t>();
      } else if (kind == "gate") {
        n.gate = require(jn, "gate").get<std::string>();
        if (jn.contains("hyperparams")) n.hyperparams = jn.at("hyperparams");
        if (jn.contains("param_group"))
          n.param_group = jn.at("param_group").get<std::string>();
        if (!default_catalog().contains(n.gate))
          throw ParseError("node '" + n.id + "': unknown gate '" + n.gate + "'");
      } else {
        throw ParseError("node '" + n.id + "': kind must be input|gate");
      }
      g.nodes.push_back(std::move(n));
    }
    for (const auto& je : require(doc, "edges")) {
      if (!je.is_array() || je.size() != 2)
        throw ParseError("edges must be [source, target] pairs");
      g.edges.emplace_back(je.at(0).get<std::string>(), je.at(1).get<std::string>());
    }
    if (doc.contains("lifting") && !doc.at("lifting").is_null()) {
      for (const auto& row : doc.at("lifting"))
        g.lifting.push_back(row.get<std::vector<int>>());
    }
    if (doc.contains("readout")) {
      const Json& jr = doc.at("readout");
      if (jr.contains("rows")) g.readout.rows = jr.at("rows").get<std::int64_t>();
      if (jr.contains("bias")) g.readout.bias = jr.at("bias").get<bool>();
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed architecture document: ") + e.what());
  }
  return g;
}

ArchGraph parse_spec_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  return parse_spec(doc);
}

Json emit_spec(const ArchGraph& g) {
  Json doc;
  doc["version"] = g.version;
  doc["d_in"] = g.d_in;
  doc["d_out"] = g.d_out;
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    Json jn;
    jn["id"] = n.id;
    if (n.is_input) {
      jn["kind"] = "input";
      jn["dim"] = n.input_dim;
    } else {
      jn["kind"] = "gate";
      jn["gate"] = n.gate;
      if (!n.hyperparams.empty()) jn["hyperparams"] = n.hyperparams;
      if (!n.param_group.empty()) jn["param_group"] = n.param_group;
    }
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  doc["edges"] = std::move(edges);
  doc["lifting"] = g.lifting.empty() ? Json() : Json(g.lifting);
  doc["readout"] = Json{{"rows", g.readout.rows}, {"bias", g.readout.bias}};
  return doc;
}

}  // namespace tamecheck
