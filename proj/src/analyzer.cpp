#include "tamecheck/analyzer.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "tamecheck/errors.hpp"

namespace tamecheck {

std::pair<DefinabilityClass, bool> check_definability(const ArchGraph& g,
                                                      const GateCatalog& catalog) {
  ResolvedGraph r = resolve(g, catalog);
  // Lifting and readout are linear, hence semi-algebraic.
  DefinabilityClass acc = DefinabilityClass::SemiAlgebraic;
  for (const auto& id : r.order) {
    const ResolvedNode& rn = r.nodes.at(id);
    if (!rn.is_input) acc = join(acc, rn.gate.cls);
  }
  return {acc, acc != DefinabilityClass::NotDefinable};
}

namespace {

// Per-node chain bookkeeping: which gate nodes contribute chain functions to
// the value at this node, and how many each contributes.  Shared ancestors
// in a DAG are counted once.
using ChainContrib = std::map<std::string, BigInt>;

ChainContrib merge_contribs(const std::vector<const ChainContrib*>& parts) {
  ChainContrib out;
  for (const ChainContrib* part : parts)
    for (const auto& [id, q] : *part) out[id] = q;  // identical per id
  return out;
}

BigInt total_q(const ChainContrib& c) {
  BigInt q = 0;
  for (const auto& [id, qi] : c) q += qi;
  return q;
}

}  // namespace

std::map<std::string, PfaffFormat> propagate_formats(const ArchGraph& g,
                                                     const GateCatalog& catalog) {
  ResolvedGraph r = resolve(g, catalog);
  std::map<std::string, PfaffFormat> fmts;
  std::map<std::string, ChainContrib> contribs;

  for (const auto& id : r.order) {
    const ResolvedNode& rn = r.nodes.at(id);
    if (rn.is_input) {
      fmts[id] = PfaffFormat{0, 0, 1};
      contribs[id] = {};
      continue;
    }
    if (!rn.gate.format) throw NoFormatAvailable(id);
    const PfaffFormat& gf = *rn.gate.format;

    std::vector<const ChainContrib*> parent_contribs;
    BigInt inner_D = 0, m = 0;
    for (const auto& p : g.parents_of(id)) {
      const PfaffFormat& pf = fmts.at(p);
      if (pf.d < 1)
        throw DegenerateInnerDegree(
            "format propagation: constant-valued parent '" + p +
            "' blocks the composition bound");
      inner_D = std::max(inner_D, pf.D);
      m = std::max(m, pf.d);
      parent_contribs.push_back(&contribs.at(p));
    }
    ChainContrib c = merge_contribs(parent_contribs);
    // Each componentwise application of the gate appends its own chain copy.
    c[id] = gf.q * rn.copies;
    PfaffFormat f;
    f.q = total_q(c);
    f.D = inner_D + (gf.D + 1) * m - 1;
    f.d = gf.d * m;
    fmts[id] = f;
    contribs[id] = std::move(c);
  }
  return fmts;
}

PfaffFormat simplified_format(std::int64_t layers, const BigInt& q,
                              const BigInt& D, const BigInt& d) {
  if (layers < 1) throw InvalidFormat("simplified_format: layers must be >= 1");
  if (d < 1) throw InvalidFormat("simplified_format: gate degree must be >= 1");
  unsigned long L = static_cast<unsigned long>(layers);
  return PfaffFormat{q, (D + 1) * layers * ipow(d, L - 1), ipow(d, L)};
}

AnalysisReport analyze(const ArchGraph& g, const std::string& loss,
                       const GateCatalog& catalog) {
  ResolvedGraph r = resolve(g, catalog);
  AnalysisReport rep;
  auto [cls, ok] = check_definability(g, catalog);
  rep.structure = cls;
  rep.definable = ok;
  rep.param_count = param_count(g, catalog);

  for (const auto& id : r.order) {
    const ResolvedNode& rn = r.nodes.at(id);
    if (rn.is_input) continue;
    for (const auto& note : rn.gate.notes)
      rep.obligations.push_back(id + ": " + note);
  }

  try {
    rep.per_node_formats = propagate_formats(g, catalog);
    // Net format over the (childless) output nodes: the linear readout does
    // not change the format.  Shared chains across outputs counted via the
    // per-node recursion's worst output plus the union of distinct chains:
    // conservative componentwise max with the summed distinct chain length.
    BigInt q = 0, D = 0, d = 1;
    {
      // Re-run the contribution union for the outputs only.
      std::map<std::string, BigInt> chain;
      for (const auto& out : r.outputs) {
        const PfaffFormat& f = rep.per_node_formats.at(out);
        D = std::max(D, f.D);
        d = std::max(d, f.d);
      }
      // Distinct-chain union: the single-output case (the common one) is
      // exact; multi-output sums each output's chain length once per node
      // by replaying the recursion.
      std::map<std::string, ChainContrib> contribs;
      for (const auto& id : r.order) {
        const ResolvedNode& rn = r.nodes.at(id);
        if (rn.is_input) {
          contribs[id] = {};
          continue;
        }
        std::vector<const ChainContrib*> parts;
        for (const auto& p : g.parents_of(id)) parts.push_back(&contribs.at(p));
        ChainContrib c = merge_contribs(parts);
        c[id] = rn.gate.format->q * rn.copies;
        contribs[id] = std::move(c);
      }
      std::vector<const ChainContrib*> parts;
      for (const auto& out : r.outputs) parts.push_back(&contribs.at(out));
      q = total_q(merge_contribs(parts));
    }
    rep.net_format = PfaffFormat{q, D, d};
    rep.provenance.push_back("net format over output nodes " +
                             rep.net_format->str() +
                             " (linear readout leaves the format unchanged)");
  } catch (const NoFormatAvailable& e) {
    rep.net_format.reset();
    rep.per_node_formats.clear();
    rep.format_block_reason = e.what();
    rep.provenance.push_back(
        std::string(e.what()) +
        "; report degraded to the qualitative verdict (finite but "
        "unquantified component constant)");
  }

  if (!loss.empty()) {
    GateSpec ls = catalog.loss_lookup(loss);
    rep.structure = join(rep.structure, ls.cls);
    rep.definable = rep.structure != DefinabilityClass::NotDefinable;
    if (ls.format && rep.net_format) {
      PfaffFormat target{0, 0, 1};  // the label is a fresh input
      rep.net_format = fmt_compose(*ls.format, {*rep.net_format, target});
      rep.provenance.push_back("loss '" + loss +
                               "' appended as a final gate: net format " +
                               rep.net_format->str());
    } else if (!ls.format) {
      rep.obligations.push_back("loss '" + loss +
                                "': no Pfaffian format; handled by the "
                                "classification planner or left qualitative");
    }
  }

  rep.finite_sample_complexity = rep.definable;
  return rep;
}

std::string spec_hash(const ArchGraph& g) {
  const std::string text = emit_spec(g).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {
Json fmt_json(const PfaffFormat& f) {
  return Json{{"q", f.q.str()}, {"D", f.D.str()}, {"d", f.d.str()}};
}
}  // namespace

Json report_to_json(const AnalysisReport& rep, const ArchGraph& g) {
  Json doc;
  doc["report_version"] = 1;
  doc["spec_hash"] = spec_hash(g);
  doc["structure"] = class_name(rep.structure);
  doc["definable"] = rep.definable;
  doc["finite_sample_complexity"] = rep.finite_sample_complexity;
  doc["param_count"] = rep.param_count.str();
  if (rep.net_format) {
    doc["net_format"] = fmt_json(*rep.net_format);
  } else {
    doc["net_format"] = nullptr;
    doc["qualitative_only"] = true;
    doc["format_block_reason"] = rep.format_block_reason;
    doc["component_constant"] = "finite, unquantified";
  }
  Json per_node = Json::object();
  for (const auto& [id, f] : rep.per_node_formats) per_node[id] = fmt_json(f);
  doc["per_node_formats"] = std::move(per_node);
  doc["obligations"] = rep.obligations;
  doc["provenance"] = rep.provenance;
  return doc;
}

}  // namespace tamecheck
