#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamecheck/arch_graph.hpp"
#include "tamecheck/definability.hpp"
#include "tamecheck/format_algebra.hpp"

namespace tamecheck {

struct AnalysisReport {
  DefinabilityClass structure = DefinabilityClass::SemiAlgebraic;
  bool definable = true;
  bool finite_sample_complexity = true;
  std::optional<PfaffFormat> net_format;
  std::map<std::string, PfaffFormat> per_node_formats;
  std::vector<std::string> obligations;  // declared assumptions (DEQ, PE, ...)
  std::vector<std::string> provenance;   // derivation trail
  BigInt param_count = 0;
  std::string format_block_reason;  // set when the Pfaffian route is blocked
};

// Qualitative pass: join of every gate class plus SemiAlgebraic for the
// lifting and readout; verdict = (class != NotDefinable).
std::pair<DefinabilityClass, bool> check_definability(
    const ArchGraph& g, const GateCatalog& catalog = default_catalog());

// Quantitative pass: per-node format bounds by composing each gate's
// catalog format with its parents', inputs fixed at (0,0,1).  Chain lengths
// of shared ancestors are counted once.  Throws NoFormatAvailable at the
// first (topological) gate without a catalog format.
std::map<std::string, PfaffFormat> propagate_formats(
    const ArchGraph& g, const GateCatalog& catalog = default_catalog());

// Closed-form bound for an L-layer network whose gates have total chain
// length q, per-layer chain degree at most D, and gate degree at most d:
// (q, (D+1)*L*d^(L-1), d^L).
PfaffFormat simplified_format(std::int64_t layers, const BigInt& q,
                              const BigInt& D, const BigInt& d);

// Both passes over a validated graph.  A blocked Pfaffian route degrades
// the report to qualitative-only; an optional Pfaffian loss is appended as
// a final gate before the net format is reported.
AnalysisReport analyze(const ArchGraph& g,
                       const std::string& loss = "",
                       const GateCatalog& catalog = default_catalog());

// Report document with a content hash of the input spec.
Json report_to_json(const AnalysisReport& report, const ArchGraph& g);

// FNV-1a over the compact spec serialization; hex string.
std::string spec_hash(const ArchGraph& g);

}  // namespace tamecheck
