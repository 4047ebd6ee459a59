#pragma once

#include <span>
#include <string>
#include <vector>

#include "tamecheck/numeric.hpp"

namespace tamecheck {

/// A Pfaffian format triple (q, D, d): chain length, chain degree, output
/// polynomial degree.  Every value produced by the algebra is an upper
/// bound, never an exact format; hence the *_bound naming of the operations.
struct PfaffFormat {
  BigInt q;  // chain length
  BigInt D;  // chain degree
  BigInt d;  // output polynomial degree

  bool operator==(const PfaffFormat&) const = default;

  // Componentwise partial order.
  bool dominated_by(const PfaffFormat& other) const {
    return q <= other.q && D <= other.D && d <= other.d;
  }

  bool is_constant() const { return d == 0; }

  std::string str() const;
};

// Chain-provenance assertion for the binary operations.  Disjoint is always
// sound; SharedChain requires the caller to know both operands are expressed
// over one common chain.
enum class ChainMode { Disjoint, SharedChain };

// f + g: (q_f+q_g, max{D_f,D_g}, max{d_f,d_g}); shared chain keeps max q.
PfaffFormat fmt_sum(const PfaffFormat& a, const PfaffFormat& b,
                    ChainMode mode = ChainMode::Disjoint);

// f * g: (q_f+q_g, max{D_f,D_g}, d_f+d_g); shared chain keeps max q.
PfaffFormat fmt_product(const PfaffFormat& a, const PfaffFormat& b,
                        ChainMode mode = ChainMode::Disjoint);

// d/dx of a format-(q,D,d) function: (q, D, max{0, D+d-1}).  The max-with-0
// guard covers the constant case.
PfaffFormat fmt_derivative(const PfaffFormat& a);

// Append the function to its own chain: (q+1, max{D, D+d-1}, d).
PfaffFormat fmt_chain_extend(const PfaffFormat& a);

// Composition outer(inner_1, ..., inner_n).  Every inner degree must be
// >= 1; constant inner functions must be modelled as frozen parameters
// instead (throws DegenerateInnerDegree).  With m = max inner d:
//   q = outer.q + sum of inner q  (counted once when inners share a chain),
//   D = maxInnerD + (outer.D + 1) * m - 1,
//   d = outer.d * m.
PfaffFormat fmt_compose(const PfaffFormat& outer,
                        std::span<const PfaffFormat> inners,
                        ChainMode inner_mode = ChainMode::Disjoint);
PfaffFormat fmt_compose(const PfaffFormat& outer,
                        std::initializer_list<PfaffFormat> inners,
                        ChainMode inner_mode = ChainMode::Disjoint);

// phi(x) + x, componentwise: (q, D, max{d, 1}).
PfaffFormat fmt_residual(const PfaffFormat& a);

// phi(A x + b): format unchanged.  Callers are responsible for recording
// the preimage-domain caveat in their report.
PfaffFormat fmt_affine_precompose(const PfaffFormat& a);

// Chain replication under point substitution: (copies * q, D, d).
PfaffFormat fmt_replicate(const PfaffFormat& a, unsigned long copies);

}  // namespace tamecheck
