#include "tamecheck/format_algebra.hpp"

#include <algorithm>

#include "tamecheck/errors.hpp"

namespace tamecheck {

std::string PfaffFormat::str() const {
  return "(" + q.str() + "," + D.str() + "," + d.str() + ")";
}

PfaffFormat fmt_sum(const PfaffFormat& a, const PfaffFormat& b,
                    ChainMode mode) {
  BigInt q = mode == ChainMode::SharedChain ? std::max(a.q, b.q) : a.q + b.q;
  return {q, std::max(a.D, b.D), std::max(a.d, b.d)};
}

PfaffFormat fmt_product(const PfaffFormat& a, const PfaffFormat& b,
                        ChainMode mode) {
  BigInt q = mode == ChainMode::SharedChain ? std::max(a.q, b.q) : a.q + b.q;
  return {q, std::max(a.D, b.D), a.d + b.d};
}

PfaffFormat fmt_derivative(const PfaffFormat& a) {
  BigInt deg = a.D + a.d - 1;
  if (deg < 0) deg = 0;
  return {a.q, a.D, deg};
}

PfaffFormat fmt_chain_extend(const PfaffFormat& a) {
  return {a.q + 1, std::max(a.D, BigInt(a.D + a.d - 1)), a.d};
}

PfaffFormat fmt_compose(const PfaffFormat& outer,
                        std::span<const PfaffFormat> inners,
                        ChainMode inner_mode) {
  if (inners.empty()) return outer;
  BigInt inner_q = 0;
  BigInt inner_D = 0;
  BigInt m = 0;
  for (const PfaffFormat& f : inners) {
    if (f.d < 1) {
      throw DegenerateInnerDegree(
          "fmt_compose: inner format " + f.str() +
          " has degree 0; model the constant input as a frozen parameter");
    }
    if (inner_mode == ChainMode::SharedChain) {
      inner_q = std::max(inner_q, f.q);
    } else {
      inner_q += f.q;
    }
    inner_D = std::max(inner_D, f.D);
    m = std::max(m, f.d);
  }
  return {outer.q + inner_q, inner_D + (outer.D + 1) * m - 1, outer.d * m};
}

PfaffFormat fmt_compose(const PfaffFormat& outer,
                        std::initializer_list<PfaffFormat> inners,
                        ChainMode inner_mode) {
  return fmt_compose(outer, std::span<const PfaffFormat>(inners.begin(), inners.size()),
                     inner_mode);
}

PfaffFormat fmt_residual(const PfaffFormat& a) {
  return {a.q, a.D, std::max<BigInt>(a.d, 1)};
}

PfaffFormat fmt_affine_precompose(const PfaffFormat& a) { return a; }

PfaffFormat fmt_replicate(const PfaffFormat& a, unsigned long copies) {
  if (copies < 1) throw Error("fmt_replicate: copies must be >= 1");
  return {BigInt(copies) * a.q, a.D, a.d};
}

}  // namespace tamecheck
