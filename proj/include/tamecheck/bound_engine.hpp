#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tamecheck/format_algebra.hpp"
#include "tamecheck/numeric.hpp"

namespace tamecheck {

struct BoundReport {
  int B_log2_ceil = 0;
  BigInt pdim_bound = 0;
  BigInt khovanskii_M = 0;
  // Echo of the inputs (p, q, D, d).
  BigInt p, q, D, d;

  nlohmann::ordered_json to_json() const;
};

struct SamplePlan {
  double epsilon = 0;
  double delta = 0;
  double C = 1;
  BigInt K = 0;
  BigInt N = 0;
  std::string mode;  // classification | regression
  std::string caveat =
      "C is a universal but unquantified constant; this plan uses the "
      "configured knob value";

  nlohmann::ordered_json to_json() const;
};

// Khovanskii's bound on nondegenerate solutions of a system of n polynomial
// equations of degrees d_1..d_n over a Pfaffian chain of length q and
// degree D:
//   M = 2^{q(q-1)/2} * prod d_i * (min(n,q) D + sum d_i - n + 1)^q.
BigInt khovanskii_count(std::int64_t n, std::int64_t q, const BigInt& D,
                        const std::vector<BigInt>& degrees);

// Worst-case connected-component bound for the km_vc_bound route:
//   B = 2^{pq(pq-1)/2} * d^p * (p(D+d-1)+1)^p * ((p+1)(p(D+d-1)+1))^{pq}.
BigInt component_bound_B(const BigInt& p, const BigInt& q, const BigInt& D,
                         const BigInt& d);

// Karpinski-Macintyre VC bound: 2*ceil_log2(B) + (16 + 2*ceil_log2(s))*p.
BigInt km_vc_bound(const BigInt& p, const BigInt& s, const BigInt& B);

// Pseudo-dimension bound for a network of format fmt with p parameters,
// via the exact component bound B (never the lossy expanded display).
BoundReport pnn_pdim_bound(const PfaffFormat& fmt, const BigInt& p);

// N = ceil(C * (K + ln(1/delta)) / epsilon^2).
SamplePlan sample_size_classification(const BigInt& K, double epsilon,
                                      double delta, double C = 1.0);

// N = ceil(C * (K * ln^2(K/epsilon) + ln(1/delta)) / epsilon^2);
// requires K/epsilon > 1.
SamplePlan sample_size_regression(const BigInt& K, double epsilon,
                                  double delta, double C = 1.0);

}  // namespace tamecheck
