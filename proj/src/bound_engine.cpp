#include "tamecheck/bound_engine.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tamecheck/errors.hpp"

namespace tamecheck {

namespace {

unsigned long to_exponent(const BigInt& e, const char* what) {
  if (e < 0) throw InvalidFormat(std::string(what) + ": negative exponent");
  if (e > 1000000) throw InvalidFormat(std::string(what) + ": exponent too large");
  return e.convert_to<unsigned long>();
}

}  // namespace

BigInt khovanskii_count(std::int64_t n, std::int64_t q, const BigInt& D,
                        const std::vector<BigInt>& degrees) {
  if (n < 1) throw InvalidFormat("khovanskii_count: n must be >= 1");
  if (q < 0 || D < 0) throw InvalidFormat("khovanskii_count: q, D must be >= 0");
  if (static_cast<std::int64_t>(degrees.size()) != n)
    throw InvalidFormat("khovanskii_count: need one degree per equation");
  BigInt prod = 1, sum = 0;
  for (const BigInt& d : degrees) {
    if (d < 0) throw InvalidFormat("khovanskii_count: negative degree");
    prod *= d;
    sum += d;
  }
  BigInt base = BigInt(std::min<std::int64_t>(n, q)) * D + sum - n + 1;
  if (base < 0)
    throw NegativeBase("khovanskii_count: min(n,q)D + sum d_i - n + 1 < 0");
  BigInt two_part = ipow(2, to_exponent(BigInt(q) * (q - 1) / 2, "khovanskii_count"));
  return two_part * prod * ipow(base, static_cast<unsigned long>(q));
}

BigInt component_bound_B(const BigInt& p, const BigInt& q, const BigInt& D,
                         const BigInt& d) {
  if (p < 1) throw InvalidFormat("component_bound_B: p must be >= 1");
  if (q < 0 || D < 0 || d < 0)
    throw InvalidFormat("component_bound_B: q, D, d must be >= 0");
  if (q >= 1 && d < 1)
    throw InvalidFormat("component_bound_B: d must be >= 1 when q >= 1");
  BigInt pq = p * q;
  BigInt t = p * (D + d - 1) + 1;
  if (t < 1) throw InvalidFormat("component_bound_B: p(D+d-1)+1 must be >= 1");
  unsigned long ep = to_exponent(p, "component_bound_B");
  unsigned long epq = to_exponent(pq, "component_bound_B");
  return ipow(2, to_exponent(pq * (pq - 1) / 2, "component_bound_B")) *
         ipow(d, ep) * ipow(t, ep) * ipow((p + 1) * t, epq);
}

BigInt km_vc_bound(const BigInt& p, const BigInt& s, const BigInt& B) {
  if (p < 1) throw InvalidFormat("km_vc_bound: p must be >= 1");
  if (s < 1) throw InvalidFormat("km_vc_bound: s must be >= 1");
  if (B < 1) throw NonPositive("km_vc_bound: B must be >= 1");
  return 2 * ceil_log2(B) + (16 + 2 * ceil_log2(s)) * p;
}

BoundReport pnn_pdim_bound(const PfaffFormat& fmt, const BigInt& p) {
  BoundReport rep;
  rep.p = p;
  rep.q = fmt.q;
  rep.D = fmt.D;
  rep.d = fmt.d;
  BigInt B = component_bound_B(p, fmt.q, fmt.D, fmt.d);
  rep.B_log2_ceil = ceil_log2(B);
  rep.pdim_bound = km_vc_bound(p, 1, B);
  return rep;
}

namespace {

void check_plan_range(const BigInt& K, double epsilon, double delta, double C) {
  if (K < 1) throw BadRange("sample planner: K must be >= 1");
  if (!(epsilon > 0) || epsilon > 1)
    throw BadRange("sample planner: epsilon must lie in (0, 1]");
  if (!(delta > 0) || delta > 1)
    throw BadRange("sample planner: delta must lie in (0, 1]");
  if (!(C > 0)) throw BadRange("sample planner: C must be > 0");
}

BigInt ceil_to_int(const HighFloat& v) {
  return boost::multiprecision::ceil(v).convert_to<BigInt>();
}

}  // namespace

SamplePlan sample_size_classification(const BigInt& K, double epsilon,
                                      double delta, double C) {
  check_plan_range(K, epsilon, delta, C);
  HighFloat Kf(K), eps(epsilon), del(delta), Cf(C);
  HighFloat val = Cf * (Kf + log(1 / del)) / (eps * eps);
  SamplePlan plan;
  plan.epsilon = epsilon;
  plan.delta = delta;
  plan.C = C;
  plan.K = K;
  plan.N = ceil_to_int(val);
  if (plan.N < 1) plan.N = 1;
  plan.mode = "classification";
  return plan;
}

SamplePlan sample_size_regression(const BigInt& K, double epsilon, double delta,
                                  double C) {
  check_plan_range(K, epsilon, delta, C);
  HighFloat Kf(K), eps(epsilon), del(delta), Cf(C);
  if (Kf / eps <= 1)
    throw DegenerateLog("sample_size_regression: requires K/epsilon > 1");
  HighFloat lg = log(Kf / eps);
  HighFloat val = Cf * (Kf * lg * lg + log(1 / del)) / (eps * eps);
  SamplePlan plan;
  plan.epsilon = epsilon;
  plan.delta = delta;
  plan.C = C;
  plan.K = K;
  plan.N = ceil_to_int(val);
  if (plan.N < 1) plan.N = 1;
  plan.mode = "regression";
  return plan;
}

nlohmann::ordered_json BoundReport::to_json() const {
  return nlohmann::ordered_json{
      {"B_log2_ceil", B_log2_ceil},
      {"pdim_bound", pdim_bound.str()},
      {"inputs",
       {{"p", p.str()}, {"q", q.str()}, {"D", D.str()}, {"d", d.str()}}},
  };
}

nlohmann::ordered_json SamplePlan::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode;
  j["K"] = K.str();
  j["epsilon"] = epsilon;
  j["delta"] = delta;
  j["C"] = C;
  j["N"] = N.str();
  j["formula"] = mode == "classification"
                     ? "N = ceil(C * (K + ln(1/delta)) / epsilon^2)"
                     : "N = ceil(C * (K * ln^2(K/epsilon) + ln(1/delta)) / epsilon^2)";
  j["caveat"] = caveat;
  return j;
}

}  // namespace tamecheck
