#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tamecheck/numeric.hpp"

namespace tamecheck {

using LabJson = nlohmann::ordered_json;

/// A scalar-valued family f(x; theta) with finite, reproducible evaluation
/// grids.  Evaluators must be pure: probes may scan the grids in parallel.
struct ParametricFamily {
  std::string name;
  int input_dim = 1;
  int param_dim = 1;
  std::function<double(const std::vector<double>&, const std::vector<double>&)>
      evaluator;
  std::vector<std::vector<double>> input_grid;
  std::vector<std::vector<double>> param_grid;
};

struct ProbeResult {
  std::string kind;  // vc_lb | pdim_lb | components | roots
  std::int64_t value = 0;
  LabJson witness;
  std::string instance;
};

// Deterministic grid/sampling helpers.
std::vector<double> linspace(double lo, double hi, int n);
std::vector<std::vector<double>> cartesian_grid(
    const std::vector<std::vector<double>>& axes);
// Uniform points in the box given by `ranges`, reproducible from the seed.
std::vector<std::vector<double>> random_points(
    const std::vector<std::pair<double, double>>& ranges, int count,
    std::uint64_t seed);

// Shipped families for the verification suite.
ParametricFamily make_affine_family(int grid_points = 15);
ParametricFamily make_sigmoid_neuron_family(int grid_points = 15);
ParametricFamily make_two_layer_sigmoid_family(int input_points = 15,
                                               int param_samples = 300,
                                               std::uint64_t seed = 7);
ParametricFamily make_constant_family(double c, int grid_points = 15);

// Largest d <= max_d such that some d-subset of the input grid is
// pseudo-shattered (strict '>') with thresholds drawn from midpoints of the
// evaluated values.  The threshold search is capped per level, so the result
// is a lower bound; the returned witness replays exactly.  budget = 0 picks
// the default enumeration guard.  Throws GridTooLarge when the enumeration
// would exceed the budget.
ProbeResult pdim_lower_bound(const ParametricFamily& fam, int max_d,
                             std::uint64_t budget = 0);

// Same search with all thresholds fixed at 0 (the I_(0,inf) classifier
// family).
ProbeResult vc_lower_bound(const ParametricFamily& fam, int max_d,
                           std::uint64_t budget = 0);

// Re-evaluate a witness; true iff it reproduces the claimed shattering.
bool replay_shatter_witness(const ParametricFamily& fam, const LabJson& witness);

// Number of maximal runs of grid points with f(x; theta) <= 0 (a lower
// bound on the sublevel component count).  resolution = 0 uses the family's
// own input grid.
ProbeResult sign_components_1d(const ParametricFamily& fam,
                               const std::vector<double>& theta,
                               int resolution = 0);

// Exact count of distinct real roots via a Sturm sequence; coefficients low
// to high.  Throws ZeroPolynomial.
std::int64_t poly_roots_count(const std::vector<BigRat>& coeffs);

// Sign-change root counting for a + b x + c e^x on [lo, hi]; a lower bound
// on the true root count.
std::int64_t exp_linear_roots_lb(double a, double b, double c, double lo,
                                 double hi, int resolution);

struct VerifyCheck {
  std::string name;
  BigInt oracle;  // empirical lower bound
  BigInt bound;   // symbolic upper bound
  std::string detail;
};

struct VerifySummary {
  bool ok = true;
  bool vacuous = false;
  std::vector<std::string> violations;
  std::vector<VerifyCheck> checks;

  LabJson to_json() const;
};

// Asserts oracle <= bound for every check; violations are reported, never
// thrown.  An empty list passes vacuously with a warning.
VerifySummary verify_suite(const std::vector<VerifyCheck>& checks);

// The shipped oracle-vs-bound instances (the acceptance gate).
std::vector<VerifyCheck> default_suite(std::uint64_t seed, int max_d = 3);

}  // namespace tamecheck
