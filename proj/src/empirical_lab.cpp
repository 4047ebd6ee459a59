#include "tamecheck/empirical_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tamecheck/bound_engine.hpp"
#include "tamecheck/errors.hpp"
#include "tamecheck/format_algebra.hpp"

namespace tamecheck {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  if (n == 1) return {lo};
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
  return out;
}

std::vector<std::vector<double>> cartesian_grid(
    const std::vector<std::vector<double>>& axes) {
  std::vector<std::vector<double>> out{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<double>> next;
    next.reserve(out.size() * axis.size());
    for (const auto& prefix : out)
      for (double v : axis) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

// Uniform double in [0, 1) straight from the generator words, so results do
// not depend on the standard library's distribution implementation.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(gen);
}

}  // namespace

std::vector<std::vector<double>> random_points(
    const std::vector<std::pair<double, double>>& ranges, int count,
    std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<double> p;
    p.reserve(ranges.size());
    for (const auto& [lo, hi] : ranges) p.push_back(uniform_in(gen, lo, hi));
    out.push_back(std::move(p));
  }
  return out;
}

ParametricFamily make_affine_family(int grid_points) {
  ParametricFamily fam;
  fam.name = "affine_1d";
  fam.input_dim = 1;
  fam.param_dim = 2;
  fam.evaluator = [](const std::vector<double>& x, const std::vector<double>& t) {
    return t[0] * x[0] + t[1];
  };
  fam.input_grid = cartesian_grid({linspace(-1, 1, grid_points)});
  fam.param_grid = cartesian_grid(
      {linspace(-2, 2, grid_points), linspace(-2, 2, grid_points)});
  return fam;
}

ParametricFamily make_sigmoid_neuron_family(int grid_points) {
  ParametricFamily fam;
  fam.name = "sigmoid_neuron";
  fam.input_dim = 1;
  fam.param_dim = 2;
  fam.evaluator = [](const std::vector<double>& x, const std::vector<double>& t) {
    return 1.0 / (1.0 + std::exp(-(t[0] * x[0] + t[1])));
  };
  fam.input_grid = cartesian_grid({linspace(-2, 2, grid_points)});
  fam.param_grid = cartesian_grid(
      {linspace(-6, 6, grid_points), linspace(-6, 6, grid_points)});
  return fam;
}

ParametricFamily make_two_layer_sigmoid_family(int input_points,
                                               int param_samples,
                                               std::uint64_t seed) {
  ParametricFamily fam;
  fam.name = "two_layer_sigmoid";
  fam.input_dim = 1;
  fam.param_dim = 5;
  fam.evaluator = [](const std::vector<double>& x, const std::vector<double>& t) {
    auto sig = [](double z) { return 1.0 / (1.0 + std::exp(-z)); };
    return t[2] * sig(t[0] * x[0]) + t[3] * sig(t[1] * x[0] + t[4]);
  };
  fam.input_grid = cartesian_grid({linspace(-2, 2, input_points)});
  fam.param_grid = random_points(
      {{-8, 8}, {-8, 8}, {-4, 4}, {-4, 4}, {-8, 8}}, param_samples, seed);
  return fam;
}

ParametricFamily make_constant_family(double c, int grid_points) {
  ParametricFamily fam;
  fam.name = "constant";
  fam.input_dim = 1;
  fam.param_dim = 1;
  fam.evaluator = [c](const std::vector<double>&, const std::vector<double>&) {
    return c;
  };
  fam.input_grid = cartesian_grid({linspace(-1, 1, grid_points)});
  fam.param_grid = {{0.0}};
  return fam;
}

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// Value matrix V[theta][x].
std::vector<std::vector<double>> value_matrix(const ParametricFamily& fam) {
  std::vector<std::vector<double>> v(fam.param_grid.size());
  for (std::size_t t = 0; t < fam.param_grid.size(); ++t) {
    v[t].reserve(fam.input_grid.size());
    for (const auto& x : fam.input_grid)
      v[t].push_back(fam.evaluator(x, fam.param_grid[t]));
  }
  return v;
}

bool next_combination(std::vector<int>& c, int n) {
  int d = static_cast<int>(c.size());
  for (int i = d - 1; i >= 0; --i) {
    if (c[i] < n - d + i) {
      ++c[i];
      for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Midpoints of consecutive distinct values — the finite sufficient threshold
// set — ordered center-outward, truncated to at most k entries.
std::vector<double> threshold_candidates(std::vector<double> values, int k) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<double> mids;
  mids.reserve(values.size());
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    mids.push_back((values[i] + values[i + 1]) / 2);
  if (mids.empty()) return {};
  std::vector<double> ordered;
  ordered.reserve(mids.size());
  int lo = static_cast<int>(mids.size() - 1) / 2, hi = lo + 1;
  while (lo >= 0 || hi < static_cast<int>(mids.size())) {
    if (lo >= 0) ordered.push_back(mids[lo--]);
    if (hi < static_cast<int>(mids.size())) ordered.push_back(mids[hi++]);
  }
  if (static_cast<int>(ordered.size()) > k) ordered.resize(k);
  return ordered;
}

struct ShatterHit {
  std::vector<int> points;
  std::vector<double> thresholds;
  std::vector<int> pattern_witnesses;  // theta index per pattern
};

// Scan the parameter grid for one (subset, thresholds) trial; returns true
// iff all 2^d strict-inequality patterns occur.
bool trial(const std::vector<std::vector<double>>& v, const std::vector<int>& pts,
           const std::vector<double>& r, ShatterHit* hit) {
  int d = static_cast<int>(pts.size());
  std::size_t want = std::size_t(1) << d;
  std::vector<int> witness(want, -1);
  std::size_t found = 0;
  for (std::size_t t = 0; t < v.size() && found < want; ++t) {
    std::size_t pat = 0;
    for (int i = 0; i < d; ++i)
      if (v[t][pts[i]] > r[i]) pat |= std::size_t(1) << i;
    if (witness[pat] < 0) {
      witness[pat] = static_cast<int>(t);
      ++found;
    }
  }
  if (found < want) return false;
  if (hit) {
    hit->points = pts;
    hit->thresholds = r;
    hit->pattern_witnesses = witness;
  }
  return true;
}

LabJson witness_json(const ParametricFamily& fam, const ShatterHit& hit,
                     bool zero_thresholds) {
  LabJson w;
  w["family"] = fam.name;
  w["points"] = hit.points;
  w["thresholds"] = zero_thresholds ? LabJson::array() : LabJson(hit.thresholds);
  w["zero_thresholds"] = zero_thresholds;
  w["pattern_witnesses"] = hit.pattern_witnesses;
  return w;
}

std::uint64_t default_budget(int max_d, std::size_t grid) {
  // Enumeration guard: 2^max_d * C(|grid|, max_d) threshold trials per level,
  // summed over levels (saturating).
  BigInt b = BigInt(max_d) * ipow(2, max_d) *
             binomial(static_cast<std::int64_t>(grid),
                      std::min<std::int64_t>(max_d, grid));
  if (b > 1000000000) return 1000000000;
  return b.convert_to<std::uint64_t>();
}

ProbeResult shatter_search(const ParametricFamily& fam, int max_d,
                           std::uint64_t budget, bool zero_thresholds,
                           const std::string& kind) {
  if (max_d < 0 || max_d > 12)
    throw GridTooLarge("shattering search: max_d must lie in [0, 12]");
  const auto v = value_matrix(fam);
  const int n = static_cast<int>(fam.input_grid.size());
  if (budget == 0) budget = default_budget(max_d, fam.input_grid.size());
  std::uint64_t used = 0;

  ProbeResult best;
  best.kind = kind;
  best.value = 0;
  best.instance = fam.name;

  for (int d = 1; d <= std::min(max_d, n); ++d) {
    if ((std::size_t(1) << d) > v.size()) break;  // not enough parameters
    // Per-coordinate candidate cap: k^d <= 2^max_d keeps each level inside
    // its share of the budget (lower bounds stay sound under truncation).
    int k = 1;
    while (std::pow(k + 1.0, d) <= std::pow(2.0, max_d)) ++k;

    BigInt planned = binomial(n, d);
    if (!zero_thresholds) planned *= ipow(BigInt(k), static_cast<unsigned long>(d));
    if (BigInt(used) + planned > budget)
      throw GridTooLarge("shattering search: enumeration budget exceeded at d=" +
                         std::to_string(d));

    bool level_found = false;
    std::vector<int> pts(d);
    for (int i = 0; i < d; ++i) pts[i] = i;
    do {
      ShatterHit hit;
      if (zero_thresholds) {
        ++used;
        if (trial(v, pts, std::vector<double>(d, 0.0), &hit)) level_found = true;
      } else {
        std::vector<std::vector<double>> cand(d);
        bool usable = true;
        for (int i = 0; i < d; ++i) {
          std::vector<double> col;
          col.reserve(v.size());
          for (const auto& row : v) col.push_back(row[pts[i]]);
          cand[i] = threshold_candidates(std::move(col), k);
          if (cand[i].empty()) usable = false;
        }
        if (usable) {
          std::vector<int> idx(d, 0);
          for (;;) {
            std::vector<double> r(d);
            for (int i = 0; i < d; ++i) r[i] = cand[i][idx[i]];
            ++used;
            if (trial(v, pts, r, &hit)) {
              level_found = true;
              break;
            }
            int i = d - 1;
            while (i >= 0 && ++idx[i] == static_cast<int>(cand[i].size()))
              idx[i--] = 0;
            if (i < 0) break;
          }
        }
      }
      if (level_found) {
        best.value = d;
        best.witness = witness_json(fam, hit, zero_thresholds);
        break;
      }
    } while (next_combination(pts, n));
    if (!level_found) break;  // no d-set shattered; larger sets cannot be
  }
  return best;
}

}  // namespace

ProbeResult pdim_lower_bound(const ParametricFamily& fam, int max_d,
                             std::uint64_t budget) {
  return shatter_search(fam, max_d, budget, false, "pdim_lb");
}

ProbeResult vc_lower_bound(const ParametricFamily& fam, int max_d,
                           std::uint64_t budget) {
  return shatter_search(fam, max_d, budget, true, "vc_lb");
}

bool replay_shatter_witness(const ParametricFamily& fam, const LabJson& w) {
  if (!w.contains("points")) return false;
  std::vector<int> pts = w.at("points").get<std::vector<int>>();
  int d = static_cast<int>(pts.size());
  std::vector<double> r =
      w.at("zero_thresholds").get<bool>()
          ? std::vector<double>(d, 0.0)
          : w.at("thresholds").get<std::vector<double>>();
  std::vector<int> witnesses = w.at("pattern_witnesses").get<std::vector<int>>();
  if (static_cast<std::size_t>(1) << d != witnesses.size()) return false;
  for (std::size_t pat = 0; pat < witnesses.size(); ++pat) {
    const auto& theta = fam.param_grid.at(witnesses[pat]);
    for (int i = 0; i < d; ++i) {
      double val = fam.evaluator(fam.input_grid.at(pts[i]), theta);
      bool above = val > r[i];
      if (above != (((pat >> i) & 1u) != 0)) return false;
    }
  }
  return true;
}

ProbeResult sign_components_1d(const ParametricFamily& fam,
                               const std::vector<double>& theta,
                               int resolution) {
  std::vector<std::vector<double>> grid = fam.input_grid;
  if (resolution > 0) {
    double lo = fam.input_grid.front()[0], hi = fam.input_grid.back()[0];
    grid.clear();
    for (double x : linspace(lo, hi, resolution)) grid.push_back({x});
  }
  std::int64_t runs = 0;
  bool in_run = false;
  for (const auto& x : grid) {
    bool below = fam.evaluator(x, theta) <= 0;
    if (below && !in_run) ++runs;
    in_run = below;
  }
  ProbeResult r;
  r.kind = "components";
  r.value = runs;
  r.instance = fam.name;
  r.witness = LabJson{{"theta", theta}, {"grid_points", grid.size()}};
  return r;
}

namespace {

using Poly = std::vector<BigRat>;  // coefficients, low to high

void normalize(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigRat(i));
  return d;
}

// Remainder of a by b (b nonzero, normalized).
Poly poly_rem(Poly a, const Poly& b) {
  normalize(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigRat coef = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
    normalize(a);
  }
  return a;
}

int sign_at_plus_inf(const Poly& p) {
  if (p.empty()) return 0;
  return p.back() > 0 ? 1 : -1;
}

int sign_at_minus_inf(const Poly& p) {
  if (p.empty()) return 0;
  int s = sign_at_plus_inf(p);
  return (p.size() - 1) % 2 == 0 ? s : -s;
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

std::int64_t poly_roots_count(const std::vector<BigRat>& coeffs) {
  Poly p = coeffs;
  normalize(p);
  if (p.empty()) throw ZeroPolynomial("poly_roots_count: zero polynomial");
  if (p.size() == 1) return 0;  // nonzero constant

  std::vector<Poly> chain{p, derivative(p)};
  normalize(chain[1]);
  while (!chain.back().empty() && chain.back().size() > 0) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    if (b.empty()) break;
    Poly r = poly_rem(a, b);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  std::vector<int> at_minus, at_plus;
  for (const Poly& q : chain) {
    at_minus.push_back(sign_at_minus_inf(q));
    at_plus.push_back(sign_at_plus_inf(q));
  }
  return sign_variations(at_minus) - sign_variations(at_plus);
}

std::int64_t exp_linear_roots_lb(double a, double b, double c, double lo,
                                 double hi, int resolution) {
  std::int64_t crossings = 0;
  double prev = 0;
  bool have_prev = false;
  for (double x : linspace(lo, hi, resolution)) {
    double f = a + b * x + c * std::exp(x);
    if (f == 0) {
      ++crossings;  // exact grid zero counts as a root
      have_prev = false;
      continue;
    }
    if (have_prev && (prev < 0) != (f < 0)) ++crossings;
    prev = f;
    have_prev = true;
  }
  return crossings;
}

VerifySummary verify_suite(const std::vector<VerifyCheck>& checks) {
  VerifySummary s;
  s.checks = checks;
  if (checks.empty()) {
    s.vacuous = true;
    return s;
  }
  for (const auto& c : checks) {
    if (c.oracle > c.bound) {
      s.ok = false;
      s.violations.push_back(c.name + ": oracle " + c.oracle.str() +
                             " exceeds bound " + c.bound.str());
    }
  }
  return s;
}

LabJson VerifySummary::to_json() const {
  LabJson j;
  j["ok"] = ok;
  if (vacuous) j["warning"] = "empty instance list: vacuous pass";
  LabJson entries = LabJson::array();
  for (const auto& c : checks) {
    entries.push_back(LabJson{{"name", c.name},
                              {"oracle", c.oracle.str()},
                              {"bound", c.bound.str()},
                              {"pass", c.oracle <= c.bound},
                              {"detail", c.detail}});
  }
  j["checks"] = std::move(entries);
  j["violations"] = violations;
  return j;
}

std::vector<VerifyCheck> default_suite(std::uint64_t seed, int max_d) {
  std::vector<VerifyCheck> checks;
  const PfaffFormat sigmoid_fmt{1, 2, 1};
  const PfaffFormat affine_joint{0, 0, 2};

  {
    ParametricFamily fam = make_affine_family();
    ProbeResult pd = pdim_lower_bound(fam, max_d);
    ProbeResult vc = vc_lower_bound(fam, max_d);
    BigInt bound = pnn_pdim_bound(PfaffFormat{0, 0, 1}, 2).pdim_bound;
    checks.push_back({"affine_pdim_vs_pnn_bound", BigInt(pd.value), bound,
                      "1-D affine family, p=2"});
    checks.push_back({"affine_vc_vs_km_bound", BigInt(vc.value), bound,
                      "thresholded-at-0 affine classifiers"});

    // 1-D law: VC of the thresholded family <= 2 * max component count.
    BigInt max_components = 0;
    for (const auto& theta : fam.param_grid) {
      ProbeResult c = sign_components_1d(fam, theta);
      max_components = std::max(max_components, BigInt(c.value));
    }
    checks.push_back({"affine_vc_vs_2K_component_law", BigInt(vc.value),
                      2 * max_components,
                      "VC <= 2K over the parameter sweep"});
  }

  {
    ParametricFamily fam = make_sigmoid_neuron_family();
    ProbeResult pd = pdim_lower_bound(fam, max_d);
    PfaffFormat fmt = fmt_compose(sigmoid_fmt, {affine_joint});
    BigInt bound = pnn_pdim_bound(fmt, 2).pdim_bound;
    checks.push_back({"sigmoid_neuron_pdim_vs_pnn_bound", BigInt(pd.value),
                      bound, "sigmoid(t1 x + t2), p=2, format " + fmt.str()});
  }

  {
    ParametricFamily fam = make_two_layer_sigmoid_family(15, 300, seed);
    ProbeResult pd = pdim_lower_bound(fam, max_d);
    PfaffFormat branch = fmt_compose(sigmoid_fmt, {affine_joint});
    PfaffFormat scaled = fmt_product(PfaffFormat{0, 0, 1}, branch);
    PfaffFormat fmt = fmt_sum(scaled, scaled);
    BigInt bound = pnn_pdim_bound(fmt, 5).pdim_bound;
    checks.push_back({"two_layer_sigmoid_pdim_vs_pnn_bound", BigInt(pd.value),
                      bound, "t3 sig(t1 x) + t4 sig(t2 x + t5), p=5, format " +
                                 fmt.str()});
  }

  {
    // a + b x + c e^x has at most khovanskii_count(1,1,1,(1)) = 2 real zeros.
    BigInt kh = khovanskii_count(1, 1, 1, {BigInt(1)});
    std::mt19937_64 gen(seed + 1);
    std::int64_t max_roots = 0, max_comp = 0;
    ParametricFamily f;
    f.input_dim = 1;
    f.param_dim = 3;
    f.name = "exp_linear";
    f.evaluator = [](const std::vector<double>& x, const std::vector<double>& t) {
      return t[0] + t[1] * x[0] + t[2] * std::exp(x[0]);
    };
    f.input_grid = cartesian_grid({linspace(-6, 6, 600)});
    for (int i = 0; i < 200; ++i) {
      double a = uniform_in(gen, -3, 3), b = uniform_in(gen, -3, 3),
             c = uniform_in(gen, -3, 3);
      max_roots = std::max(max_roots, exp_linear_roots_lb(a, b, c, -6, 6, 2000));
      max_comp =
          std::max(max_comp, sign_components_1d(f, {a, b, c}).value);
    }
    checks.push_back({"exp_linear_roots_vs_khovanskii", BigInt(max_roots), kh,
                      "root isolation over 200 random (a,b,c)"});
    checks.push_back({"exp_linear_components_vs_khovanskii", BigInt(max_comp),
                      kh, "sublevel components over 200 random (a,b,c)"});
  }

  {
    // Bezout: random rational polynomials of each degree up to 6.
    std::mt19937_64 gen(seed + 2);
    for (int deg = 1; deg <= 6; ++deg) {
      std::int64_t max_roots = 0;
      for (int rep = 0; rep < 40; ++rep) {
        std::vector<BigRat> coeffs;
        for (int i = 0; i <= deg; ++i) {
          std::int64_t num =
              static_cast<std::int64_t>(gen() % 21) - 10;
          std::int64_t den = 1 + static_cast<std::int64_t>(gen() % 5);
          coeffs.emplace_back(num, den);
        }
        if (coeffs.back() == 0) coeffs.back() = 1;
        max_roots = std::max(max_roots, poly_roots_count(coeffs));
      }
      checks.push_back(
          {"bezout_degree_" + std::to_string(deg), BigInt(max_roots),
           khovanskii_count(1, 0, 0, {BigInt(deg)}),
           "Sturm root counts over 40 random polynomials"});
    }
  }

  return checks;
}

}  // namespace tamecheck
