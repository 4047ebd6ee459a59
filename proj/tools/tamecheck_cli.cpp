#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tamecheck/analyzer.hpp"
#include "tamecheck/arch_graph.hpp"
#include "tamecheck/bound_engine.hpp"
#include "tamecheck/empirical_lab.hpp"
#include "tamecheck/errors.hpp"

namespace {

using tamecheck::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitDiagnostics = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tamecheck::Error("cannot open output file: " + path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tamecheck::Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t env_seed() {
  const char* s = std::getenv("TAMECHECK_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 0;
}

std::string render_plan_human(const tamecheck::SamplePlan& p) {
  std::ostringstream os;
  os << p.mode << " plan: N = " << p.N.str() << "  (K = " << p.K.str()
     << ", epsilon = " << p.epsilon << ", delta = " << p.delta
     << ", C = " << p.C << ")\n"
     << "  " << p.to_json().at("formula").get<std::string>() << "\n"
     << "  note: " << p.caveat << "\n";
  return os.str();
}

int run_analyze(const std::string& input, const std::string& output,
                const std::string& format, const std::string& loss,
                double epsilon, double delta, double C) {
  tamecheck::ArchGraph g;
  try {
    g = tamecheck::parse_spec_text(slurp(input));
  } catch (const tamecheck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiagnostics;
  }
  auto diags = tamecheck::validate(g);
  if (!diags.empty()) {
    for (const auto& d : diags)
      std::cerr << "diagnostic [" << d.code << "]"
                << (d.node.empty() ? "" : " node '" + d.node + "'") << ": "
                << d.message << "\n";
    return kExitDiagnostics;
  }

  tamecheck::AnalysisReport rep = tamecheck::analyze(g, loss);
  Json doc = tamecheck::report_to_json(rep, g);
  if (rep.net_format) {
    tamecheck::BoundReport bounds =
        tamecheck::pnn_pdim_bound(*rep.net_format, rep.param_count);
    doc["bounds"] = bounds.to_json();
    Json plans;
    plans["classification"] =
        tamecheck::sample_size_classification(bounds.pdim_bound, epsilon, delta, C)
            .to_json();
    plans["regression"] =
        tamecheck::sample_size_regression(bounds.pdim_bound, epsilon, delta, C)
            .to_json();
    doc["sample_plans"] = std::move(plans);
  } else {
    doc["bounds"] = nullptr;
    doc["sample_plans"] = nullptr;
  }

  if (format == "machine") {
    write_out(output, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "structure: " << tamecheck::class_name(rep.structure) << "\n"
       << "definable: " << (rep.definable ? "yes" : "no") << "\n"
       << "finite sample complexity: "
       << (rep.finite_sample_complexity ? "yes" : "no") << "\n"
       << "parameter count P: " << rep.param_count.str() << "\n";
    if (rep.net_format) {
      os << "net format (q, D, d): " << rep.net_format->str() << "\n"
         << "pdim bound: " << doc["bounds"]["pdim_bound"].get<std::string>()
         << "  (ceil log2 B = " << doc["bounds"]["B_log2_ceil"].get<int>()
         << ")\n";
    } else {
      os << "net format: unavailable (" << rep.format_block_reason << ")\n"
         << "component constant: finite, unquantified\n";
    }
    for (const auto& o : rep.obligations) os << "obligation: " << o << "\n";
    write_out(output, os.str());
  }
  return kExitOk;
}

int run_plan(std::int64_t K, double epsilon, double delta, const std::string& mode,
             double C, const std::string& output, const std::string& format) {
  tamecheck::SamplePlan plan =
      mode == "classification"
          ? tamecheck::sample_size_classification(K, epsilon, delta, C)
          : tamecheck::sample_size_regression(K, epsilon, delta, C);
  if (format == "machine")
    write_out(output, plan.to_json().dump(2) + "\n");
  else
    write_out(output, render_plan_human(plan));
  return kExitOk;
}

int run_catalog(const std::string& output, const std::string& format) {
  Json doc = tamecheck::default_catalog().dump();
  if (format == "machine") {
    write_out(output, doc.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  for (const auto& e : doc.at("gates")) {
    os << e.at("name").get<std::string>() << "  class="
       << e.at("class").get<std::string>();
    if (!e.at("format").is_null()) {
      os << "  format=(" << e["format"]["q"].get<std::string>() << ","
         << e["format"]["D"].get<std::string>() << ","
         << e["format"]["d"].get<std::string>() << ")";
    } else {
      os << "  format=absent";
    }
    os << "\n";
    for (const auto& c : e.at("caveats")) os << "    " << c.get<std::string>() << "\n";
  }
  os << "losses:\n";
  for (const auto& e : doc.at("losses"))
    os << "  " << e.at("name").get<std::string>() << "  class="
       << e.at("class").get<std::string>() << "\n";
  write_out(output, os.str());
  return kExitOk;
}

int run_verify(const std::string& suite_path, std::uint64_t seed, int max_d,
               std::uint64_t budget, const std::string& output,
               const std::string& format) {
  std::vector<tamecheck::VerifyCheck> checks;
  if (suite_path.empty()) {
    checks = tamecheck::default_suite(seed, max_d);
    (void)budget;
  } else {
    Json doc = Json::parse(slurp(suite_path));
    for (const auto& c : doc.at("checks")) {
      tamecheck::VerifyCheck check;
      check.name = c.at("name").get<std::string>();
      check.oracle = tamecheck::BigInt(c.at("oracle").get<std::string>());
      check.bound = tamecheck::BigInt(c.at("bound").get<std::string>());
      if (c.contains("detail")) check.detail = c.at("detail").get<std::string>();
      checks.push_back(std::move(check));
    }
  }
  tamecheck::VerifySummary summary = tamecheck::verify_suite(checks);
  if (format == "machine") {
    write_out(output, summary.to_json().dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& c : summary.checks)
      os << (c.oracle <= c.bound ? "pass" : "FAIL") << "  " << c.name
         << "  oracle=" << c.oracle.str() << "  bound=" << c.bound.str() << "\n";
    if (summary.vacuous) os << "warning: empty instance list, vacuous pass\n";
    os << (summary.ok ? "all checks passed\n" : "violations detected\n");
    write_out(output, os.str());
  }
  return summary.ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tamecheck: definability analysis and sample-complexity bounds "
               "for fixed feedforward architectures"};
  app.require_subcommand(1);

  std::string input, output, format = "machine", loss, mode = "classification";
  std::string suite_path;
  double epsilon = 0.1, delta = 0.05, C = 1.0;
  std::int64_t K = 1;
  std::uint64_t seed = env_seed(), budget = 0;
  int max_d = 3;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "output path ('-' = stdout)");
    cmd->add_option("--format", format, "human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "analyze an architecture spec");
  analyze->add_option("--input", input, "architecture spec (JSON)")->required();
  analyze->add_option("--loss", loss, "loss to append (catalog name)");
  analyze->add_option("--epsilon", epsilon, "plan accuracy");
  analyze->add_option("--delta", delta, "plan failure probability");
  analyze->add_option("--constant-C", C, "universal-constant knob");
  add_io(analyze);

  CLI::App* plan = app.add_subcommand("plan", "sample-size planner");
  plan->add_option("--K", K, "VC/pdim bound")->required();
  plan->add_option("--epsilon", epsilon, "accuracy")->required();
  plan->add_option("--delta", delta, "failure probability")->required();
  plan->add_option("--mode", mode, "classification|regression")
      ->check(CLI::IsMember({"classification", "regression"}));
  plan->add_option("--constant-C", C, "universal-constant knob");
  add_io(plan);

  CLI::App* catalog = app.add_subcommand("catalog", "dump the gate catalog");
  add_io(catalog);

  CLI::App* verify = app.add_subcommand("verify", "run the oracle-vs-bound suite");
  verify->add_option("--input", suite_path, "custom suite (JSON)");
  verify->add_option("--seed", seed, "probe seed (env TAMECHECK_SEED fallback)");
  verify->add_option("--max-shatter-d", max_d, "shattering search depth");
  verify->add_option("--budget", budget, "enumeration budget override");
  add_io(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(input, output, format, loss, epsilon, delta, C);
    if (app.got_subcommand(plan))
      return run_plan(K, epsilon, delta, mode, C, output, format);
    if (app.got_subcommand(catalog)) return run_catalog(output, format);
    if (app.got_subcommand(verify))
      return run_verify(suite_path, seed, max_d, budget, output, format);
  } catch (const tamecheck::BadRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tamecheck::DegenerateLog& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tamecheck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiagnostics;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
