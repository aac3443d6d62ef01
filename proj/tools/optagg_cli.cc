// Command-line front end: planning, baseline routing, model export and
// validation, oracle cross-checks, traffic generation and experiments.
//
// Exit status: 0 success, 1 validation or equivalence failure, 2 usage
// error, 3 I/O error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optagg/agg_solver.h"
#include "optagg/errors.h"
#include "optagg/experiment.h"
#include "optagg/ilp_model.h"
#include "optagg/lp_writer.h"
#include "optagg/oracle.h"
#include "optagg/plan_json.h"
#include "optagg/topology.h"
#include "optagg/traffic.h"

namespace {

using namespace optagg;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct Options {
  std::string topology;
  std::string demands;
  std::string plan;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t dests = 0;
  std::vector<std::size_t> loads{5, 7, 9};
  std::size_t samples = 10;
  std::uint64_t base_seed = kDefaultBaseSeed;
  std::size_t oracle_samples = 100;
  std::uint64_t oracle_seed = 1;
  bool verify = false;
  bool json = false;
};

void Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
  if (!out.flush()) throw IoError("failed writing " + out_path);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int Plan(const Options& o) {
  const Topology t = load_topology(o.topology);
  const DemandSet d = load_demands(o.demands, t);
  const AggregationPlan plan = solve(t, d);
  Emit(o.out, serialize_plan(plan));
  std::cerr << "total cost " << plan.total_cost << "\n";
  return kOk;
}

int Baseline(const Options& o) {
  const Topology t = load_topology(o.topology);
  const DemandSet d = load_demands(o.demands, t);
  const AggregationPlan plan = conventional_solve(t, d);
  Emit(o.out, o.json ? serialize_plan(plan) : std::to_string(plan.total_cost) + "\n");
  return kOk;
}

int ExportLp(const Options& o) {
  const Topology t = load_topology(o.topology);
  const DemandSet d = load_demands(o.demands, t);
  Emit(o.out, export_lp(build_ilp(t, d)));
  return kOk;
}

int Validate(const Options& o) {
  const Topology t = load_topology(o.topology);
  const DemandSet d = load_demands(o.demands, t);
  const AggregationPlan plan = parse_plan(ReadFile(o.plan), d);

  std::ostringstream report;
  bool ok = true;
  for (const std::string& problem : check_plan(plan)) {
    report << "plan: " << problem << "\n";
    ok = false;
  }
  const IlpModel model = build_ilp(t, d);
  Assignment a;
  try {
    a = encode(plan, model);
  } catch (const EncodingError& e) {
    report << "encoding: " << e.what() << "\n";
    Emit(o.out, report.str() + "INVALID\n");
    return kFailed;
  }
  for (const Violation& v : validate_assignment(model, a)) {
    report << v.tag() << ' ' << v << "\n";
    ok = false;
  }
  const Rational objective = objective_value(model, a);
  if (objective != Rational(plan.total_cost)) {
    report << "objective " << format_decimal(objective) << " != total_cost " << plan.total_cost
           << "\n";
    ok = false;
  }
  report << (ok ? "VALID objective " + format_decimal(objective) : std::string("INVALID")) << "\n";
  Emit(o.out, report.str());
  return ok ? kOk : kFailed;
}

int OracleCheck(const Options& o) {
  const OracleCheckReport report = run_oracle_check(o.oracle_samples, o.oracle_seed);
  std::ostringstream out;
  for (const std::string& f : report.failures) out << "MISMATCH " << f << "\n";
  out << report.instances << " instances, " << report.failures.size() << " failures\n";
  Emit(o.out, out.str());
  return report.ok() ? kOk : kFailed;
}

int GenTraffic(const Options& o) {
  const Topology t = load_topology(o.topology);
  Emit(o.out, serialize_demands(generate_two_to_many(t, o.dests, o.seed)));
  return kOk;
}

int Experiment(const Options& o) {
  ExperimentConfig cfg;
  cfg.topology_path = o.topology;
  cfg.loads = o.loads;
  cfg.samples_per_load = o.samples;
  cfg.base_seed = o.base_seed;
  cfg.output_path = o.out;
  cfg.verify = o.verify;
  const std::vector<ExperimentRecord> records = run_experiment(cfg);
  if (o.out.empty()) std::cout << records_to_csv(records);
  const auto summary = summarize(records);
  (o.out.empty() ? std::cerr : std::cout) << format_summary(summary) << std::flush;
  return kOk;
}

int Run(int argc, char** argv) {
  CLI::App app{"Aggregation-aware routing planner for optical networks", "optagg"};
  app.require_subcommand(1);
  Options o;

  auto topology = [&o](CLI::App* sub) {
    sub->add_option("--topology", o.topology, "Edge-list topology file")->required();
  };
  auto demands = [&o](CLI::App* sub) {
    sub->add_option("--demands", o.demands, "Demand CSV (source,dest per line)")->required();
  };
  auto out = [&o](CLI::App* sub, const char* what) {
    sub->add_option("--out", o.out, what);
  };

  CLI::App* plan = app.add_subcommand("plan", "Optimal aggregation-aware routing as JSON");
  topology(plan);
  demands(plan);
  out(plan, "Write the plan here instead of stdout");

  CLI::App* baseline = app.add_subcommand("baseline", "Conventional shortest-path routing cost");
  topology(baseline);
  demands(baseline);
  out(baseline, "Write the result here instead of stdout");
  baseline->add_flag("--json", o.json, "Print the full plan as JSON");

  CLI::App* lp = app.add_subcommand("export-lp", "Write the routing model in LP format");
  topology(lp);
  demands(lp);
  out(lp, "LP file path (stdout when omitted)");

  CLI::App* validate = app.add_subcommand("validate", "Check a plan JSON against the model");
  topology(validate);
  demands(validate);
  validate->add_option("--plan", o.plan, "Plan JSON to check")->required();
  out(validate, "Write the report here instead of stdout");

  CLI::App* oracle = app.add_subcommand("oracle-check", "Solver vs brute force on small instances");
  oracle->add_option("--samples", o.oracle_samples, "Number of random instances")
      ->capture_default_str();
  oracle->add_option("--seed", o.oracle_seed, "Base seed")->capture_default_str();
  out(oracle, "Write the report here instead of stdout");

  CLI::App* gen = app.add_subcommand("gen-traffic", "Random two-to-many demand CSV");
  topology(gen);
  gen->add_option("--dests", o.dests, "Number of destination nodes")->required();
  gen->add_option("--seed", o.seed, "Random seed")->required();
  out(gen, "CSV path (stdout when omitted)");

  CLI::App* exp = app.add_subcommand("experiment", "Conventional vs aggregation-aware cost sweep");
  topology(exp);
  exp->add_option("--loads", o.loads, "Comma-separated destination counts")
      ->delimiter(',')
      ->capture_default_str();
  exp->add_option("--samples", o.samples, "Traffic samples per load")->capture_default_str();
  exp->add_option("--seed", o.base_seed, "Base seed")->capture_default_str();
  exp->add_option("--out", o.out, "Results CSV (stdout when omitted)");
  exp->add_flag("--verify", o.verify, "Validate every plan against the routing model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*plan) return Plan(o);
  if (*baseline) return Baseline(o);
  if (*lp) return ExportLp(o);
  if (*validate) return Validate(o);
  if (*oracle) return OracleCheck(o);
  if (*gen) return GenTraffic(o);
  return Experiment(o);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
