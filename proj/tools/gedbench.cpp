// Command-line front end: graph generation, exact GED, QUBO export, and the
// SA / VQE / QAOA solvers, plus the all-pairs benchmark harness.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ged/bench.hpp"
#include "ged/errors.hpp"
#include "ged/graph.hpp"
#include "ged/metrics.hpp"
#include "ged/qubo.hpp"
#include "ged/sa.hpp"
#include "ged/variational.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string bits_string(const ged::Assignment& x) {
  std::string s(x.bits.size(), '0');
  for (size_t i = 0; i < x.bits.size(); ++i)
    if (x.bits[i]) s[i] = '1';
  return s;
}

void print_solution(const ged::QuboProblem& q, const ged::Assignment& x,
                    double energy_value) {
  std::cout << "best_energy " << energy_value << "\n";
  const auto g = ged::ged_from_solution(q, x);
  if (g)
    std::cout << "decoded_ged " << *g << "\n";
  else
    std::cout << "decoded_ged invalid\n";
}

struct ConfigCli {
  std::optional<std::string> config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::optional<uint64_t> seed;
  std::optional<std::string> out;

  ged::BenchConfig resolve() const {
    ged::BenchConfig cfg;
    if (config_path) cfg = ged::load_config(*config_path);
    for (const auto& [key, value] : overrides)
      ged::apply_config_entry(cfg, key, value);
    if (seed) cfg.master_seed = *seed;
    if (out) cfg.out_dir = *out;
    return cfg;
  }
};

// Every config key doubles as a CLI flag of the same name.
const std::vector<std::string> kConfigKeys = {
    "n_range",     "edge_probs",      "alpha",
    "beta",        "beta_sweep",      "methods",
    "sa_shots",    "sa_t0",           "sa_decay",
    "sa_tmin",     "sa_time_per_run", "vqe_p",
    "qaoa_p",      "restarts",        "shots",
    "budget",      "tol",             "final_rotation_layer",
    "max_qubits",  "master_seed",     "out_dir"};

void add_config_flags(CLI::App* cmd, ConfigCli& cc) {
  cmd->add_option("--config", cc.config_path, "Flat key=value config file");
  cmd->add_option("--seed", cc.seed, "Master seed");
  cmd->add_option("--out", cc.out, "Output directory");
  for (const auto& key : kConfigKeys) {
    cmd->add_option_function<std::string>(
           "--" + key,
           [&cc, key](const std::string& value) {
             cc.overrides.emplace_back(key, value);
           })
        ->group("Config overrides");
  }
  cmd->add_option_function<std::string>(
         "--set",
         [&cc](const std::string& kv) {
           const auto eq = kv.find('=');
           if (eq == std::string::npos)
             throw CLI::ValidationError("--set expects key=value");
           cc.overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
         },
         "Override any config key, e.g. --set sa_shots=200")
      ->take_all();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph edit distance via QUBO: exact oracle, simulated "
               "annealing, and statevector-simulated VQE/QAOA"};
  app.require_subcommand(1);

  // gen
  ConfigCli gen_cfg;
  auto* gen = app.add_subcommand("gen", "Generate the random-graph dataset");
  add_config_flags(gen, gen_cfg);

  // ged
  std::string ged_g1, ged_g2;
  auto* ged_cmd = app.add_subcommand("ged", "Exact GED between two graphs");
  ged_cmd->add_option("--g1", ged_g1, "First graph file")->required();
  ged_cmd->add_option("--g2", ged_g2, "Second graph file")->required();

  // qubo
  std::string qubo_g1, qubo_g2, qubo_out, qubo_ising;
  double qubo_alpha = 1.0, qubo_beta = 0.1;
  bool qubo_safe = false;
  auto* qubo_cmd =
      app.add_subcommand("qubo", "Build and export the QUBO for a pair");
  qubo_cmd->add_option("--g1", qubo_g1)->required();
  qubo_cmd->add_option("--g2", qubo_g2)->required();
  qubo_cmd->add_option("--alpha", qubo_alpha, "Hard-constraint weight");
  qubo_cmd->add_option("--beta", qubo_beta, "Soft-constraint weight");
  qubo_cmd->add_flag("--safe", qubo_safe,
                     "Preset alpha=n^2+1, beta=1 (guarantees valid minima)");
  qubo_cmd->add_option("--out-file", qubo_out, "QUBO output path")->required();
  qubo_cmd->add_option("--ising", qubo_ising, "Also export the Ising form");

  // sa
  std::string sa_qubo, sa_csv;
  int sa_shots = 1000;
  double sa_t0 = 0.0, sa_decay = 0.0, sa_tmin = 1e-3;
  uint64_t sa_seed = 0;
  auto* sa_cmd = app.add_subcommand("sa", "Simulated annealing on a QUBO");
  sa_cmd->add_option("--qubo", sa_qubo)->required();
  sa_cmd->add_option("--shots", sa_shots);
  sa_cmd->add_option("--t0", sa_t0, "Initial temperature (0 = auto)");
  sa_cmd->add_option("--decay", sa_decay, "Cooling factor (0 = auto)");
  sa_cmd->add_option("--tmin", sa_tmin, "Stop temperature");
  sa_cmd->add_option("--seed", sa_seed);
  sa_cmd->add_option("--samples-csv", sa_csv, "Write shot,energy,bits rows");

  // vqe / qaoa
  std::string var_qubo, var_csv;
  int var_p = 1, var_restarts = 8, var_shots = 1024, var_max_qubits = 16;
  int var_budget = 0;
  uint64_t var_seed = 0;
  bool var_final_layer = true;
  auto add_var_options = [&](CLI::App* cmd) {
    cmd->add_option("--qubo", var_qubo)->required();
    cmd->add_option("--p", var_p, "Ansatz repetitions");
    cmd->add_option("--restarts", var_restarts);
    cmd->add_option("--shots", var_shots);
    cmd->add_option("--seed", var_seed);
    cmd->add_option("--budget", var_budget,
                    "Optimizer evaluations per restart (0 = 500*params)");
    cmd->add_option("--max-qubits", var_max_qubits,
                    "Statevector cap; 25 needs ~0.5 GiB");
    cmd->add_option("--trace-csv", var_csv, "Per-restart trace output");
    cmd->add_option("--final-rotation-layer", var_final_layer,
                    "Append a closing rotation layer (VQE only, default true)");
  };
  auto* vqe_cmd = app.add_subcommand("vqe", "VQE on a QUBO");
  add_var_options(vqe_cmd);
  auto* qaoa_cmd = app.add_subcommand("qaoa", "QAOA on a QUBO");
  add_var_options(qaoa_cmd);

  // bench / sweep / report
  ConfigCli bench_cfg, sweep_cfg;
  auto* bench_cmd =
      app.add_subcommand("bench", "All-pairs benchmark over the dataset");
  add_config_flags(bench_cmd, bench_cfg);
  auto* sweep_cmd =
      app.add_subcommand("sweep", "SA sweep over the soft-constraint weight");
  add_config_flags(sweep_cmd, sweep_cfg);

  std::string report_records, report_out = ".";
  auto* report_cmd =
      app.add_subcommand("report", "Aggregate a records file");
  report_cmd->add_option("--records", report_records)->required();
  report_cmd->add_option("--out", report_out, "Directory for outputs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const auto cfg = gen_cfg.resolve();
      const auto paths = ged::gen_dataset(cfg);
      std::cout << "wrote " << paths.size() << " graph files to "
                << cfg.out_dir << "\n";
    } else if (ged_cmd->parsed()) {
      const auto g1 = ged::read_graph(ged_g1);
      const auto g2 = ged::read_graph(ged_g2);
      const auto t0 = Clock::now();
      const auto result = ged::exact_ged(g1, g2);
      std::cout << "ged " << result.value << "\n";
      std::cout << "witness";
      for (int m : result.witness.mapping) std::cout << " " << m;
      std::cout << "\npadding " << result.padding << "\n";
      std::cout << "wall_time_s " << seconds_since(t0) << "\n";
    } else if (qubo_cmd->parsed()) {
      const auto g1 = ged::read_graph(qubo_g1);
      const auto g2 = ged::read_graph(qubo_g2);
      if (qubo_safe) {
        const int n = std::max(g1.vertex_count(), g2.vertex_count());
        qubo_alpha = n * n + 1.0;
        qubo_beta = 1.0;
      }
      const auto q = ged::build_ged_problem(g1, g2, qubo_alpha, qubo_beta);
      ged::write_qubo(q, qubo_out);
      std::cout << "wrote " << qubo_out << " (" << q.num_vars()
                << " variables, k=" << q.padding() << ")\n";
      if (!qubo_ising.empty()) {
        std::ofstream out(qubo_ising, std::ios::binary);
        out << ged::ising_to_text(ged::to_ising(q));
        std::cout << "wrote " << qubo_ising << "\n";
      }
    } else if (sa_cmd->parsed()) {
      const auto q = ged::read_qubo(sa_qubo);
      ged::SaParams params;
      params.shots = sa_shots;
      params.t0 = sa_t0;
      params.decay = sa_decay;
      params.t_min = sa_tmin;
      params.seed = sa_seed;
      const auto t0 = Clock::now();
      const auto ss = ged::anneal(q, params);
      const double elapsed = seconds_since(t0);
      const auto [x, e] = ged::best(ss);
      print_solution(q, x, e);
      std::cout << "wall_time_s " << elapsed << "\n";
      if (!sa_csv.empty()) {
        std::ofstream out(sa_csv, std::ios::binary);
        out << "shot,energy,bits\n";
        for (int i = 0; i < ss.size(); ++i)
          out << i << "," << ss.energies[i] << ","
              << bits_string(ss.samples[i]) << "\n";
        std::cout << "samples_csv " << sa_csv << "\n";
      }
    } else if (vqe_cmd->parsed() || qaoa_cmd->parsed()) {
      const auto q = ged::read_qubo(var_qubo);
      ged::VariationalOptions opts;
      opts.p = var_p;
      opts.restarts = var_restarts;
      opts.shots = var_shots;
      opts.seed = var_seed;
      opts.budget = var_budget;
      opts.final_rotation_layer = var_final_layer;
      opts.max_qubits = var_max_qubits;
      const auto method = vqe_cmd->parsed() ? ged::VariationalMethod::VQE
                                            : ged::VariationalMethod::QAOA;
      const auto t0 = Clock::now();
      const auto result = ged::run_variational(q, method, opts);
      const double elapsed = seconds_since(t0);
      print_solution(q, result.best, result.best_energy);
      std::cout << "num_params " << result.num_params << "\n"
                << "depth " << result.depth << "\n"
                << "size " << result.size << "\n"
                << "wall_time_s " << elapsed << "\n";
      if (!var_csv.empty()) {
        std::ofstream out(var_csv, std::ios::binary);
        out << "restart,optimized_expectation,best_sampled_energy,"
               "evaluations\n";
        for (const auto& t : result.trace)
          out << t.restart << "," << t.optimized_expectation << ","
              << t.best_sampled_energy << "," << t.evaluations << "\n";
        std::cout << "trace_csv " << var_csv << "\n";
      }
    } else if (bench_cmd->parsed()) {
      const auto cfg = bench_cfg.resolve();
      const auto t0 = Clock::now();
      const auto result = ged::run_bench(cfg);
      std::cout << "records " << result.records.size() << "\n"
                << "capacity_skips " << result.capacity_skips << "\n"
                << "records_csv " << result.records_path << "\n"
                << "wall_time_s " << seconds_since(t0) << "\n";
    } else if (sweep_cmd->parsed()) {
      const auto cfg = sweep_cfg.resolve();
      const auto t0 = Clock::now();
      const auto table = ged::run_sweep(cfg);
      std::cout << "sweep_csv " << cfg.out_dir << "/sweep.csv\n"
                << "rows " << table.ns.size() << " cols "
                << table.betas.size() << "\n"
                << "wall_time_s " << seconds_since(t0) << "\n";
    } else if (report_cmd->parsed()) {
      const auto rows = ged::report(report_records, report_out);
      std::cout << "aggregate_rows " << rows.size() << "\n"
                << "aggregate_csv " << report_out << "/aggregate.csv\n";
    }
  } catch (const ged::ParamError& e) {
    std::cerr << "error type=parameter message=\"" << e.what() << "\"\n";
    return 2;
  } catch (const ged::CapacityError& e) {
    std::cerr << "error type=capacity message=\"" << e.what() << "\"\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error type=runtime message=\"" << e.what() << "\"\n";
    return 1;
  }
  return 0;
}
