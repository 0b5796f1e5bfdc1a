#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ged/metrics.hpp"

namespace ged {

/// Experiment configuration. Loaded from a flat "key = value" file (lists
/// comma-separated); every key can be overridden by a CLI flag of the same
/// name.
struct BenchConfig {
  std::vector<int> n_range = {3, 4, 5, 6, 7, 8, 9};
  std::vector<double> edge_probs = {0.1, 0.33, 0.66, 0.99};
  double alpha = 1.0;
  double beta = 0.1;
  std::vector<double> beta_sweep = {1.0,       1.0 / 2.0, 1.0 / 3.0,
                                    1.0 / 4.0, 1.0 / 5.0, 1.0 / 6.0,
                                    1.0 / 7.0, 1.0 / 8.0, 1.0 / 9.0,
                                    1.0 / 10.0, 0.05,     0.01};
  std::vector<std::string> methods = {"SA"};

  int sa_shots = 1000;
  double sa_t0 = 0.0;    // 0 = derive from the problem
  double sa_decay = 0.0; // 0 = derive from proposal count
  double sa_tmin = 1e-3;
  double sa_time_per_run = 20e-6;  // annealing-time analogue for TTS

  int vqe_p = 1;
  int qaoa_p = 1;
  int restarts = 8;
  int shots = 1024;
  int budget = 0;
  double tol = 1e-4;
  bool final_rotation_layer = true;
  int max_qubits = 16;

  uint64_t master_seed = 1234;
  std::string out_dir = "bench_out";
};

BenchConfig load_config(const std::string& path);

/// Applies one "key = value" override; throws ParamError on unknown keys or
/// malformed values.
void apply_config_entry(BenchConfig& cfg, const std::string& key,
                        const std::string& value);

/// Writes one graph per (n, edge probability) as g_n{n}_p{idx}.json under
/// out_dir, seeded from (master_seed, n, idx). Returns the file paths.
std::vector<std::string> gen_dataset(const BenchConfig& cfg);

std::string dataset_graph_path(const BenchConfig& cfg, int n, int p_idx);

struct BenchResult {
  std::vector<RunRecord> records;
  int capacity_skips = 0;
  std::string records_path;
};

/// All-pairs experiment: for each n, the 10 unordered graph pairs
/// (including self-pairs) run through every enabled method. Records append
/// to records.csv as they finish; reruns skip (method, n, pair) keys that
/// are already present, and the finished file is sorted canonically.
BenchResult run_bench(const BenchConfig& cfg);

struct SweepTable {
  std::vector<int> ns;
  std::vector<double> betas;
  std::vector<std::vector<double>> mean_delta;  // [n index][beta index]
};

/// SA-only sweep of the soft-constraint weight; writes sweep.csv shaped
/// like one row per n and one column per beta.
SweepTable run_sweep(const BenchConfig& cfg);

struct AggregateRow {
  std::string method;
  int n = 0;
  double mean_delta = 0.0;
  double success_prob = 0.0;
  double hq_prob = 0.0;
  bool tts_defined = false;
  double tts_s = 0.0;
};

/// Aggregates a records file per (method, n) into aggregate.csv, a readable
/// summary.txt, and plot-ready fig_{delta,success,hq}.csv tables.
std::vector<AggregateRow> report(const std::string& records_path,
                                 const std::string& out_dir);

std::vector<RunRecord> read_records(const std::string& path);

}  // namespace ged
