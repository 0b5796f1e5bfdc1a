#include "ged/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "ged/errors.hpp"
#include "ged/graph.hpp"
#include "ged/rng.hpp"
#include "ged/sa.hpp"
#include "ged/variational.hpp"

namespace fs = std::filesystem;

namespace ged {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw ParamError("config: expected boolean, got '" + v + "'");
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(c));
  return s;
}

}  // namespace

void apply_config_entry(BenchConfig& cfg, const std::string& raw_key,
                        const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  try {
    if (key == "n_range") {
      cfg.n_range.clear();
      for (const auto& t : split_list(value)) cfg.n_range.push_back(std::stoi(t));
    } else if (key == "edge_probs") {
      cfg.edge_probs.clear();
      for (const auto& t : split_list(value))
        cfg.edge_probs.push_back(std::stod(t));
    } else if (key == "alpha") {
      cfg.alpha = std::stod(value);
    } else if (key == "beta") {
      cfg.beta = std::stod(value);
    } else if (key == "beta_sweep") {
      cfg.beta_sweep.clear();
      for (const auto& t : split_list(value))
        cfg.beta_sweep.push_back(std::stod(t));
    } else if (key == "methods") {
      cfg.methods.clear();
      for (const auto& t : split_list(value)) {
        const std::string m = upper(t);
        if (m != "SA" && m != "VQE" && m != "QAOA")
          throw ParamError("config: unknown method '" + t + "'");
        cfg.methods.push_back(m);
      }
    } else if (key == "sa_shots") {
      cfg.sa_shots = std::stoi(value);
    } else if (key == "sa_t0") {
      cfg.sa_t0 = std::stod(value);
    } else if (key == "sa_decay") {
      cfg.sa_decay = std::stod(value);
    } else if (key == "sa_tmin") {
      cfg.sa_tmin = std::stod(value);
    } else if (key == "sa_time_per_run") {
      cfg.sa_time_per_run = std::stod(value);
    } else if (key == "vqe_p") {
      cfg.vqe_p = std::stoi(value);
    } else if (key == "qaoa_p") {
      cfg.qaoa_p = std::stoi(value);
    } else if (key == "restarts") {
      cfg.restarts = std::stoi(value);
    } else if (key == "shots") {
      cfg.shots = std::stoi(value);
    } else if (key == "budget") {
      cfg.budget = std::stoi(value);
    } else if (key == "tol") {
      cfg.tol = std::stod(value);
    } else if (key == "final_rotation_layer") {
      cfg.final_rotation_layer = parse_bool(value);
    } else if (key == "max_qubits") {
      cfg.max_qubits = std::stoi(value);
    } else if (key == "master_seed") {
      cfg.master_seed = std::stoull(value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else {
      throw ParamError("config: unknown key '" + key + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ParamError("config: bad value for '" + key + "': " + value);
  } catch (const std::out_of_range&) {
    throw ParamError("config: value out of range for '" + key + "'");
  }
}

BenchConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open config file: " + path);
  BenchConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParamError("config: expected 'key = value', got: " + t);
    apply_config_entry(cfg, t.substr(0, eq), t.substr(eq + 1));
  }
  return cfg;
}

std::string dataset_graph_path(const BenchConfig& cfg, int n, int p_idx) {
  return (fs::path(cfg.out_dir) /
          ("g_n" + std::to_string(n) + "_p" + std::to_string(p_idx) + ".json"))
      .string();
}

std::vector<std::string> gen_dataset(const BenchConfig& cfg) {
  if (cfg.n_range.empty()) throw ParamError("gen_dataset: empty n_range");
  if (cfg.edge_probs.empty())
    throw ParamError("gen_dataset: empty edge_probs");
  for (double p : cfg.edge_probs)
    if (!(p >= 0.0 && p <= 1.0))
      throw ParamError("gen_dataset: edge probability outside [0,1]");
  fs::create_directories(cfg.out_dir);
  std::vector<std::string> paths;
  for (int n : cfg.n_range) {
    for (size_t i = 0; i < cfg.edge_probs.size(); ++i) {
      const int idx = static_cast<int>(i) + 1;
      const uint64_t seed = derive_seed(cfg.master_seed, n, idx);
      const Graph g = random_graph(n, cfg.edge_probs[i], seed);
      const std::string path = dataset_graph_path(cfg, n, idx);
      write_graph(g, path);
      paths.push_back(path);
    }
  }
  return paths;
}

namespace {

void ensure_dataset(const BenchConfig& cfg) {
  for (int n : cfg.n_range)
    for (size_t i = 0; i < cfg.edge_probs.size(); ++i)
      if (!fs::exists(dataset_graph_path(cfg, n, static_cast<int>(i) + 1))) {
        gen_dataset(cfg);
        return;
      }
}

uint64_t task_seed(const BenchConfig& cfg, const std::string& method, int n,
                   int a, int b) {
  const uint64_t method_idx = method == "SA" ? 1 : method == "VQE" ? 2 : 3;
  return derive_seed(cfg.master_seed,
                     static_cast<uint64_t>(n) * 1000 + a * 10 + b, method_idx);
}

// Scans every sample for the lowest-energy one that decodes to a bijection.
// Returns (approx GED, delta) or (-1, 1.0) when nothing valid was seen.
std::pair<int, double> score_samples(const QuboProblem& q, int exact_s,
                                     const SampleSet& ss) {
  int approx = -1;
  double best_e = 0.0;
  for (int i = 0; i < ss.size(); ++i) {
    if (approx >= 0 && ss.energies[i] >= best_e) continue;
    const auto g = ged_from_solution(q, ss.samples[i]);
    if (g) {
      approx = *g;
      best_e = ss.energies[i];
    }
  }
  if (approx < 0) return {-1, 1.0};
  return {approx, relative_difference(exact_s, approx)};
}

struct PairTask {
  int n;
  int a, b;  // 1-based dataset indices
  std::string pair_id;
  Graph g1, g2;
};

std::vector<PairTask> load_pairs(const BenchConfig& cfg, int n) {
  const int count = static_cast<int>(cfg.edge_probs.size());
  std::vector<Graph> graphs;
  for (int i = 1; i <= count; ++i)
    graphs.push_back(read_graph(dataset_graph_path(cfg, n, i)));
  std::vector<PairTask> pairs;
  for (int a = 1; a <= count; ++a)
    for (int b = a; b <= count; ++b)
      pairs.push_back({n, a, b,
                       std::to_string(a) + "-" + std::to_string(b),
                       graphs[a - 1], graphs[b - 1]});
  return pairs;
}

}  // namespace

std::vector<RunRecord> read_records(const std::string& path) {
  std::vector<RunRecord> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  while (std::getline(in, line)) {
    if (line == record_csv_header() || trim(line).empty()) continue;
    records.push_back(record_from_csv(line));
  }
  return records;
}

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.n_range.empty()) throw ParamError("run_bench: empty n_range");
  if (cfg.methods.empty()) throw ParamError("run_bench: no methods enabled");
  ensure_dataset(cfg);

  BenchResult result;
  result.records_path = (fs::path(cfg.out_dir) / "records.csv").string();

  std::vector<RunRecord> done = read_records(result.records_path);
  std::set<std::string> done_keys;
  for (const auto& r : done)
    done_keys.insert(r.method + "|" + std::to_string(r.n) + "|" + r.pair_id);

  std::ofstream out(result.records_path, std::ios::app);
  if (!out)
    throw ParamError("cannot open records file: " + result.records_path);
  if (done.empty()) out << record_csv_header() << "\n" << std::flush;

  for (int n : cfg.n_range) {
    for (const PairTask& task : load_pairs(cfg, n)) {
      const ExactGedResult exact = exact_ged(task.g1, task.g2);
      const QuboProblem q =
          build_ged_problem(task.g1, task.g2, cfg.alpha, cfg.beta);

      for (const std::string& method : cfg.methods) {
        const std::string key =
            method + "|" + std::to_string(n) + "|" + task.pair_id;
        if (done_keys.count(key)) continue;

        RunRecord rec;
        rec.method = method;
        rec.n = n;
        rec.pair_id = task.pair_id;
        rec.exact_s = exact.value;
        try {
          if (method == "SA") {
            SaParams params;
            params.shots = cfg.sa_shots;
            params.t0 = cfg.sa_t0;
            params.decay = cfg.sa_decay;
            params.t_min = cfg.sa_tmin;
            params.seed = task_seed(cfg, method, n, task.a, task.b);
            const SampleSet ss = anneal(q, params);
            std::tie(rec.approx_s, rec.delta) =
                score_samples(q, exact.value, ss);
            rec.runs = cfg.sa_shots;
            rec.time_per_run_s = cfg.sa_time_per_run;
            rec.wall_time_s = rec.runs * rec.time_per_run_s;
            rec.config = "shots=" + std::to_string(cfg.sa_shots) +
                         ";alpha=" + fmt(cfg.alpha) + ";beta=" + fmt(cfg.beta);
          } else {
            VariationalOptions opts;
            opts.p = method == "VQE" ? cfg.vqe_p : cfg.qaoa_p;
            opts.restarts = cfg.restarts;
            opts.shots = cfg.shots;
            opts.seed = task_seed(cfg, method, n, task.a, task.b);
            opts.final_rotation_layer = cfg.final_rotation_layer;
            opts.max_qubits = cfg.max_qubits;
            opts.budget = cfg.budget;
            opts.tol = cfg.tol;
            const VariationalResult vr = run_variational(
                q,
                method == "VQE" ? VariationalMethod::VQE
                                : VariationalMethod::QAOA,
                opts);
            if (vr.decoded_ged) {
              rec.approx_s = *vr.decoded_ged;
              rec.delta = relative_difference(exact.value, rec.approx_s);
            } else {
              rec.approx_s = -1;
              rec.delta = 1.0;
            }
            rec.runs = cfg.restarts;
            rec.time_per_run_s = 0.0;
            rec.wall_time_s = 0.0;
            rec.config = "p=" + std::to_string(opts.p) +
                         ";restarts=" + std::to_string(cfg.restarts) +
                         ";shots=" + std::to_string(cfg.shots) +
                         ";alpha=" + fmt(cfg.alpha) + ";beta=" + fmt(cfg.beta);
          }
        } catch (const CapacityError& e) {
          ++result.capacity_skips;
          std::cerr << "skip method=" << method << " n=" << n
                    << " pair=" << task.pair_id << " reason=capacity msg=\""
                    << e.what() << "\"\n";
          continue;
        }
        out << record_to_csv(rec) << "\n" << std::flush;
        done.push_back(rec);
        done_keys.insert(key);
      }
    }
  }
  out.close();

  std::stable_sort(done.begin(), done.end(),
                   [](const RunRecord& x, const RunRecord& y) {
                     return std::tie(x.method, x.n, x.pair_id) <
                            std::tie(y.method, y.n, y.pair_id);
                   });
  std::ofstream sorted(result.records_path, std::ios::trunc);
  sorted << record_csv_header() << "\n";
  for (const auto& r : done) sorted << record_to_csv(r) << "\n";
  result.records = std::move(done);
  return result;
}

SweepTable run_sweep(const BenchConfig& cfg) {
  if (cfg.beta_sweep.empty()) throw ParamError("run_sweep: empty beta list");
  if (cfg.n_range.empty()) throw ParamError("run_sweep: empty n_range");
  ensure_dataset(cfg);

  SweepTable table;
  table.ns = cfg.n_range;
  table.betas = cfg.beta_sweep;
  for (int n : cfg.n_range) {
    const auto pairs = load_pairs(cfg, n);
    std::vector<double> row;
    for (size_t bi = 0; bi < cfg.beta_sweep.size(); ++bi) {
      const double beta = cfg.beta_sweep[bi];
      double delta_sum = 0.0;
      for (const PairTask& task : pairs) {
        const ExactGedResult exact = exact_ged(task.g1, task.g2);
        const QuboProblem q =
            build_ged_problem(task.g1, task.g2, cfg.alpha, beta);
        SaParams params;
        params.shots = cfg.sa_shots;
        params.t0 = cfg.sa_t0;
        params.decay = cfg.sa_decay;
        params.t_min = cfg.sa_tmin;
        params.seed = derive_seed(
            task_seed(cfg, "SA", n, task.a, task.b), bi);
        const SampleSet ss = anneal(q, params);
        delta_sum += score_samples(q, exact.value, ss).second;
      }
      row.push_back(delta_sum / static_cast<double>(pairs.size()));
    }
    table.mean_delta.push_back(row);
  }

  fs::create_directories(cfg.out_dir);
  std::ofstream out(fs::path(cfg.out_dir) / "sweep.csv");
  out << "n";
  for (double b : table.betas) out << ",beta=" << fmt(b);
  out << "\n";
  for (size_t i = 0; i < table.ns.size(); ++i) {
    out << table.ns[i];
    for (double d : table.mean_delta[i]) out << "," << fmt(d);
    out << "\n";
  }
  return table;
}

std::vector<AggregateRow> report(const std::string& records_path,
                                 const std::string& out_dir) {
  const std::vector<RunRecord> records = read_records(records_path);
  if (records.empty())
    throw ParamError("report: no records in " + records_path);

  std::map<std::pair<std::string, int>, std::vector<RunRecord>> groups;
  for (const auto& r : records) groups[{r.method, r.n}].push_back(r);

  std::vector<AggregateRow> rows;
  for (const auto& [key, recs] : groups) {
    AggregateRow row;
    row.method = key.first;
    row.n = key.second;
    double sum = 0.0, nominal = 0.0;
    for (const auto& r : recs) {
      sum += r.delta;
      nominal += static_cast<double>(r.runs) * r.time_per_run_s;
    }
    row.mean_delta = sum / recs.size();
    row.success_prob = success_probability(recs);
    row.hq_prob = hq_probability(recs);
    const auto t = tts(1, nominal / recs.size(), row.hq_prob);
    row.tts_defined = t.has_value();
    row.tts_s = t.value_or(0.0);
    rows.push_back(row);
  }

  fs::create_directories(out_dir);
  std::ofstream agg(fs::path(out_dir) / "aggregate.csv");
  agg << aggregate_csv_header() << "\n";
  for (const auto& r : rows) {
    agg << r.method << "," << r.n << "," << fmt(r.mean_delta) << ","
        << fmt(r.success_prob) << "," << fmt(r.hq_prob) << ","
        << (r.tts_defined ? fmt(r.tts_s) : "NA") << "\n";
  }

  std::ofstream summary(fs::path(out_dir) / "summary.txt");
  summary << "method      n   mean_delta   success   hq       tts_s\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof(line), "%-10s %2d   %-10.4f   %-7.3f   %-7.3f  %s\n",
                  r.method.c_str(), r.n, r.mean_delta, r.success_prob,
                  r.hq_prob, r.tts_defined ? fmt(r.tts_s).c_str() : "NA");
    summary << line;
  }

  // Plot-ready tables: one row per n, one column per method.
  std::set<std::string> methods;
  std::set<int> ns;
  for (const auto& r : rows) {
    methods.insert(r.method);
    ns.insert(r.n);
  }
  auto write_fig = [&](const std::string& name, auto getter) {
    std::ofstream f(fs::path(out_dir) / name);
    f << "n";
    for (const auto& m : methods) f << "," << m;
    f << "\n";
    for (int n : ns) {
      f << n;
      for (const auto& m : methods) {
        const auto it = std::find_if(rows.begin(), rows.end(),
                                     [&](const AggregateRow& r) {
                                       return r.method == m && r.n == n;
                                     });
        f << ",";
        if (it != rows.end()) f << fmt(getter(*it));
      }
      f << "\n";
    }
  };
  write_fig("fig_delta.csv",
            [](const AggregateRow& r) { return r.mean_delta; });
  write_fig("fig_success.csv",
            [](const AggregateRow& r) { return r.success_prob; });
  write_fig("fig_hq.csv", [](const AggregateRow& r) { return r.hq_prob; });
  return rows;
}

}  // namespace ged
