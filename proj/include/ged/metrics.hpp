#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ged/qsim.hpp"

namespace ged {

/// Outcome of one solver run on one graph pair. Timing fields hold the
/// nominal solver time (runs x time_per_run), which keeps record files
/// reproducible byte for byte; measured wall time is reported on the
/// console instead.
struct RunRecord {
  std::string method;  // SA, VQE, QAOA, EXACT
  int n = 0;
  std::string pair_id;
  int exact_s = 0;
  int approx_s = 0;  // -1 when no valid solution was found
  double delta = 0.0;
  double wall_time_s = 0.0;
  long runs = 0;
  double time_per_run_s = 0.0;
  std::string config;
};

struct ResourceReport {
  int logical_vars = 0;
  int qubits = 0;
  int num_params = 0;
  int depth = 0;
  int size = 0;
};

/// 0 when the values agree, |approx - exact| / max otherwise; always in
/// [0,1]. Inputs must be non-negative.
double relative_difference(int exact_s, int approx_s);

/// Fraction of records with delta == 0.
double success_probability(const std::vector<RunRecord>& records);

/// Fraction of records with delta <= threshold (inclusive).
double hq_probability(const std::vector<RunRecord>& records,
                      double threshold = 0.2);

/// runs * time_per_run / hq_prob; nullopt when hq_prob is 0 (no
/// high-quality solution was ever found, so the time is undefined).
std::optional<double> tts(long runs, double time_per_run_s, double hq_prob);

/// Depth/size are counted on the native gate set {H, RX, RY, RZ, RZZ, CX},
/// not on a transpiled basis.
ResourceReport resource_report(const ParamCircuit& c, int vertex_count);

std::string record_csv_header();
std::string record_to_csv(const RunRecord& r);
RunRecord record_from_csv(const std::string& line);

std::string aggregate_csv_header();

}  // namespace ged
