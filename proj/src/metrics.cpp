#include "ged/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ged/errors.hpp"

namespace ged {

double relative_difference(int exact_s, int approx_s) {
  if (exact_s < 0 || approx_s < 0)
    throw ParamError("relative_difference: inputs must be non-negative");
  if (exact_s == approx_s) return 0.0;
  return std::abs(approx_s - exact_s) /
         static_cast<double>(std::max(exact_s, approx_s));
}

double success_probability(const std::vector<RunRecord>& records) {
  if (records.empty())
    throw ParamError("success_probability: empty record set");
  int hits = 0;
  for (const auto& r : records)
    if (r.delta == 0.0) ++hits;
  return static_cast<double>(hits) / records.size();
}

double hq_probability(const std::vector<RunRecord>& records,
                      double threshold) {
  if (records.empty()) throw ParamError("hq_probability: empty record set");
  int hits = 0;
  for (const auto& r : records)
    if (r.delta <= threshold) ++hits;
  return static_cast<double>(hits) / records.size();
}

std::optional<double> tts(long runs, double time_per_run_s, double hq_prob) {
  if (runs < 0 || time_per_run_s < 0.0 || hq_prob < 0.0 || hq_prob > 1.0)
    throw ParamError("tts: invalid inputs");
  if (hq_prob == 0.0) return std::nullopt;
  return static_cast<double>(runs) * time_per_run_s / hq_prob;
}

ResourceReport resource_report(const ParamCircuit& c, int vertex_count) {
  if (vertex_count < 0) throw ParamError("resource_report: negative n");
  const int qubits = vertex_count * vertex_count;
  if (c.num_qubits != 0 && c.num_qubits != qubits)
    throw ParamError("resource_report: circuit width is not n^2");
  return {qubits, qubits, c.num_params, circuit_depth(c), circuit_size(c)};
}

std::string record_csv_header() {
  return "method,n,pair_id,exact,approx,delta,wall_time_s,runs,"
         "time_per_run_s,config";
}

static std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string record_to_csv(const RunRecord& r) {
  std::ostringstream out;
  out << r.method << "," << r.n << "," << r.pair_id << "," << r.exact_s << ","
      << r.approx_s << "," << fmt(r.delta) << "," << fmt(r.wall_time_s) << ","
      << r.runs << "," << fmt(r.time_per_run_s) << "," << r.config;
  return out.str();
}

RunRecord record_from_csv(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' && parts.size() < 9) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);  // config may itself contain commas (it is last)
  if (parts.size() != 10)
    throw ParamError("record csv: expected 10 columns, got line: " + line);
  RunRecord r;
  r.method = parts[0];
  r.n = std::stoi(parts[1]);
  r.pair_id = parts[2];
  r.exact_s = std::stoi(parts[3]);
  r.approx_s = std::stoi(parts[4]);
  r.delta = std::stod(parts[5]);
  r.wall_time_s = std::stod(parts[6]);
  r.runs = std::stol(parts[7]);
  r.time_per_run_s = std::stod(parts[8]);
  r.config = parts[9];
  return r;
}

std::string aggregate_csv_header() {
  return "method,n,mean_delta,success_prob,hq_prob,tts_s";
}

}  // namespace ged
