#include "ged/sa.hpp"

#include <cmath>

#include "ged/errors.hpp"
#include "ged/rng.hpp"

namespace ged {

SaParams resolve_sa_params(const QuboProblem& q, SaParams params) {
  if (params.t0 <= 0.0) {
    double scale = q.max_abs_coeff();
    params.t0 = 10.0 * (scale > 0.0 ? scale : 1.0);
  }
  if (params.proposals_per_restart <= 0)
    params.proposals_per_restart = 10 * q.num_vars() * q.num_vars();
  if (params.decay <= 0.0)
    params.decay = std::exp(std::log(params.t_min / params.t0) /
                            params.proposals_per_restart);
  return params;
}

namespace {

// One restart. The local field f[l] = Q_ll + sum_m Q(l,m) x_m makes the
// energy change of flipping bit l equal to (1-2x_l)*f[l]; rejected
// proposals are O(1), accepted ones O(num_vars).
struct Restart {
  const QuboProblem& q;
  std::vector<uint8_t> x;
  std::vector<double> field;
  double e;

  explicit Restart(const QuboProblem& problem, Rng& rng) : q(problem) {
    const int nv = q.num_vars();
    x.resize(nv);
    for (int l = 0; l < nv; ++l) x[l] = rng.uniform() < 0.5 ? 1 : 0;
    field.assign(nv, 0.0);
    for (int l = 0; l < nv; ++l) {
      field[l] = q.coeff(l, l);
      for (int m = 0; m < nv; ++m)
        if (m != l && x[m]) field[l] += q.pair_coeff(l, m);
    }
    e = q.offset();
    for (int l = 0; l < nv; ++l) {
      if (!x[l]) continue;
      e += q.coeff(l, l);
      for (int m = l + 1; m < nv; ++m)
        if (x[m]) e += q.coeff(l, m);
    }
  }

  double delta(int l) const { return (x[l] ? -1.0 : 1.0) * field[l]; }

  void flip(int l) {
    const double sign = x[l] ? -1.0 : 1.0;
    e += sign * field[l];
    x[l] ^= 1;
    for (int m = 0; m < q.num_vars(); ++m)
      if (m != l) field[m] += sign * q.pair_coeff(m, l);
  }
};

}  // namespace

SampleSet anneal(const QuboProblem& q, const SaParams& raw_params,
                 const SaObserver* observer) {
  if (q.num_vars() == 0) throw ParamError("anneal: empty problem");
  const SaParams params = resolve_sa_params(q, raw_params);
  if (!(params.decay > 0.0 && params.decay < 1.0))
    throw ParamError("anneal: decay must lie in (0,1)");
  if (!(params.t_min > 0.0 && params.t_min < params.t0))
    throw ParamError("anneal: need 0 < t_min < t0");
  if (params.shots < 1) throw ParamError("anneal: shots must be >= 1");

  SampleSet out;
  out.samples.resize(params.shots);
  out.energies.resize(params.shots);

  for (int shot = 0; shot < params.shots; ++shot) {
    Rng rng(derive_seed(params.seed, shot));
    Restart state(q, rng);
    for (double t = params.t0; t > params.t_min; t *= params.decay) {
      const int l = rng.uniform_int(q.num_vars());
      const double de = state.delta(l);
      const double e_before = state.e;
      bool accepted = de <= 0.0;
      if (!accepted) accepted = std::exp(-de / t) > rng.uniform();
      if (accepted) state.flip(l);
      if (observer && observer->on_step)
        observer->on_step(shot, t, e_before, state.e, accepted);
    }
    out.samples[shot].bits = std::move(state.x);
    out.energies[shot] = state.e;
  }
  return out;
}

std::pair<Assignment, double> best(const SampleSet& ss) {
  if (ss.size() == 0) throw ParamError("best: empty sample set");
  int best_idx = 0;
  for (int i = 1; i < ss.size(); ++i)
    if (ss.energies[i] < ss.energies[best_idx]) best_idx = i;
  return {ss.samples[best_idx], ss.energies[best_idx]};
}

}  // namespace ged
