#include "cpulse/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "cpulse/errors.hpp"
#include "cpulse/families.hpp"
#include "cpulse/propagator.hpp"

namespace cpulse {
namespace {

CompositeSequence to_sequence(const SolveTemplate& tmpl, const std::vector<double>& phases_pi) {
  CompositeSequence seq;
  seq.label = "solve";
  seq.pulses.reserve(tmpl.areas_pi.size());
  for (std::size_t i = 0; i < tmpl.areas_pi.size(); ++i)
    seq.pulses.push_back({tmpl.areas_pi[i], phases_pi[i]});
  return seq;
}

// Objective (c0 - p_target, c1, ..., cK) at a free-phase vector.
Eigen::VectorXd eval_system(const SolveTemplate& tmpl, const Eigen::VectorXd& x, int K) {
  std::vector<double> free_phases(x.data(), x.data() + x.size());
  const std::vector<double> full = expand_phases(tmpl, free_phases);
  const std::vector<double> c = probability_series(to_sequence(tmpl, full), std::max(1, K));
  Eigen::VectorXd F(K + 1);
  F(0) = c[0] - tmpl.p_target;
  for (int k = 1; k <= K; ++k) F(k) = c[static_cast<std::size_t>(k)];
  return F;
}

struct GnOutcome {
  Eigen::VectorXd x;
  double residual = 0.0;
  bool converged = false;
};

// Damped Gauss-Newton least squares with a forward-difference Jacobian.
GnOutcome gauss_newton(const SolveTemplate& tmpl, Eigen::VectorXd x, int K,
                       int max_iterations) {
  constexpr double kStep = 1e-7;
  constexpr double kDone = 1e-13;
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd F = eval_system(tmpl, x, K);
  double fn = F.norm();
  for (int iter = 0; iter < max_iterations && fn > kDone; ++iter) {
    Eigen::MatrixXd J(F.size(), n);
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd xs = x;
      xs(j) += kStep;
      J.col(j) = (eval_system(tmpl, xs, K) - F) / kStep;
    }
    const Eigen::VectorXd delta = J.colPivHouseholderQr().solve(-F);
    if (!delta.allFinite()) break;
    double t = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving, t *= 0.5) {
      const Eigen::VectorXd xt = x + t * delta;
      const Eigen::VectorXd Ft = eval_system(tmpl, xt, K);
      const double ft = Ft.norm();
      if (ft < fn) {
        x = xt;
        F = Ft;
        fn = ft;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {x, fn, fn <= 1e-11};
}

int scan_achieved_order(const CompositeSequence& seq, int cap) {
  const std::vector<double> c = probability_series(seq, cap);
  for (int k = 1; k <= cap; ++k)
    if (std::abs(c[static_cast<std::size_t>(k)]) > 1e-7) return k;
  return cap + 1;
}

// The square system is annulled through c_{2f-1} during the search; the
// surplus equations are consistent at maximal-order roots and remove the
// rank deficiency that otherwise repels Newton from them.
int search_depth(const SolveTemplate& tmpl) {
  const int f = free_count(tmpl);
  const int M = annul_count(tmpl);
  return M == f - 1 ? 2 * f - 1 : M;
}

SolveResult finish_result(const SolveTemplate& tmpl, const Eigen::VectorXd& x) {
  std::vector<double> free_phases(x.data(), x.data() + x.size());
  const std::vector<double> full = expand_phases(tmpl, free_phases);
  SolveResult r;
  r.phases_pi = canonical_phases(tmpl.areas_pi, full);
  const std::vector<double> F = objective(tmpl, r.phases_pi);
  double sq = 0.0;
  for (double v : F) sq += v * v;
  r.residual_norm = std::sqrt(sq);
  const int cap = 2 * free_count(tmpl) + 1;
  r.achieved_order = scan_achieved_order(to_sequence(tmpl, r.phases_pi), cap);
  return r;
}

}  // namespace

void validate(const SolveTemplate& tmpl) {
  const std::size_t n = tmpl.areas_pi.size();
  if (n == 0) throw std::invalid_argument("solve template needs at least one pulse");
  if (tmpl.free_mask.size() != n || tmpl.fixed_phases_pi.size() != n)
    throw std::invalid_argument("solve template fields must have equal length");
  for (std::size_t i = 0; i < n; ++i) validate(Pulse{tmpl.areas_pi[i], tmpl.fixed_phases_pi[i]});
  if (!(tmpl.p_target >= 0.0 && tmpl.p_target <= 1.0))
    throw std::invalid_argument("target probability must lie in [0, 1]");
  const int f = free_count(tmpl);
  if (f < 1) throw std::invalid_argument("solve template needs at least one free phase");
  if (tmpl.annul_count >= 0 && tmpl.annul_count > f)
    throw std::invalid_argument("cannot annul more coefficients than free phases");
}

int free_count(const SolveTemplate& tmpl) {
  int f = 0;
  for (char m : tmpl.free_mask) f += m != 0;
  return f;
}

int annul_count(const SolveTemplate& tmpl) {
  return tmpl.annul_count >= 0 ? tmpl.annul_count : free_count(tmpl) - 1;
}

SolveTemplate variable_rotation_template(int pulses, double p_target) {
  if (pulses < 2) throw std::invalid_argument("search template needs at least two pulses");
  SolveTemplate tmpl;
  tmpl.areas_pi.assign(static_cast<std::size_t>(pulses), 1.0);
  tmpl.areas_pi.front() = tmpl.areas_pi.back() = 0.5;
  tmpl.free_mask.assign(static_cast<std::size_t>(pulses), 1);
  tmpl.free_mask.front() = 0;
  tmpl.fixed_phases_pi.assign(static_cast<std::size_t>(pulses), 0.0);
  tmpl.p_target = p_target;
  return tmpl;
}

std::vector<double> expand_phases(const SolveTemplate& tmpl,
                                  const std::vector<double>& free_phases_pi) {
  if (static_cast<int>(free_phases_pi.size()) != free_count(tmpl))
    throw std::invalid_argument("free phase vector has the wrong length");
  std::vector<double> full = tmpl.fixed_phases_pi;
  std::size_t j = 0;
  for (std::size_t i = 0; i < full.size(); ++i)
    if (tmpl.free_mask[i]) full[i] = free_phases_pi[j++];
  return full;
}

std::vector<double> objective(const SolveTemplate& tmpl,
                              const std::vector<double>& phases_pi) {
  validate(tmpl);
  if (phases_pi.size() != tmpl.areas_pi.size())
    throw std::invalid_argument("objective needs a full phase vector");
  const int M = annul_count(tmpl);
  const std::vector<double> c = probability_series(to_sequence(tmpl, phases_pi), std::max(1, M));
  std::vector<double> F(static_cast<std::size_t>(M) + 1);
  F[0] = c[0] - tmpl.p_target;
  for (int k = 1; k <= M; ++k) F[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)];
  return F;
}

std::vector<SolveResult> solve_phases(const SolveTemplate& tmpl, const SolveOptions& options) {
  validate(tmpl);
  if (options.restarts < 0) throw std::invalid_argument("restart count must be nonnegative");
  const int f = free_count(tmpl);
  const int depth = search_depth(tmpl);

  std::vector<Eigen::VectorXd> starts;
  starts.reserve(options.seeds.size() + static_cast<std::size_t>(options.restarts));
  for (const auto& seed_phases : options.seeds) {
    if (static_cast<int>(seed_phases.size()) != f)
      throw std::invalid_argument("solver seed has the wrong length");
    starts.push_back(Eigen::Map<const Eigen::VectorXd>(seed_phases.data(), f));
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0);
  for (int r = 0; r < options.restarts; ++r) {
    Eigen::VectorXd x(f);
    for (int j = 0; j < f; ++j) x(j) = phase(rng);
    starts.push_back(std::move(x));
  }

  std::vector<SolveResult> results;
  for (const Eigen::VectorXd& x0 : starts) {
    const GnOutcome out = gauss_newton(tmpl, x0, depth, options.max_iterations);
    if (!out.converged) continue;
    SolveResult cand = finish_result(tmpl, out.x);
    if (cand.residual_norm > options.residual_tol) continue;
    bool duplicate = false;
    for (const SolveResult& kept : results)
      if (phases_equivalent(tmpl.areas_pi, cand.phases_pi, kept.phases_pi,
                            options.dedup_tol_pi)) {
        duplicate = true;
        break;
      }
    if (!duplicate) results.push_back(std::move(cand));
  }

  std::sort(results.begin(), results.end(), [](const SolveResult& a, const SolveResult& b) {
    if (a.achieved_order != b.achieved_order) return a.achieved_order > b.achieved_order;
    return a.phases_pi < b.phases_pi;
  });
  for (std::size_t i = 0; i < results.size(); ++i)
    results[i].branch_id = static_cast<int>(i);
  return results;
}

SolveResult continue_branch(const SolveTemplate& tmpl, const std::vector<double>& phases_pi,
                            double p_to, double step) {
  validate(tmpl);
  if (!(p_to >= 0.0 && p_to <= 1.0))
    throw std::invalid_argument("target probability must lie in [0, 1]");
  if (!(step > 0.0)) throw std::invalid_argument("continuation step must be positive");
  if (phases_pi.size() != tmpl.areas_pi.size())
    throw std::invalid_argument("continuation needs a full phase vector");

  Eigen::VectorXd x(free_count(tmpl));
  int j = 0;
  for (std::size_t i = 0; i < phases_pi.size(); ++i)
    if (tmpl.free_mask[i]) x(j++) = phases_pi[i];

  const double span = p_to - tmpl.p_target;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / step)));
  SolveTemplate stage = tmpl;
  for (int s = 1; s <= steps; ++s) {
    stage.p_target = tmpl.p_target + span * s / steps;
    const GnOutcome out = gauss_newton(stage, x, search_depth(stage), 200);
    if (!out.converged)
      throw SolveError("continuation lost the branch near p = " + std::to_string(stage.p_target));
    x = out.x;
  }
  SolveResult r = finish_result(stage, x);
  if (r.residual_norm > 1e-10)
    throw SolveError("continuation finished with residual above tolerance");
  return r;
}

}  // namespace cpulse
