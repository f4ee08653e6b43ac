#include "cpulse/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cpulse/errors.hpp"
#include "cpulse/propagator.hpp"

namespace cpulse {
namespace {

using precise::Real;

double to_double(const Real& x) { return x.convert_to<double>(); }

void check_grid(double lo, double hi, int points) {
  if (!(hi > lo)) throw std::invalid_argument("grid needs eps_max > eps_min");
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
}

}  // namespace

ExcitationProfile profile(const CompositeSequence& seq, double eps_min, double eps_max,
                          int points) {
  validate(seq);
  check_grid(eps_min, eps_max, points);
  ExcitationProfile out;
  out.eps.reserve(static_cast<std::size_t>(points));
  out.probability.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double e = eps_min + (eps_max - eps_min) * i / (points - 1);
    out.eps.push_back(e);
    out.probability.push_back(transition_probability(seq, e));
  }
  return out;
}

OrderReport analyze_order(const precise::Sequence& seq, const OrderOptions& options) {
  if (options.max_order < 1) throw std::invalid_argument("max_order must be at least 1");
  if (!(options.coeff_rtol > 0.0)) throw std::invalid_argument("coeff_rtol must be positive");
  if (!(options.fit_eps_max > options.fit_eps_min && options.fit_eps_min > 0.0))
    throw std::invalid_argument("fit range must satisfy 0 < fit_eps_min < fit_eps_max");
  if (options.fit_points < 2) throw std::invalid_argument("fit needs at least two points");

  const std::vector<Real> c = precise::probability_series(seq, options.max_order);
  Real scale(1);
  for (int k = 1; k <= options.max_order; ++k)
    scale = (std::max)(scale, abs(c[static_cast<std::size_t>(k)]));

  OrderReport report;
  for (int k = 1; k <= options.max_order; ++k)
    if (abs(c[static_cast<std::size_t>(k)]) > options.coeff_rtol * scale) {
      report.order = k;
      break;
    }
  if (report.order == 0)
    throw ConsistencyError("no probability coefficient survives up to the scanned order");
  report.leading_coefficient = to_double(c[static_cast<std::size_t>(report.order)]);

  // Independent route: fit |P(eps) - P(0) - L(eps)| against eps on a log grid,
  // where L collects the sub-threshold coefficients below the detected order.
  const Real p0 = precise::transition_probability(seq, Real(0));
  const double lmin = std::log(options.fit_eps_min);
  const double lmax = std::log(options.fit_eps_max);
  std::vector<double> xs, ys;
  for (int j = 0; j < options.fit_points; ++j) {
    const double e = std::exp(lmin + (lmax - lmin) * j / (options.fit_points - 1));
    const Real eps(e);
    Real leak(0);
    for (int k = report.order - 1; k >= 1; --k)
      leak = (leak + c[static_cast<std::size_t>(k)]) * eps;
    const Real dev = abs(precise::transition_probability(seq, eps) - p0 - leak);
    if (dev == 0) continue;
    xs.push_back(std::log(e));
    ys.push_back(to_double(log(dev)));
  }
  if (xs.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    report.slope = sxy / sxx;
    report.slope_consistent = std::abs(report.slope - report.order) <= options.slope_tol;
  }
  return report;
}

OrderReport analyze_order(const CompositeSequence& seq, const OrderOptions& options) {
  validate(seq);
  return analyze_order(precise::lift(seq), options);
}

OrderReport verify_order(const precise::Sequence& seq, int expected_order,
                         const OrderOptions& options) {
  const OrderReport report = analyze_order(seq, options);
  if (report.order != expected_order)
    throw ConsistencyError("compensation order " + std::to_string(report.order) +
                           " does not match the expected " + std::to_string(expected_order));
  if (!report.slope_consistent)
    throw ConsistencyError("deviation slope " + std::to_string(report.slope) +
                           " is inconsistent with order " + std::to_string(report.order));
  return report;
}

OrderReport verify_order(const CompositeSequence& seq, int expected_order,
                         const OrderOptions& options) {
  validate(seq);
  return verify_order(precise::lift(seq), expected_order, options);
}

RobustnessReport robustness_window(const CompositeSequence& seq, double tolerance,
                                   const WindowOptions& options) {
  validate(seq);
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(options.eps_max > 0.0 && options.eps_max <= 1.0))
    throw std::invalid_argument("eps_max must lie in (0, 1]");
  if (options.guard_points < 2) throw std::invalid_argument("guard grid needs two points");

  RobustnessReport report;
  report.p_center = transition_probability(seq, 0.0);
  const auto exceeds = [&](double e) {
    return std::abs(transition_probability(seq, e) - report.p_center) > tolerance ||
           std::abs(transition_probability(seq, -e) - report.p_center) > tolerance;
  };

  const int G = options.guard_points;
  int first_bad = -1;
  for (int i = 1; i < G; ++i)
    if (exceeds(options.eps_max * i / (G - 1))) {
      first_bad = i;
      break;
    }
  if (first_bad < 0) {
    report.half_width = options.eps_max;
    return report;
  }
  double lo = options.eps_max * (first_bad - 1) / (G - 1);
  double hi = options.eps_max * first_bad / (G - 1);
  while (hi - lo > options.refine_width) {
    const double mid = 0.5 * (lo + hi);
    (exceeds(mid) ? hi : lo) = mid;
  }
  report.half_width = lo;
  return report;
}

double half_pi_probability(HalfPiFamily family, int n, double eps) {
  const double s = std::sin(0.5 * detail::real_constants<double>::pi() * eps);
  if (family == HalfPiFamily::symmetric) {
    if (n < 2) throw std::invalid_argument("symmetric half-pi family needs n >= 2");
    return 0.5 - 0.5 * std::pow(s * s, n - 1);
  }
  if (n < 1) throw std::invalid_argument("asymmetric half-pi family needs n >= 1");
  return 0.5 + 0.5 * std::pow(s, 2 * n - 1);
}

double half_pi_window(HalfPiFamily family, int n, double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int m = family == HalfPiFamily::symmetric ? 2 * n - 2 : 2 * n - 1;
  if (m < 1) throw std::invalid_argument("pulse count too small for this family");
  const double arg = std::pow(2.0 * tolerance, 1.0 / m);
  if (arg >= 1.0) return 1.0;
  return 2.0 / detail::real_constants<double>::pi() * std::asin(arg);
}

int min_pulses_for_window(HalfPiFamily family, double eps_req, double tolerance, int n_max) {
  if (!(eps_req > 0.0 && eps_req < 1.0))
    throw std::invalid_argument("required window must lie in (0, 1)");
  const int n0 = family == HalfPiFamily::symmetric ? 2 : 1;
  for (int n = n0; n <= n_max; ++n)
    if (half_pi_window(family, n, tolerance) >= eps_req) return n;
  throw SolveError("window not reachable within the pulse budget");
}

CompareReport compare(const std::vector<CompositeSequence>& seqs, double band, int points) {
  if (seqs.empty()) throw std::invalid_argument("compare needs at least one sequence");
  if (!(band > 0.0)) throw std::invalid_argument("band must be positive");
  if (points < 2) throw std::invalid_argument("compare needs at least two grid points");

  CompareReport report;
  report.band = band;
  for (const CompositeSequence& seq : seqs) {
    validate(seq);
    CompareEntry entry;
    entry.label = seq.label;
    entry.p_center = transition_probability(seq, 0.0);
    if (!report.entries.empty() &&
        std::abs(entry.p_center - report.entries.front().p_center) > 1e-6)
      throw std::invalid_argument("sequences target different central probabilities");
    for (int i = 0; i < points; ++i) {
      const double e = -band + 2.0 * band * i / (points - 1);
      entry.max_abs_deviation = (std::max)(
          entry.max_abs_deviation, std::abs(transition_probability(seq, e) - entry.p_center));
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace cpulse
