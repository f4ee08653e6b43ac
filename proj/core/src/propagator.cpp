#include "cpulse/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpulse/detail/series_engine.hpp"
#include "cpulse/errors.hpp"

namespace cpulse {

namespace {

std::vector<detail::PulseView<double>> views(const CompositeSequence& seq) {
  std::vector<detail::PulseView<double>> out;
  out.reserve(seq.pulses.size());
  for (const Pulse& p : seq.pulses) out.push_back({p.area_pi, p.phase_pi});
  return out;
}

}  // namespace

double unitarity_defect(const Propagator& u) {
  return std::abs(std::norm(u.a) + std::norm(u.b) - 1.0);
}

Propagator pulse_propagator(const Pulse& pulse, double eps) {
  validate(pulse);
  const double h = std::numbers::pi * pulse.area_pi * (1.0 + eps) / 2.0;
  const double phi = std::numbers::pi * pulse.phase_pi;
  const double sh = std::sin(h);
  return {{std::cos(h), 0.0}, {std::sin(phi) * sh, -std::cos(phi) * sh}};
}

Propagator compose(const CompositeSequence& seq, double eps) {
  validate(seq);
  auto [a, b] = detail::compose_point(views(seq), eps);
  return {{a.re, a.im}, {b.re, b.im}};
}

double transition_probability(const Propagator& u) {
  return std::clamp(std::norm(u.b), 0.0, 1.0);
}

double transition_probability(const CompositeSequence& seq, double eps) {
  return transition_probability(compose(seq, eps));
}

double inversion(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("transition probability must lie in [0, 1]");
  return 2.0 * p - 1.0;
}

JetPropagator jet_compose(const CompositeSequence& seq, int order) {
  validate(seq);
  if (order < 1) throw std::invalid_argument("jet_compose requires order >= 1");
  detail::Series<double> a, b;
  detail::compose_series(views(seq), static_cast<std::size_t>(order), a, b);
  std::vector<std::complex<double>> ca(a.size()), cb(b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    ca[k] = {a[k].re, a[k].im};
    cb[k] = {b[k].re, b[k].im};
  }
  return {Jet(std::move(ca)), Jet(std::move(cb))};
}

std::vector<double> probability_series(const CompositeSequence& seq, int order) {
  validate(seq);
  if (order < 1) throw std::invalid_argument("probability_series requires order >= 1");
  detail::Series<double> a, b;
  detail::compose_series(views(seq), static_cast<std::size_t>(order), a, b);
  detail::Series<double> p = detail::series_abs_squared(b);
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (std::abs(p[k].im) > 1e-12) {
      throw ConsistencyError("probability series has imaginary residue above 1e-12");
    }
    out[k] = p[k].re;
  }
  return out;
}

}  // namespace cpulse
