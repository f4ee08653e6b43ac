#include "cpulse/precise.hpp"

#include <stdexcept>

namespace cpulse::precise {

namespace {

std::vector<detail::PulseView<Real>> views(const Sequence& seq) {
  std::vector<detail::PulseView<Real>> out;
  out.reserve(seq.size());
  for (const PrecisePulse& p : seq) out.push_back({p.area_pi, p.phase_pi});
  return out;
}

}  // namespace

const Real& pi() {
  static const Real value = boost::math::constants::pi<Real>();
  return value;
}

Sequence lift(const CompositeSequence& seq) {
  validate(seq);
  Sequence out;
  out.reserve(seq.pulses.size());
  for (const Pulse& p : seq.pulses) out.push_back({Real(p.area_pi), Real(p.phase_pi)});
  return out;
}

PrecisePulse rational_pulse(int area_num, int area_den, long phase_num, long phase_den) {
  if (area_den == 0 || phase_den == 0) throw std::invalid_argument("zero denominator");
  return {Real(area_num) / area_den, Real(phase_num) / phase_den};
}

Real transition_probability(const Sequence& seq, const Real& eps) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  auto [a, b] = detail::compose_point(views(seq), eps);
  return b.re * b.re + b.im * b.im;
}

std::vector<Real> probability_series(const Sequence& seq, int order) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  if (order < 1) throw std::invalid_argument("probability_series requires order >= 1");
  detail::Series<Real> a, b;
  detail::compose_series(views(seq), static_cast<std::size_t>(order), a, b);
  detail::Series<Real> p = detail::series_abs_squared(b);
  std::vector<Real> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.re);
  return out;
}

}  // namespace cpulse::precise
