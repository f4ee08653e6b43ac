#include "cpulse/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

#include "cpulse/propagator.hpp"

namespace cpulse {
namespace {

std::string format_label(const char* fmt, ...) {
  char buf[160];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

void check_probability(double p_target) {
  if (!(p_target >= 0.0 && p_target <= 1.0))
    throw std::invalid_argument("target probability must lie in [0, 1]");
}

CompositeSequence build(std::string label, const std::vector<double>& areas_pi,
                        const std::vector<double>& phases_pi) {
  CompositeSequence seq;
  seq.label = std::move(label);
  seq.pulses.reserve(areas_pi.size());
  for (std::size_t i = 0; i < areas_pi.size(); ++i)
    seq.pulses.push_back({areas_pi[i], canonical_phase_pi(phases_pi[i])});
  return seq;
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::prime_two: return "prime2";
    case Family::prime_three: return "prime3";
    case Family::prime_four_abba: return "prime4-abba";
    case Family::prime_four_aaaa: return "prime4-aaaa";
    case Family::symmetric_half_pi: return "sym";
    case Family::asymmetric_half_pi: return "asym";
    case Family::twin_symmetric: return "twin-sym";
    case Family::twin_asymmetric: return "twin-asym";
    case Family::twin_asymmetric_reversed: return "twin-asym-rev";
    case Family::bb1: return "bb1";
    case Family::levitt_ernst: return "levitt-ernst";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_string(const std::string& name) {
  static const std::pair<const char*, Family> table[] = {
      {"prime2", Family::prime_two},
      {"prime3", Family::prime_three},
      {"prime4-abba", Family::prime_four_abba},
      {"prime4-aaaa", Family::prime_four_aaaa},
      {"sym", Family::symmetric_half_pi},
      {"asym", Family::asymmetric_half_pi},
      {"twin-sym", Family::twin_symmetric},
      {"twin-asym", Family::twin_asymmetric},
      {"twin-asym-rev", Family::twin_asymmetric_reversed},
      {"bb1", Family::bb1},
      {"levitt-ernst", Family::levitt_ernst},
  };
  for (const auto& [key, value] : table)
    if (name == key) return value;
  throw std::invalid_argument("unknown family name: " + name);
}

double target_probability(double theta_pi) {
  const double s = std::sin(0.5 * theta_pi * detail::real_constants<double>::pi());
  return s * s;
}

double theta_pi_from_probability(double p_target) {
  check_probability(p_target);
  return theta_pi_from_probability_t(p_target);
}

CompositeSequence prime_two(double p_target, int variant) {
  check_probability(p_target);
  if (variant != 0 && variant != 1)
    throw std::invalid_argument("prime_two variant must be 0 or 1");
  return build(format_label("prime2 P=%.6g v%d", p_target, variant), {0.5, 0.5},
               prime_two_phases(p_target, variant));
}

CompositeSequence prime_three(double p_target, int variant) {
  check_probability(p_target);
  if (variant < 1 || variant > 4)
    throw std::invalid_argument("prime_three variant must be in 1..4");
  return build(format_label("prime3 P=%.6g v%d", p_target, variant), {0.5, 1.0, 0.5},
               prime_three_phases(p_target, variant));
}

CompositeSequence prime_four(double p_target, FourPulseClass cls, char variant) {
  check_probability(p_target);
  if (variant != 'a' && variant != 'b')
    throw std::invalid_argument("prime_four variant must be 'a' or 'b'");
  if (cls == FourPulseClass::abba)
    return build(format_label("abba P=%.6g v%c", p_target, variant), {0.5, 1.0, 1.0, 0.5},
                 prime_four_abba_phases(p_target, variant));
  return build(format_label("aaaa P=%.6g v%c", p_target, variant), {0.5, 0.5, 0.5, 0.5},
               prime_four_aaaa_phases(p_target, variant));
}

CompositeSequence symmetric_half_pi(int n) {
  if (n < 2) throw std::invalid_argument("symmetric half-pi family needs n >= 2");
  std::vector<double> areas(static_cast<std::size_t>(n), 1.0);
  areas.front() = areas.back() = 0.5;
  std::vector<double> phases(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    phases[static_cast<std::size_t>(k)] = static_cast<double>(k) * k / (2.0 * (n - 1));
  return build(format_label("sym-half-pi N=%d", n), areas, phases);
}

CompositeSequence asymmetric_half_pi(int n) {
  if (n < 1) throw std::invalid_argument("asymmetric half-pi family needs n >= 1");
  std::vector<double> areas(static_cast<std::size_t>(n), 1.0);
  areas.front() = 0.5;
  std::vector<double> phases(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    phases[static_cast<std::size_t>(k)] = 2.0 * k * k / (2.0 * n - 1.0);
  return build(format_label("asym-half-pi N=%d", n), areas, phases);
}

CompositeSequence asymmetric_half_pi_reversed(int n) {
  CompositeSequence rev = reversed(asymmetric_half_pi(n));
  const double shift = -rev.pulses.front().phase_pi;
  for (Pulse& p : rev.pulses) p.phase_pi = canonical_phase_pi(p.phase_pi + shift);
  rev.label = format_label("asym-rev-half-pi N=%d", n);
  return rev;
}

CompositeSequence reversed(const CompositeSequence& seq) {
  CompositeSequence out = seq;
  std::reverse(out.pulses.begin(), out.pulses.end());
  out.label = seq.label.empty() ? "reversed" : seq.label + " reversed";
  return out;
}

CompositeSequence twin(const CompositeSequence& base, double theta_pi) {
  validate(base);
  if (!(theta_pi >= 0.0 && theta_pi <= 2.0))
    throw std::invalid_argument("twin rotation must lie in [0, 2] pi");
  const double p0 = transition_probability(base, 0.0);
  if (std::abs(p0 - 0.5) > 1e-9)
    throw std::invalid_argument("twin construction needs a base with probability 1/2 at zero error");
  CompositeSequence out = base;
  out.label = format_label("twin(%s, theta=%.6gpi)", base.label.c_str(), theta_pi);
  const double shift = 1.0 - theta_pi;
  for (auto it = base.pulses.rbegin(); it != base.pulses.rend(); ++it)
    out.pulses.push_back({it->area_pi, canonical_phase_pi(it->phase_pi + shift)});
  return out;
}

CompositeSequence bb1(double theta_pi) {
  if (!(theta_pi > 0.0 && theta_pi <= 4.0))
    throw std::invalid_argument("bb1 rotation must lie in (0, 4] pi");
  const double chi = bb1_chi_pi(theta_pi);
  return build(format_label("bb1 theta=%.6gpi", theta_pi), {theta_pi, 1.0, 1.0, 1.0, 1.0},
               {0.0, chi, 3.0 * chi, 3.0 * chi, chi});
}

CompositeSequence levitt_ernst(int n) {
  if (n == 4)
    return build("levitt-ernst N=4", {0.5, 0.5, 0.5, 0.5}, {0.0, -0.5, 0.0, 0.5});
  if (n == 8)
    return build("levitt-ernst N=8", {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
                 {0.0, 1.5, 0.0, 0.5, 1.0, 0.5, 0.0, 0.5});
  throw std::invalid_argument("levitt_ernst is defined for n = 4 or 8");
}

CompositeSequence make_sequence(const FamilyDescriptor& desc) {
  switch (desc.family) {
    case Family::prime_two:
      return prime_two(desc.p_target, desc.variant < 0 ? 0 : desc.variant);
    case Family::prime_three:
      return prime_three(desc.p_target, desc.variant < 0 ? 4 : desc.variant);
    case Family::prime_four_abba:
      return prime_four(desc.p_target, FourPulseClass::abba, desc.variant == 0 ? 'a' : 'b');
    case Family::prime_four_aaaa:
      return prime_four(desc.p_target, FourPulseClass::aaaa, desc.variant == 1 ? 'b' : 'a');
    case Family::symmetric_half_pi: return symmetric_half_pi(desc.n);
    case Family::asymmetric_half_pi: return asymmetric_half_pi(desc.n);
    case Family::twin_symmetric: return twin(symmetric_half_pi(desc.n), desc.theta_pi);
    case Family::twin_asymmetric: return twin(asymmetric_half_pi(desc.n), desc.theta_pi);
    case Family::twin_asymmetric_reversed:
      return twin(asymmetric_half_pi_reversed(desc.n), desc.theta_pi);
    case Family::bb1: return bb1(desc.theta_pi);
    case Family::levitt_ernst: return levitt_ernst(desc.n);
  }
  throw std::invalid_argument("unknown family");
}

CompositeSequence negated_phases(const CompositeSequence& seq) {
  CompositeSequence out = seq;
  for (Pulse& p : out.pulses) p.phase_pi = -p.phase_pi;
  return out;
}

CompositeSequence shifted_phases(const CompositeSequence& seq, double shift_pi) {
  CompositeSequence out = seq;
  for (Pulse& p : out.pulses) p.phase_pi += shift_pi;
  return out;
}

CompositeSequence with_winding_offsets(const CompositeSequence& seq,
                                       const std::vector<int>& turns) {
  if (turns.size() != seq.pulses.size())
    throw std::invalid_argument("winding offsets must match the pulse count");
  CompositeSequence out = seq;
  for (std::size_t i = 0; i < turns.size(); ++i) out.pulses[i].phase_pi += 2.0 * turns[i];
  return out;
}

double phase_distance_pi(double a_pi, double b_pi) {
  double d = std::fmod(std::abs(a_pi - b_pi), 2.0);
  return d > 1.0 ? 2.0 - d : d;
}

bool areas_palindromic(const std::vector<double>& areas_pi) {
  std::size_t i = 0, j = areas_pi.size();
  while (i + 1 < j) {
    if (std::abs(areas_pi[i] - areas_pi[j - 1]) > 1e-12) return false;
    ++i;
    --j;
  }
  return true;
}

namespace {

std::vector<double> anchored(std::vector<double> phases) {
  const double first = phases.empty() ? 0.0 : phases.front();
  for (double& p : phases) p = canonical_phase_pi(p - first);
  return phases;
}

}  // namespace

std::vector<std::vector<double>> equivalence_orbit(const std::vector<double>& areas_pi,
                                                   const std::vector<double>& phases_pi) {
  if (areas_pi.size() != phases_pi.size())
    throw std::invalid_argument("areas and phases must have equal length");
  std::vector<std::vector<double>> raw;
  raw.push_back(phases_pi);
  if (areas_palindromic(areas_pi)) {
    raw.push_back(phases_pi);
    std::reverse(raw.back().begin(), raw.back().end());
  }
  const std::size_t direct = raw.size();
  for (std::size_t i = 0; i < direct; ++i) {
    raw.push_back(raw[i]);
    for (double& p : raw.back()) p = -p;
  }
  std::vector<std::vector<double>> orbit;
  orbit.reserve(raw.size());
  for (auto& member : raw) orbit.push_back(anchored(std::move(member)));
  return orbit;
}

bool phases_equivalent(const std::vector<double>& areas_pi,
                       const std::vector<double>& phases_pi,
                       const std::vector<double>& target_phases_pi, double tol_pi) {
  if (phases_pi.size() != target_phases_pi.size()) return false;
  const std::vector<double> target = anchored(target_phases_pi);
  for (const auto& member : equivalence_orbit(areas_pi, phases_pi)) {
    bool all = true;
    for (std::size_t i = 0; i < member.size() && all; ++i)
      all = phase_distance_pi(member[i], target[i]) <= tol_pi;
    if (all) return true;
  }
  return false;
}

std::vector<double> canonical_phases(const std::vector<double>& areas_pi,
                                     const std::vector<double>& phases_pi) {
  auto orbit = equivalence_orbit(areas_pi, phases_pi);
  return *std::min_element(orbit.begin(), orbit.end());
}

}  // namespace cpulse
