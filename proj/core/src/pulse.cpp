#include "cpulse/pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace cpulse {

void validate(const Pulse& pulse) {
  if (!std::isfinite(pulse.area_pi) || pulse.area_pi <= 0.0) {
    throw std::invalid_argument("pulse area must be positive and finite");
  }
  if (!std::isfinite(pulse.phase_pi)) {
    throw std::invalid_argument("pulse phase must be finite");
  }
}

void validate(const CompositeSequence& seq) {
  if (seq.pulses.empty()) {
    throw std::invalid_argument("composite sequence must contain at least one pulse");
  }
  for (const Pulse& p : seq.pulses) validate(p);
}

double canonical_phase_pi(double phase_pi) {
  double r = std::fmod(phase_pi, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 2.0) r = 0.0;  // fmod can round up to the period for tiny negatives
  return r;
}

double total_area_pi(const CompositeSequence& seq) {
  double sum = 0.0;
  for (const Pulse& p : seq.pulses) sum += p.area_pi;
  return sum;
}

std::vector<double> areas_pi(const CompositeSequence& seq) {
  std::vector<double> out;
  out.reserve(seq.pulses.size());
  for (const Pulse& p : seq.pulses) out.push_back(p.area_pi);
  return out;
}

std::vector<double> phases_pi(const CompositeSequence& seq) {
  std::vector<double> out;
  out.reserve(seq.pulses.size());
  for (const Pulse& p : seq.pulses) out.push_back(p.phase_pi);
  return out;
}

CompositeSequence with_phases(const CompositeSequence& seq,
                              const std::vector<double>& new_phases_pi) {
  if (new_phases_pi.size() != seq.pulses.size()) {
    throw std::invalid_argument("phase vector size does not match pulse count");
  }
  CompositeSequence out = seq;
  for (std::size_t i = 0; i < out.pulses.size(); ++i) {
    out.pulses[i].phase_pi = new_phases_pi[i];
  }
  return out;
}

}  // namespace cpulse
