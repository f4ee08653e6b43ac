#ifndef CPULSE_PULSE_HPP
#define CPULSE_PULSE_HPP

// Resonant pulses and composite sequences. All areas and phases are kept in
// units of pi, so a nominal half-pi pulse has area_pi = 0.5 and a pi pulse
// has area_pi = 1. A systematic area error eps scales every pulse area by
// (1 + eps).

#include <string>
#include <vector>

namespace cpulse {

struct Pulse {
  double area_pi = 0.5;   // nominal pulse area, units of pi, must be > 0
  double phase_pi = 0.0;  // relative drive phase, units of pi
};

struct CompositeSequence {
  std::string label;
  std::vector<Pulse> pulses;  // pulses[0] acts first
};

// Throw std::invalid_argument if a pulse (or any pulse of a sequence) has a
// non-positive or non-finite area, or a non-finite phase. An empty sequence
// is rejected as well.
void validate(const Pulse& pulse);
void validate(const CompositeSequence& seq);

// Map a phase into the canonical interval [0, 2). Used for display and for
// comparisons, never applied silently during computation.
double canonical_phase_pi(double phase_pi);

double total_area_pi(const CompositeSequence& seq);
std::vector<double> areas_pi(const CompositeSequence& seq);
std::vector<double> phases_pi(const CompositeSequence& seq);

// Copy of seq with the same areas and the given phases (size must match).
CompositeSequence with_phases(const CompositeSequence& seq,
                              const std::vector<double>& new_phases_pi);

}  // namespace cpulse

#endif
