#ifndef CPULSE_PROPAGATOR_HPP
#define CPULSE_PROPAGATOR_HPP

// SU(2) propagators of resonant pulses in Cayley-Klein form
//   U = [[a, b], [-conj(b), conj(a)]],   |a|^2 + |b|^2 = 1.
// The transition probability between the two states is |b|^2.

#include <complex>
#include <vector>

#include "cpulse/jet.hpp"
#include "cpulse/pulse.hpp"

namespace cpulse {

struct Propagator {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};
};

// | |a|^2 + |b|^2 - 1 |, zero for an exactly unitary propagator.
double unitarity_defect(const Propagator& u);

// Propagator of a single pulse whose actual area is area * (1 + eps):
// a = cos(h), b = -i e^{i phi} sin(h), h = (pi/2) area_pi (1 + eps).
Propagator pulse_propagator(const Pulse& pulse, double eps);

// Right-to-left product U_N ... U_1 (pulse 0 acts first).
Propagator compose(const CompositeSequence& seq, double eps);

// Transition probability |b|^2, clamped into [0, 1] against rounding.
double transition_probability(const Propagator& u);
double transition_probability(const CompositeSequence& seq, double eps);

// Population inversion w = 2p - 1 for a transition probability p in [0, 1].
double inversion(double p);

struct JetPropagator {
  Jet a;
  Jet b;
};

// Jets of the sequence propagator in eps, truncated at the given order >= 1.
JetPropagator jet_compose(const CompositeSequence& seq, int order);

// Real coefficients c[0..order] of the transition probability series
// P(eps) = sum_k c_k eps^k. Throws ConsistencyError if the imaginary residue
// of the underlying complex arithmetic exceeds 1e-12.
std::vector<double> probability_series(const CompositeSequence& seq, int order);

}  // namespace cpulse

#endif
