#ifndef CPULSE_FAMILIES_HPP
#define CPULSE_FAMILIES_HPP

// Analytic composite pulse families for error-robust variable rotations.
//
// The variable-rotation ("prime") families drive a transition with target
// probability P at zero error and flatten the response in the area error eps:
//   prime_two    A A        probability P cos^2(pi eps / 2) on the plateau
//   prime_three  A B A      P (1 - sin^4(pi eps / 2))
//   prime_four   A B B A    P (1 - sin^6(pi eps / 2))   (ABBA class)
//                A A A A    P (1 - sin^4(pi eps / 2))   (AAAA class)
// where A is a nominal half-pi pulse and B a nominal pi pulse.
//
// The half-pi families produce P = 1/2 with deviation 0.5 sin^(2N-2) (sym)
// or 0.5 sin^(2N-1) (asym) of (pi eps / 2). The twin construction doubles the
// error order of any half-pi base sequence while steering the probability to
// an arbitrary target.

#include <string>
#include <vector>

#include "cpulse/detail/series_engine.hpp"
#include "cpulse/pulse.hpp"

namespace cpulse {

enum class Family {
  prime_two,
  prime_three,
  prime_four_abba,
  prime_four_aaaa,
  symmetric_half_pi,
  asymmetric_half_pi,
  twin_symmetric,
  twin_asymmetric,
  twin_asymmetric_reversed,
  bb1,
  levitt_ernst,
};

const char* to_string(Family family);
Family family_from_string(const std::string& name);  // throws std::invalid_argument

struct FamilyDescriptor {
  Family family = Family::symmetric_half_pi;
  int n = 2;               // pulse count (half-pi families, levitt_ernst) or base size (twins)
  double p_target = 0.5;   // target probability (prime families)
  double theta_pi = 0.5;   // target rotation (twins, bb1), units of pi
  int variant = -1;        // family specific; -1 selects the default
};

// Transition probability of an ideal rotation by theta: sin^2(theta / 2).
double target_probability(double theta_pi);
// Inverse map, principal branch: theta in [0, pi].
double theta_pi_from_probability(double p_target);

// Two pulses A_0 A_phi2 with phi2 = pi - theta (variant 0, the tabulated
// branch) or pi + theta (variant 1).
CompositeSequence prime_two(double p_target, int variant = 0);

// Three pulses with alpha = theta / 2, beta = acos(sqrt(P) - sqrt(1 - P)):
//   1: A_beta B_alpha A_{-beta}        2: A_{-beta} B_alpha A_beta
//   3: A_0 B_{alpha-beta} A_{-2 beta}  4: A_0 B_{alpha+beta} A_{2 beta}
// Variant 4 matches the tabulated rows.
CompositeSequence prime_three(double p_target, int variant = 4);

enum class FourPulseClass { abba, aaaa };

// Four pulses. ABBA class (third order):
//   a: A_0 B_{2pi/3} B_{theta-pi/3} A_{theta+pi}
//   b: A_0 B_{2pi/3} B_{5pi/3-theta} A_{pi-theta}   (tabulated)
// AAAA class (second order, half the area):
//   a: A_0 A_{pi/2} A_{theta-pi/2} A_{theta+pi}
//   b: A_0 A_{3pi/2} A_{theta+pi/2} A_{theta+pi}
CompositeSequence prime_four(double p_target, FourPulseClass cls, char variant);

// Half-pi families. Symmetric: A B ... B A with phases (k-1)^2 pi / (2(N-1)),
// N >= 2. Asymmetric: A B ... B with phases 2 (k-1)^2 pi / (2N - 1), N >= 1.
CompositeSequence symmetric_half_pi(int n);
CompositeSequence asymmetric_half_pi(int n);

// Asymmetric sequence reversed and globally shifted so the first phase is 0
// (the third half-pi base used by the twin catalog).
CompositeSequence asymmetric_half_pi_reversed(int n);

// Pulse order reversal. The reversed sequence has propagator (conj(a), b)
// when the forward one has (a, b), hence the same transition probability.
CompositeSequence reversed(const CompositeSequence& seq);

// Twin construction: base followed by the reversed base with all phases
// shifted by pi - theta. Requires the base to produce probability 1/2 at
// eps = 0 (checked to 1e-9); the result has probability
// 4 p (1-p) sin^2(theta/2) with p the base profile, so the error order of
// the base doubles.
CompositeSequence twin(const CompositeSequence& base, double theta_pi);

// Reference sequences: the constant-rotation sequence Theta_0 B_chi B_3chi
// B_3chi B_chi with chi = acos(-theta/(4 pi)), and the fixed half-pi
// sequences of 4 and 8 pulses built from quarter-pi phase steps.
CompositeSequence bb1(double theta_pi);
CompositeSequence levitt_ernst(int n);  // n in {4, 8}

CompositeSequence make_sequence(const FamilyDescriptor& desc);

// Probability-preserving transforms.
CompositeSequence negated_phases(const CompositeSequence& seq);
CompositeSequence shifted_phases(const CompositeSequence& seq, double shift_pi);
CompositeSequence with_winding_offsets(const CompositeSequence& seq,
                                       const std::vector<int>& turns);  // adds 2 pi k_i

// Circular distance between two phases, in units of pi, range [0, 1].
double phase_distance_pi(double a_pi, double b_pi);

bool areas_palindromic(const std::vector<double>& areas_pi);

// All phase vectors reachable by probability-preserving transforms that keep
// the area pattern (identity and negation, order reversal when the areas are
// palindromic), each anchored to a leading phase of 0 and reduced mod 2.
std::vector<std::vector<double>> equivalence_orbit(const std::vector<double>& areas_pi,
                                                   const std::vector<double>& phases_pi);

// True if some orbit member matches the target phases (same anchoring)
// within tol_pi per phase.
bool phases_equivalent(const std::vector<double>& areas_pi,
                       const std::vector<double>& phases_pi,
                       const std::vector<double>& target_phases_pi, double tol_pi);

// Lexicographically smallest orbit member, a canonical branch representative.
std::vector<double> canonical_phases(const std::vector<double>& areas_pi,
                                     const std::vector<double>& phases_pi);

// Phase formulas parameterized over the real type, so verification code can
// build the variable-rotation families in multiprecision.
template <class R>
R theta_pi_from_probability_t(const R& p_target) {
  using std::acos;
  return acos(R(1) - R(2) * p_target) / detail::real_constants<R>::pi();
}

template <class R>
std::vector<R> prime_two_phases(const R& p_target, int variant = 0) {
  const R th = theta_pi_from_probability_t(p_target);
  return {R(0), variant == 0 ? R(1) - th : R(1) + th};
}

template <class R>
std::vector<R> prime_three_phases(const R& p_target, int variant = 4) {
  using std::acos;
  using std::sqrt;
  const R th = theta_pi_from_probability_t(p_target);
  const R al = th / R(2);
  const R be = acos(sqrt(p_target) - sqrt(R(1) - p_target)) / detail::real_constants<R>::pi();
  switch (variant) {
    case 1: return {be, al, R(0) - be};
    case 2: return {R(0) - be, al, be};
    case 3: return {R(0), al - be, R(0) - R(2) * be};
    default: return {R(0), al + be, R(2) * be};
  }
}

template <class R>
std::vector<R> prime_four_abba_phases(const R& p_target, char variant) {
  const R th = theta_pi_from_probability_t(p_target);
  const R two_thirds = R(2) / R(3);
  if (variant == 'a') return {R(0), two_thirds, th - R(1) / R(3), th + R(1)};
  return {R(0), two_thirds, R(5) / R(3) - th, R(1) - th};
}

template <class R>
std::vector<R> prime_four_aaaa_phases(const R& p_target, char variant) {
  const R th = theta_pi_from_probability_t(p_target);
  if (variant == 'a') return {R(0), R(1) / R(2), th - R(1) / R(2), th + R(1)};
  return {R(0), R(3) / R(2), th + R(1) / R(2), th + R(1)};
}

template <class R>
R bb1_chi_pi(const R& theta_pi) {
  using std::acos;
  return acos(R(0) - theta_pi / R(4)) / detail::real_constants<R>::pi();
}

}  // namespace cpulse

#endif
