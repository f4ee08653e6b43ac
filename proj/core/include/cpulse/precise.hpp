#ifndef CPULSE_PRECISE_HPP
#define CPULSE_PRECISE_HPP

// Multiprecision evaluation path (120 decimal digits, MPFR backed). High-order
// probability coefficients emerge from massive cancellation between large
// intermediate jet coefficients, and order verification needs deviations far
// below 1e-16, so doubles are not enough there.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <vector>

#include "cpulse/detail/series_engine.hpp"
#include "cpulse/pulse.hpp"

namespace cpulse::precise {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>,
                                           boost::multiprecision::et_off>;

struct PrecisePulse {
  Real area_pi;
  Real phase_pi;
};

using Sequence = std::vector<PrecisePulse>;

const Real& pi();

// Exact embedding of a double-precision sequence.
Sequence lift(const CompositeSequence& seq);

// Convenience constructor for pulses whose phases are exact rational
// multiples of pi: phase = num/den in units of pi.
PrecisePulse rational_pulse(int area_num, int area_den, long phase_num, long phase_den);

Real transition_probability(const Sequence& seq, const Real& eps);

// Coefficients c[0..order] of the transition probability series.
std::vector<Real> probability_series(const Sequence& seq, int order);

}  // namespace cpulse::precise

namespace cpulse::detail {

template <>
struct real_constants<cpulse::precise::Real> {
  static cpulse::precise::Real pi() { return cpulse::precise::pi(); }
};

}  // namespace cpulse::detail

#endif
