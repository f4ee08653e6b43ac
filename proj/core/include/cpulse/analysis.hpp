#ifndef CPULSE_ANALYSIS_HPP
#define CPULSE_ANALYSIS_HPP

// Robustness analysis: excitation profiles, error-compensation order
// certification, robustness windows and family comparisons.

#include <string>
#include <vector>

#include "cpulse/precise.hpp"
#include "cpulse/pulse.hpp"

namespace cpulse {

struct ExcitationProfile {
  std::vector<double> eps;
  std::vector<double> probability;
};

// Transition probability sampled on a uniform error grid (points >= 2).
ExcitationProfile profile(const CompositeSequence& seq, double eps_min, double eps_max,
                          int points);

struct OrderOptions {
  int max_order = 25;      // highest series coefficient examined
  double coeff_rtol = 1e-8;  // survival threshold, relative to the largest coefficient
  double slope_tol = 0.2;  // allowed mismatch between log-log slope and order
  double fit_eps_min = 1e-3;
  double fit_eps_max = 1e-2;
  int fit_points = 9;
};

struct OrderReport {
  int order = 0;                     // first eps power with a surviving coefficient
  double leading_coefficient = 0.0;  // series coefficient at that power
  double slope = 0.0;                // independent log-log fit of the deviation
  bool slope_consistent = false;
};

// Certifies the compensation order of a sequence. The series coefficients
// and the direct composition both run in 120-digit arithmetic; the fitted
// deviation subtracts the sub-threshold polynomial left by double-rounded
// phases, which would otherwise mask high orders. Throws ConsistencyError
// when no coefficient survives up to max_order.
OrderReport analyze_order(const precise::Sequence& seq, const OrderOptions& options = {});
OrderReport analyze_order(const CompositeSequence& seq, const OrderOptions& options = {});

// analyze_order plus hard expectations; throws ConsistencyError on mismatch
// or on an inconsistent slope.
OrderReport verify_order(const precise::Sequence& seq, int expected_order,
                         const OrderOptions& options = {});
OrderReport verify_order(const CompositeSequence& seq, int expected_order,
                         const OrderOptions& options = {});

struct WindowOptions {
  double eps_max = 1.0;     // scan limit
  int guard_points = 2001;  // coarse grid guarding against non-monotone profiles
  double refine_width = 1e-10;  // bisection stops below this interval width
};

struct RobustnessReport {
  double half_width = 0.0;  // largest e with |P(eps) - P(0)| <= tol for all |eps| <= e
  double p_center = 0.0;    // P(0)
};

RobustnessReport robustness_window(const CompositeSequence& seq, double tolerance,
                                   const WindowOptions& options = {});

enum class HalfPiFamily { symmetric, asymmetric };

// Closed forms for the half-pi families: probability
// 1/2 -+ 1/2 sin^m(pi eps / 2) with m = 2N-2 (symmetric, minus sign) or
// m = 2N-1 (asymmetric, sign of eps), and the induced robustness window.
double half_pi_probability(HalfPiFamily family, int n, double eps);
double half_pi_window(HalfPiFamily family, int n, double tolerance);

// Smallest pulse count whose closed-form window reaches eps_req.
// Throws SolveError if n_max is not enough.
int min_pulses_for_window(HalfPiFamily family, double eps_req, double tolerance,
                          int n_max = 200);

struct CompareEntry {
  std::string label;
  double p_center = 0.0;
  double max_abs_deviation = 0.0;  // over the band
};

struct CompareReport {
  double band = 0.2;  // deviations scanned over |eps| <= band
  std::vector<CompareEntry> entries;
};

// Ranks sequences by worst-case deviation from their common central
// probability. All sequences must share P(0) within 1e-6.
CompareReport compare(const std::vector<CompositeSequence>& seqs, double band = 0.2,
                      int points = 4001);

}  // namespace cpulse

#endif
