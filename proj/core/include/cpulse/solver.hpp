#ifndef CPULSE_SOLVER_HPP
#define CPULSE_SOLVER_HPP

// Numerical phase solver. Given a fixed area pattern, it searches for phase
// assignments that hit a target probability at zero error and annul leading
// probability-series coefficients.
//
// The square system (c0 - P, c1, ..., c_{f-1}) with f free phases is rank
// deficient exactly at the maximal-order solutions, because the odd
// coefficients above the annulled block vanish there automatically. Plain
// Newton therefore converges to low-order roots almost surely. The search
// instead runs damped Gauss-Newton least squares on the consistent extension
// (c0 - P, c1, ..., c_{2f-1}), whose solution set is the maximal-order branch
// family; the requested residual is evaluated on the original objective.

#include <cstdint>
#include <vector>

#include "cpulse/pulse.hpp"

namespace cpulse {

struct SolveTemplate {
  std::vector<double> areas_pi;         // fixed pulse areas, units of pi
  std::vector<char> free_mask;          // nonzero entries mark unknown phases
  std::vector<double> fixed_phases_pi;  // used where the mask is zero
  double p_target = 0.5;
  int annul_count = -1;                 // coefficients c1..cM to annul; -1 = free count - 1
};

void validate(const SolveTemplate& tmpl);  // throws std::invalid_argument
int free_count(const SolveTemplate& tmpl);
int annul_count(const SolveTemplate& tmpl);

// Tabulated search setup: areas A B ... B A, first phase pinned to zero,
// square objective.
SolveTemplate variable_rotation_template(int pulses, double p_target);

// Full phase vector from the values of the free phases, in mask order.
std::vector<double> expand_phases(const SolveTemplate& tmpl,
                                  const std::vector<double>& free_phases_pi);

// Objective (c0 - P, c1, ..., cM) evaluated at a full phase vector.
std::vector<double> objective(const SolveTemplate& tmpl,
                              const std::vector<double>& phases_pi);

struct SolveOptions {
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  int restarts = 200;
  int max_iterations = 120;
  double residual_tol = 1e-10;  // acceptance bound on the requested objective
  double dedup_tol_pi = 1e-6;
  std::vector<std::vector<double>> seeds;  // extra free-phase starting points
};

struct SolveResult {
  std::vector<double> phases_pi;  // full canonical phase vector
  double residual_norm = 0.0;     // Euclidean norm of the requested objective
  int achieved_order = 0;         // first eps power with a surviving coefficient
  int branch_id = 0;
};

// Multistart search. Returns distinct converged branches, highest achieved
// order first, deterministic for a fixed seed. Throws SolveError only on
// invalid input; an empty result means no branch converged.
std::vector<SolveResult> solve_phases(const SolveTemplate& tmpl,
                                      const SolveOptions& options = {});

// Tracks the branch through a solution at the template's target toward
// p_to in probability increments of at most `step`, polishing at each stop.
// Throws SolveError if the branch cannot be continued.
SolveResult continue_branch(const SolveTemplate& tmpl,
                            const std::vector<double>& phases_pi, double p_to,
                            double step = 0.05);

}  // namespace cpulse

#endif
