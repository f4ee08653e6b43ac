#ifndef CPULSE_CATALOG_HPP
#define CPULSE_CATALOG_HPP

// Pinned reference data: the tabulated variable-rotation phase assignments
// for 2 to 6 pulses at thirteen probability targets, together with the
// analytic generators that reproduce them and the cataloged twin bases.

#include <vector>

#include "cpulse/families.hpp"
#include "cpulse/pulse.hpp"

namespace cpulse::catalog {

struct VariableRotationRow {
  double p_target = 0.0;
  std::vector<double> phases_pi;  // full phase vector, leading entry 0
};

// Area pattern (units of pi) used by the tabulated class of a given count:
// 2: A A, 3: A B A, 4: A B B A, 5: A B B B A, 6: A B B B B A.
std::vector<double> tabulated_areas_pi(int pulses);

// Rows for pulse counts 2..6 at probability targets
// 1/10, 1/8, 1/6, 1/5, 1/4, 1/3, 1/2, 2/3, 3/4, 4/5, 5/6, 7/8, 9/10.
const std::vector<VariableRotationRow>& variable_rotation_rows(int pulses);

// Compensation order of the tabulated class (2, 4, 6, 8, 10 for 2..6 pulses).
int tabulated_order(int pulses);

// Analytic generator reproducing a tabulated row up to equivalence.
// Available for 2, 3, 4 and 6 pulses; the 5-pulse rows have no closed form.
bool has_generator(int pulses);
CompositeSequence generator(int pulses, double p_target);

// Half-pi bases appearing in the twin catalog.
enum class TwinBase {
  sym2,
  asym2,
  asym2_reversed,
  sym3,
  asym3,
  asym3_reversed,
};

CompositeSequence twin_base(TwinBase base);
const std::vector<TwinBase>& twin_bases();
const std::vector<double>& twin_theta_grid_pi();  // 1/4, 1/3, 1/2, 2/3, 3/4, 1
CompositeSequence cataloged_twin(TwinBase base, double theta_pi);

}  // namespace cpulse::catalog

#endif
