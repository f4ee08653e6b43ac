#include "cpulse/catalog.hpp"

#include <stdexcept>

namespace cpulse::catalog {
namespace {

constexpr double kP[13] = {1.0 / 10, 1.0 / 8,  1.0 / 6, 1.0 / 5, 1.0 / 4,
                           1.0 / 3,  1.0 / 2,  2.0 / 3, 3.0 / 4, 4.0 / 5,
                           5.0 / 6,  7.0 / 8,  9.0 / 10};

std::vector<VariableRotationRow> make_rows(int pulses) {
  // Phases in units of pi, printed to four decimals where not exact.
  static constexpr double two[13] = {0.7952, 0.7699,    0.7323, 0.7048, 2.0 / 3,
                                     0.6082, 1.0 / 2,   0.3918, 1.0 / 3, 0.2952,
                                     0.2677, 0.2301,    0.2048};
  static constexpr double three[13][2] = {
      {0.8204, 1.4359}, {0.8127, 1.3954}, {0.8022, 1.3367}, {0.7952, 1.2952},
      {0.7859, 1.2386}, {0.7728, 1.1537}, {3.0 / 4, 1.0},   {0.7272, 0.8463},
      {0.7141, 0.7614}, {0.7048, 0.7048}, {0.6978, 0.6633}, {0.6873, 0.6047},
      {0.6796, 0.5641}};
  static constexpr double four[13][2] = {
      {1.4618, 0.7952},  {1.4366, 0.7699}, {1.3990, 0.7323}, {1.3715, 0.7048},
      {4.0 / 3, 2.0 / 3}, {1.2748, 0.6082}, {7.0 / 6, 1.0 / 2}, {1.0585, 0.3918},
      {1.0, 1.0 / 3},    {0.9618, 0.2952}, {0.9344, 0.2677}, {0.8967, 0.2301},
      {0.8715, 0.2048}};
  static constexpr double five[13][4] = {
      {0.5033, 1.6110, 1.1032, 1.7861}, {0.4891, 1.5988, 1.1258, 1.8022},
      {0.4698, 1.5821, 1.1599, 1.8275}, {0.4569, 1.5710, 1.1850, 1.8467},
      {0.4401, 1.5564, 1.2201, 1.8743}, {0.4162, 1.5357, 1.2743, 1.9177},
      {3.0 / 8, 3.0 / 2, 11.0 / 8, 0.0}, {0.3338, 1.4643, 1.4757, 0.0823},
      {0.3099, 1.4436, 1.5299, 0.1257}, {0.2931, 1.4291, 1.5650, 0.1533},
      {0.2802, 1.4179, 1.5901, 0.1725}, {0.2609, 1.4013, 1.6242, 0.1979},
      {0.2467, 1.3890, 1.6468, 0.2139}};
  static constexpr double six[13][3] = {
      {0.3952, 1.1952, 0.7952},    {0.3699, 1.1699, 0.7699},
      {0.3323, 1.1323, 0.7323},    {0.3048, 1.1048, 0.7048},
      {4.0 / 15, 16.0 / 15, 2.0 / 3}, {0.2082, 1.0082, 0.6082},
      {1.0 / 10, 9.0 / 10, 1.0 / 2}, {1.9918, 0.7918, 0.3918},
      {29.0 / 15, 11.0 / 15, 1.0 / 3}, {1.8952, 0.6952, 0.2952},
      {1.8677, 0.6677, 0.2677},    {1.8301, 0.6301, 0.2301},
      {1.8048, 0.6048, 0.2048}};

  std::vector<VariableRotationRow> rows;
  rows.reserve(13);
  for (int i = 0; i < 13; ++i) {
    VariableRotationRow row;
    row.p_target = kP[i];
    switch (pulses) {
      case 2: row.phases_pi = {0.0, two[i]}; break;
      case 3: row.phases_pi = {0.0, three[i][0], three[i][1]}; break;
      case 4: row.phases_pi = {0.0, 2.0 / 3, four[i][0], four[i][1]}; break;
      case 5:
        row.phases_pi = {0.0, five[i][0], five[i][1], five[i][2], five[i][3]};
        break;
      case 6:
        row.phases_pi = {0.0, 2.0 / 5, 8.0 / 5, six[i][0], six[i][1], six[i][2]};
        break;
      default: throw std::invalid_argument("tabulated rows cover 2 to 6 pulses");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<double> tabulated_areas_pi(int pulses) {
  if (pulses < 2 || pulses > 6)
    throw std::invalid_argument("tabulated rows cover 2 to 6 pulses");
  std::vector<double> areas(static_cast<std::size_t>(pulses), 1.0);
  areas.front() = areas.back() = 0.5;
  return areas;
}

const std::vector<VariableRotationRow>& variable_rotation_rows(int pulses) {
  static const std::vector<VariableRotationRow> tables[5] = {
      make_rows(2), make_rows(3), make_rows(4), make_rows(5), make_rows(6)};
  if (pulses < 2 || pulses > 6)
    throw std::invalid_argument("tabulated rows cover 2 to 6 pulses");
  return tables[pulses - 2];
}

int tabulated_order(int pulses) {
  switch (pulses) {
    case 2: return 2;
    case 3: return 4;
    case 4: return 6;
    case 5: return 8;
    case 6: return 10;
    default: throw std::invalid_argument("tabulated rows cover 2 to 6 pulses");
  }
}

bool has_generator(int pulses) {
  return pulses == 2 || pulses == 3 || pulses == 4 || pulses == 6;
}

CompositeSequence generator(int pulses, double p_target) {
  switch (pulses) {
    case 2: return prime_two(p_target, 0);
    case 3: return prime_three(p_target, 4);
    case 4: return prime_four(p_target, FourPulseClass::abba, 'b');
    case 6: return twin(asymmetric_half_pi(3), theta_pi_from_probability(p_target));
    default: throw std::invalid_argument("no closed-form generator for this pulse count");
  }
}

CompositeSequence twin_base(TwinBase base) {
  switch (base) {
    case TwinBase::sym2: return symmetric_half_pi(2);
    case TwinBase::asym2: return asymmetric_half_pi(2);
    case TwinBase::asym2_reversed: return asymmetric_half_pi_reversed(2);
    case TwinBase::sym3: return symmetric_half_pi(3);
    case TwinBase::asym3: return asymmetric_half_pi(3);
    case TwinBase::asym3_reversed: return asymmetric_half_pi_reversed(3);
  }
  throw std::invalid_argument("unknown twin base");
}

const std::vector<TwinBase>& twin_bases() {
  static const std::vector<TwinBase> bases = {
      TwinBase::sym2,  TwinBase::asym2, TwinBase::asym2_reversed,
      TwinBase::sym3,  TwinBase::asym3, TwinBase::asym3_reversed};
  return bases;
}

const std::vector<double>& twin_theta_grid_pi() {
  static const std::vector<double> grid = {0.25, 1.0 / 3, 0.5, 2.0 / 3, 0.75, 1.0};
  return grid;
}

CompositeSequence cataloged_twin(TwinBase base, double theta_pi) {
  return twin(twin_base(base), theta_pi);
}

}  // namespace cpulse::catalog
