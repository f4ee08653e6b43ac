#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cpulse/analysis.hpp"
#include "cpulse/catalog.hpp"
#include "cpulse/families.hpp"
#include "cpulse/propagator.hpp"

using namespace cpulse;

namespace {

constexpr double kPi = std::numbers::pi;

double sin_half(double eps) { return std::sin(0.5 * kPi * eps); }

void check_profile(const CompositeSequence& seq, double (*expected)(double, double), double p,
                   double tol = 1e-13) {
  for (int i = 0; i <= 100; ++i) {
    const double e = -1.0 + 0.02 * i;
    CHECK(std::abs(transition_probability(seq, e) - expected(e, p)) < tol);
  }
}

double plateau2(double e, double p) {
  const double c = std::cos(0.5 * kPi * e);
  return p * c * c;
}
double plateau3(double e, double p) { return p * (1.0 - std::pow(sin_half(e), 4)); }
double plateau4(double e, double p) { return p * (1.0 - std::pow(sin_half(e), 6)); }

}  // namespace

TEST_CASE("half-pi families have the documented phase laws") {
  const CompositeSequence s3 = symmetric_half_pi(3);
  CHECK(phases_pi(s3) == std::vector<double>{0.0, 0.25, 1.0});
  CHECK(areas_pi(s3) == std::vector<double>{0.5, 1.0, 0.5});

  const CompositeSequence a3 = asymmetric_half_pi(3);
  CHECK(phases_pi(a3) == std::vector<double>{0.0, 0.4, 1.6});
  CHECK(areas_pi(a3) == std::vector<double>{0.5, 1.0, 1.0});

  const CompositeSequence r2 = asymmetric_half_pi_reversed(2);
  CHECK(areas_pi(r2) == std::vector<double>{1.0, 0.5});
  CHECK(phases_pi(r2)[0] == 0.0);
  CHECK(phases_pi(r2)[1] == doctest::Approx(4.0 / 3));

  CHECK_THROWS_AS(symmetric_half_pi(1), std::invalid_argument);
  CHECK_THROWS_AS(asymmetric_half_pi(0), std::invalid_argument);
}

TEST_CASE("half-pi families follow their closed-form profiles") {
  for (int n = 2; n <= 8; ++n) {
    const CompositeSequence sym = symmetric_half_pi(n);
    const CompositeSequence asym = asymmetric_half_pi(n);
    for (int i = 0; i <= 80; ++i) {
      const double e = -1.0 + 0.025 * i;
      CHECK(std::abs(transition_probability(sym, e) -
                     half_pi_probability(HalfPiFamily::symmetric, n, e)) < 1e-13);
      CHECK(std::abs(transition_probability(asym, e) -
                     half_pi_probability(HalfPiFamily::asymmetric, n, e)) < 1e-13);
    }
  }
}

TEST_CASE("variable rotation families stay on the plateau profile") {
  for (double p : {0.1, 0.37, 0.5, 0.83, 1.0}) {
    check_profile(prime_two(p, 0), plateau2, p);
    check_profile(prime_two(p, 1), plateau2, p);
    for (int v = 1; v <= 4; ++v) check_profile(prime_three(p, v), plateau3, p);
    check_profile(prime_four(p, FourPulseClass::abba, 'a'), plateau4, p);
    check_profile(prime_four(p, FourPulseClass::abba, 'b'), plateau4, p);
    check_profile(prime_four(p, FourPulseClass::aaaa, 'a'), plateau3, p);
    check_profile(prime_four(p, FourPulseClass::aaaa, 'b'), plateau3, p);
  }
  CHECK_THROWS_AS(prime_two(1.2, 0), std::invalid_argument);
  CHECK_THROWS_AS(prime_two(0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(prime_three(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(prime_four(0.5, FourPulseClass::abba, 'c'), std::invalid_argument);
}

TEST_CASE("rotation angle and probability are inverse maps") {
  for (double p : {0.0, 0.25, 0.5, 0.9, 1.0})
    CHECK(target_probability(theta_pi_from_probability(p)) == doctest::Approx(p));
  CHECK(theta_pi_from_probability(0.5) == doctest::Approx(0.5));
  CHECK_THROWS_AS(theta_pi_from_probability(-0.1), std::invalid_argument);
}

TEST_CASE("twin construction has the documented structure") {
  // base A_0 B_{2/3} doubled into A_0 B_{2/3} B_{5/3-theta} A_{1-theta}
  for (double th : {0.25, 0.5, 2.0 / 3, 1.0}) {
    const CompositeSequence tw = twin(asymmetric_half_pi(2), th);
    CHECK(areas_pi(tw) == std::vector<double>{0.5, 1.0, 1.0, 0.5});
    const std::vector<double> ph = phases_pi(tw);
    CHECK(ph[1] == doctest::Approx(2.0 / 3));
    CHECK(ph[2] == doctest::Approx(canonical_phase_pi(5.0 / 3 - th)));
    CHECK(ph[3] == doctest::Approx(canonical_phase_pi(1.0 - th)));
  }
  const CompositeSequence tws = twin(symmetric_half_pi(2), 0.25);
  CHECK(phases_pi(tws) == std::vector<double>{0.0, 0.5, 1.25, 0.75});

  // the base must produce probability 1/2 at zero error
  CHECK_THROWS_AS(twin(prime_two(0.3, 0), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(twin(asymmetric_half_pi(2), -0.1), std::invalid_argument);
}

TEST_CASE("twin probability identity") {
  const CompositeSequence base = asymmetric_half_pi(3);
  const double th = 2.0 / 3;
  const CompositeSequence tw = twin(base, th);
  const double s2 = std::pow(std::sin(0.5 * kPi * th), 2);
  for (int i = 0; i <= 100; ++i) {
    const double e = -1.0 + 0.02 * i;
    const double p = transition_probability(base, e);
    CHECK(std::abs(transition_probability(tw, e) - 4.0 * p * (1.0 - p) * s2) < 1e-13);
  }
}

TEST_CASE("reference sequences") {
  const CompositeSequence b = bb1(0.5);
  CHECK(areas_pi(b) == std::vector<double>{0.5, 1.0, 1.0, 1.0, 1.0});
  const double chi = 0.5398930876747683;
  CHECK(b.pulses[1].phase_pi == doctest::Approx(chi).epsilon(1e-12));
  CHECK(b.pulses[2].phase_pi == doctest::Approx(3 * chi).epsilon(1e-12));
  CHECK(b.pulses[4].phase_pi == doctest::Approx(chi).epsilon(1e-12));
  CHECK(transition_probability(b, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(bb1(0.0), std::invalid_argument);
  CHECK_THROWS_AS(bb1(4.5), std::invalid_argument);

  const CompositeSequence le4 = levitt_ernst(4);
  CHECK(phases_pi(le4) == std::vector<double>{0.0, 1.5, 0.0, 0.5});
  const CompositeSequence aaaa = prime_four(0.5, FourPulseClass::aaaa, 'a');
  const CompositeSequence le8 = levitt_ernst(8);
  const CompositeSequence tw = twin(le4, 0.5);
  for (int i = 0; i <= 40; ++i) {
    const double e = -1.0 + 0.05 * i;
    CHECK(transition_probability(le4, e) ==
          doctest::Approx(transition_probability(aaaa, e)).epsilon(1e-12));
    CHECK(transition_probability(le8, e) ==
          doctest::Approx(transition_probability(tw, e)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(levitt_ernst(5), std::invalid_argument);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::prime_two, Family::prime_three, Family::prime_four_abba,
                   Family::prime_four_aaaa, Family::symmetric_half_pi,
                   Family::asymmetric_half_pi, Family::twin_symmetric,
                   Family::twin_asymmetric, Family::twin_asymmetric_reversed, Family::bb1,
                   Family::levitt_ernst})
    CHECK(family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(family_from_string("nope"), std::invalid_argument);
}

TEST_CASE("descriptor dispatch uses the documented defaults") {
  FamilyDescriptor d;
  d.family = Family::prime_three;
  d.p_target = 0.3;
  CHECK(phases_pi(make_sequence(d)) == phases_pi(prime_three(0.3, 4)));

  d.family = Family::prime_four_abba;
  CHECK(phases_pi(make_sequence(d)) == phases_pi(prime_four(0.3, FourPulseClass::abba, 'b')));

  d.family = Family::twin_asymmetric_reversed;
  d.n = 3;
  d.theta_pi = 0.75;
  CHECK(phases_pi(make_sequence(d)) ==
        phases_pi(twin(asymmetric_half_pi_reversed(3), 0.75)));
}

TEST_CASE("probability preserving transforms") {
  const CompositeSequence seq{"t", {{0.5, 0.3}, {1.0, 1.7}, {1.0, 0.2}, {0.5, 1.9}}};
  const CompositeSequence neg = negated_phases(seq);
  const CompositeSequence shift = shifted_phases(seq, 0.731);
  const CompositeSequence wind = with_winding_offsets(seq, {1, -2, 0, 3});
  const CompositeSequence rev = reversed(seq);
  for (int i = 0; i <= 50; ++i) {
    const double e = -1.0 + 0.04 * i;
    const double p = transition_probability(seq, e);
    CHECK(std::abs(transition_probability(neg, e) - p) < 1e-14);
    CHECK(std::abs(transition_probability(shift, e) - p) < 1e-14);
    CHECK(std::abs(transition_probability(wind, e) - p) < 1e-14);
    CHECK(std::abs(transition_probability(rev, e) - p) < 1e-14);
  }
  CHECK_THROWS_AS(with_winding_offsets(seq, {1, 2}), std::invalid_argument);
}

TEST_CASE("phase equivalence detection") {
  CHECK(phase_distance_pi(1.9, 0.1) == doctest::Approx(0.2));
  CHECK(phase_distance_pi(0.0, 2.0) == doctest::Approx(0.0));

  const std::vector<double> areas{0.5, 1.0, 1.0, 0.5};
  const std::vector<double> ph{0.0, 0.4, 1.3, 0.7};

  // negation, global shift and winding offsets all map into the orbit
  std::vector<double> other{0.25, 0.25 - 0.4 + 2.0, 0.25 - 1.3, 0.25 - 0.7 - 4.0};
  CHECK(phases_equivalent(areas, ph, other, 1e-12));
  // order reversal is allowed because the area pattern is palindromic
  std::vector<double> rev{0.7, 1.3, 0.4, 0.0};
  CHECK(phases_equivalent(areas, ph, rev, 1e-12));
  // a genuinely different assignment is rejected
  CHECK_FALSE(phases_equivalent(areas, ph, {0.0, 0.4, 1.3, 0.8}, 1e-6));

  // non-palindromic areas forbid the reversal branch
  const std::vector<double> nareas{0.5, 1.0, 1.0};
  const std::vector<double> nph{0.0, 0.4, 1.6};
  std::vector<double> nrev{1.6, 0.4, 0.0};
  CHECK_FALSE(phases_equivalent(nareas, nph, nrev, 1e-6));

  const std::vector<double> canon = canonical_phases(areas, ph);
  CHECK(canonical_phases(areas, canon) == canon);
  CHECK(canon[0] == 0.0);
}

TEST_CASE("catalog rows and generators agree") {
  for (int n = 2; n <= 6; ++n) {
    const auto& rows = catalog::variable_rotation_rows(n);
    CHECK(rows.size() == 13);
    const std::vector<double> areas = catalog::tabulated_areas_pi(n);
    CHECK(static_cast<int>(areas.size()) == n);
    for (const auto& row : rows) {
      CHECK(static_cast<int>(row.phases_pi.size()) == n);
      CHECK(row.phases_pi[0] == 0.0);
      if (!catalog::has_generator(n)) continue;
      const CompositeSequence built = catalog::generator(n, row.p_target);
      CHECK(phases_equivalent(areas, phases_pi(built), row.phases_pi, 1e-3));
    }
  }
  CHECK_FALSE(catalog::has_generator(5));
  CHECK_THROWS_AS(catalog::generator(5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(catalog::variable_rotation_rows(7), std::invalid_argument);
  CHECK(catalog::tabulated_order(5) == 8);

  // cataloged twins exist on the whole grid
  for (auto base : catalog::twin_bases())
    for (double th : catalog::twin_theta_grid_pi()) {
      const CompositeSequence tw = catalog::cataloged_twin(base, th);
      CHECK(transition_probability(tw, 0.0) ==
            doctest::Approx(target_probability(th)).epsilon(1e-10));
    }
}
