#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cpulse/errors.hpp"
#include "cpulse/families.hpp"
#include "cpulse/propagator.hpp"

using namespace cpulse;
using cdouble = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// independent 2x2 unitary product oracle
struct Mat2 {
  cdouble u00, u01, u10, u11;
};

Mat2 matmul(const Mat2& l, const Mat2& r) {
  return {l.u00 * r.u00 + l.u01 * r.u10, l.u00 * r.u01 + l.u01 * r.u11,
          l.u10 * r.u00 + l.u11 * r.u10, l.u10 * r.u01 + l.u11 * r.u11};
}

Mat2 pulse_matrix(const Pulse& p, double eps) {
  const double h = 0.5 * kPi * p.area_pi * (1.0 + eps);
  const cdouble b = cdouble{0.0, -1.0} * std::exp(cdouble{0.0, kPi * p.phase_pi}) * std::sin(h);
  return {std::cos(h), b, -std::conj(b), std::cos(h)};
}

const CompositeSequence kMixed{"mixed",
                               {{0.5, 0.3}, {1.0, 1.7}, {1.0, 0.2}, {0.5, 1.1}, {1.0, 0.9}}};

}  // namespace

TEST_CASE("single pulse propagator in Cayley-Klein form") {
  const Pulse p{0.5, 0.25};
  const double eps = 0.2;
  const Propagator u = pulse_propagator(p, eps);
  const double h = 0.5 * kPi * 0.5 * 1.2;
  CHECK(u.a.real() == doctest::Approx(std::cos(h)));
  CHECK(u.a.imag() == 0.0);
  const cdouble want_b =
      cdouble{0.0, -1.0} * std::exp(cdouble{0.0, kPi * 0.25}) * std::sin(h);
  CHECK(std::abs(u.b - want_b) < 1e-15);
  CHECK(unitarity_defect(u) < 1e-15);
}

TEST_CASE("composition matches an explicit matrix product") {
  for (double eps : {-0.7, -0.1, 0.0, 0.3, 0.9}) {
    Mat2 m = pulse_matrix(kMixed.pulses[0], eps);
    for (std::size_t i = 1; i < kMixed.pulses.size(); ++i)
      m = matmul(pulse_matrix(kMixed.pulses[i], eps), m);
    const Propagator u = compose(kMixed, eps);
    CHECK(std::abs(u.a - m.u00) < 1e-14);
    CHECK(std::abs(u.b - m.u01) < 1e-14);
    CHECK(unitarity_defect(u) < 1e-14);
    CHECK(transition_probability(u) == doctest::Approx(std::norm(m.u01)).epsilon(1e-12));
  }
}

TEST_CASE("reversed order conjugates a and preserves b") {
  const CompositeSequence rev = reversed(kMixed);
  for (double eps : {-0.4, 0.25}) {
    const Propagator f = compose(kMixed, eps);
    const Propagator r = compose(rev, eps);
    CHECK(std::abs(r.a - std::conj(f.a)) < 1e-14);
    CHECK(std::abs(r.b - f.b) < 1e-14);
  }
}

TEST_CASE("half-pi pulse probability closed form") {
  const CompositeSequence a{"A", {{0.5, 0.0}}};
  for (double eps : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
    const double h = 0.25 * kPi * (1.0 + eps);
    CHECK(transition_probability(a, eps) ==
          doctest::Approx(std::sin(h) * std::sin(h)).epsilon(1e-14));
  }
}

TEST_CASE("inversion maps probability to population difference") {
  CHECK(inversion(0.75) == doctest::Approx(0.5));
  CHECK(inversion(0.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(inversion(1.5), std::invalid_argument);
}

TEST_CASE("jet propagator stays unitary order by order") {
  const JetPropagator u = jet_compose(kMixed, 8);
  const Jet unit = abs_squared(u.a) + abs_squared(u.b);
  CHECK(unit.coeff(0).real() == doctest::Approx(1.0));
  for (int k = 1; k <= 8; ++k) CHECK(std::abs(unit.coeff(k)) < 1e-12);
  CHECK_THROWS_AS(jet_compose(kMixed, 0), std::invalid_argument);
}

TEST_CASE("probability series starts with the known derivatives") {
  // single half-pi pulse: P = sin^2(pi (1+eps) / 4), so c0 = 1/2, c1 = pi/4
  const CompositeSequence a{"A", {{0.5, 0.0}}};
  const std::vector<double> c = probability_series(a, 2);
  CHECK(c[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c[1] == doctest::Approx(kPi / 4).epsilon(1e-14));
  CHECK(c[2] == doctest::Approx(0.0));
  CHECK_THROWS_AS(probability_series(a, 0), std::invalid_argument);
}

TEST_CASE("probability series evaluates to the direct probability") {
  const std::vector<double> c = probability_series(kMixed, 12);
  for (double eps : {-0.05, -0.01, 0.02, 0.05}) {
    double val = 0.0;
    for (int k = 12; k >= 0; --k) val = val * eps + c[static_cast<std::size_t>(k)];
    CHECK(val == doctest::Approx(transition_probability(kMixed, eps)).epsilon(1e-12));
  }
}

TEST_CASE("validation rejects malformed pulses") {
  CHECK_THROWS_AS(validate(Pulse{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Pulse{-0.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(CompositeSequence{}), std::invalid_argument);
  CHECK_NOTHROW(validate(kMixed));
}
