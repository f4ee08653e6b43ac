#ifndef CPULSE_DETAIL_SERIES_ENGINE_HPP
#define CPULSE_DETAIL_SERIES_ENGINE_HPP

// Truncated power series over a complex scalar, generic in the underlying
// real type R. The same recurrences run with R = double for everyday use and
// with a multiprecision R when high-order coefficients have to survive the
// cancellation inherent in long products of pulse propagators.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace cpulse::detail {

template <class R>
struct Cx {
  R re{};
  R im{};
};

template <class R>
Cx<R> operator+(const Cx<R>& x, const Cx<R>& y) {
  return {x.re + y.re, x.im + y.im};
}

template <class R>
Cx<R> operator-(const Cx<R>& x, const Cx<R>& y) {
  return {x.re - y.re, x.im - y.im};
}

template <class R>
Cx<R> operator*(const Cx<R>& x, const Cx<R>& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

template <class R>
Cx<R> conj(const Cx<R>& x) {
  return {x.re, -x.im};
}

template <class R>
Cx<R> scale(const R& s, const Cx<R>& x) {
  return {s * x.re, s * x.im};
}

// Pi for the scalar type in use. Specialized for multiprecision types where
// std::numbers does not apply.
template <class R>
struct real_constants {
  static R pi() { return R(std::numbers::pi_v<double>); }
};

// sin and cos of a complex scalar, written out so they work for any R that
// provides the real functions via ADL or <cmath>.
template <class R>
std::pair<Cx<R>, Cx<R>> sin_cos_scalar(const Cx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  Cx<R> s{sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
  Cx<R> c{cos(z.re) * cosh(z.im), R(0) - sin(z.re) * sinh(z.im)};
  return {s, c};
}

// A series is a coefficient vector c[0..K]; every operation keeps the input
// truncation order, and coefficient k of any result depends only on input
// coefficients 0..k.
template <class R>
using Series = std::vector<Cx<R>>;

template <class R>
Series<R> series_add(const Series<R>& x, const Series<R>& y) {
  Series<R> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + y[k];
  return out;
}

template <class R>
Series<R> series_sub(const Series<R>& x, const Series<R>& y) {
  Series<R> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - y[k];
  return out;
}

// Cauchy product truncated to the common order.
template <class R>
Series<R> series_mul(const Series<R>& x, const Series<R>& y) {
  Series<R> out(x.size(), Cx<R>{});
  for (std::size_t k = 0; k < x.size(); ++k) {
    Cx<R> acc{};
    for (std::size_t j = 0; j <= k; ++j) acc = acc + x[j] * y[k - j];
    out[k] = acc;
  }
  return out;
}

// Conjugate series: valid because the expansion variable is real.
template <class R>
Series<R> series_conj(const Series<R>& x) {
  Series<R> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = conj(x[k]);
  return out;
}

// sin and cos of a series g by the coupled recurrence s' = c g', c' = -s g'.
template <class R>
void series_sin_cos(const Series<R>& g, Series<R>& s, Series<R>& c) {
  const std::size_t n = g.size();
  s.assign(n, Cx<R>{});
  c.assign(n, Cx<R>{});
  auto head = sin_cos_scalar(g[0]);
  s[0] = head.first;
  c[0] = head.second;
  for (std::size_t k = 1; k < n; ++k) {
    Cx<R> as{};
    Cx<R> ac{};
    for (std::size_t j = 1; j <= k; ++j) {
      const Cx<R> gj = scale(R(static_cast<int>(j)), g[j]);
      as = as + gj * c[k - j];
      ac = ac - gj * s[k - j];
    }
    const R inv_k = R(1) / R(static_cast<int>(k));
    s[k] = scale(inv_k, as);
    c[k] = scale(inv_k, ac);
  }
}

// |f|^2 as a series in a real variable. The (j, k-j) term pairs are summed
// together, so the imaginary parts cancel exactly instead of accumulating
// rounding noise; the downstream residue check stays meaningful.
template <class R>
Series<R> series_abs_squared(const Series<R>& f) {
  const std::size_t n = f.size();
  Series<R> out(n, Cx<R>{});
  for (std::size_t k = 0; k < n; ++k) {
    Cx<R> acc{};
    for (std::size_t j = 0; 2 * j < k; ++j) {
      const Cx<R> t = f[j] * conj(f[k - j]);
      acc = acc + (t + conj(t));
    }
    if (k % 2 == 0) acc = acc + f[k / 2] * conj(f[k / 2]);
    out[k] = acc;
  }
  return out;
}

// Minimal pulse view used by the composition routines.
template <class R>
struct PulseView {
  R area_pi;
  R phase_pi;
};

// Cayley-Klein jets of one resonant pulse: a = cos(h), b = -i e^{i phi} sin(h)
// with h = (pi/2) area (1 + eps) and phi the drive phase.
template <class R>
void pulse_series(const PulseView<R>& p, std::size_t order, Series<R>& a, Series<R>& b) {
  const R half = real_constants<R>::pi() * p.area_pi / R(2);
  Series<R> g(order + 1, Cx<R>{});
  g[0] = Cx<R>{half, R(0)};
  if (order >= 1) g[1] = Cx<R>{half, R(0)};
  Series<R> s;
  series_sin_cos(g, s, a);
  using std::cos;
  using std::sin;
  const R phi = real_constants<R>::pi() * p.phase_pi;
  const Cx<R> w{sin(phi), R(0) - cos(phi)};  // -i e^{i phi}
  b.assign(order + 1, Cx<R>{});
  for (std::size_t k = 0; k <= order; ++k) b[k] = w * s[k];
}

// One SU(2) composition step, U_new = U_p U_acc, in Cayley-Klein form:
//   a <- a_p a - b_p conj(b),   b <- a_p b + b_p conj(a).
template <class R>
void su2_accumulate(const Series<R>& ap, const Series<R>& bp, Series<R>& a, Series<R>& b) {
  Series<R> na = series_sub(series_mul(ap, a), series_mul(bp, series_conj(b)));
  Series<R> nb = series_add(series_mul(ap, b), series_mul(bp, series_conj(a)));
  a = std::move(na);
  b = std::move(nb);
}

// Jets of the full sequence propagator, pulse 0 acting first.
template <class R>
void compose_series(const std::vector<PulseView<R>>& pulses, std::size_t order,
                    Series<R>& a, Series<R>& b) {
  a.assign(order + 1, Cx<R>{});
  b.assign(order + 1, Cx<R>{});
  a[0] = Cx<R>{R(1), R(0)};
  Series<R> ap;
  Series<R> bp;
  for (const PulseView<R>& p : pulses) {
    pulse_series(p, order, ap, bp);
    su2_accumulate(ap, bp, a, b);
  }
}

// Point evaluation of the propagator at a given area error.
template <class R>
std::pair<Cx<R>, Cx<R>> compose_point(const std::vector<PulseView<R>>& pulses, const R& eps) {
  using std::cos;
  using std::sin;
  Cx<R> a{R(1), R(0)};
  Cx<R> b{R(0), R(0)};
  const R pi = real_constants<R>::pi();
  for (const PulseView<R>& p : pulses) {
    const R h = pi * p.area_pi * (R(1) + eps) / R(2);
    const R phi = pi * p.phase_pi;
    const Cx<R> ap{cos(h), R(0)};
    const R sh = sin(h);
    const Cx<R> bp{sin(phi) * sh, R(0) - cos(phi) * sh};  // -i e^{i phi} sin(h)
    const Cx<R> na = ap * a - bp * conj(b);
    const Cx<R> nb = ap * b + bp * conj(a);
    a = na;
    b = nb;
  }
  return {a, b};
}

}  // namespace cpulse::detail

#endif
