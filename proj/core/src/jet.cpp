#include "cpulse/jet.hpp"

#include <stdexcept>
#include <utility>

#include "cpulse/detail/series_engine.hpp"

namespace cpulse {

namespace {

using DSeries = detail::Series<double>;

DSeries to_engine(const std::vector<std::complex<double>>& c, std::size_t n) {
  DSeries out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = {c[k].real(), c[k].imag()};
  return out;
}

std::vector<std::complex<double>> from_engine(const DSeries& s) {
  std::vector<std::complex<double>> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = {s[k].re, s[k].im};
  return out;
}

std::size_t common_order(const Jet& a, const Jet& b) {
  return static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
}

}  // namespace

Jet::Jet(int order) {
  if (order < 0) throw std::invalid_argument("jet order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, {});
}

Jet::Jet(std::vector<std::complex<double>> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("jet needs at least one coefficient");
}

Jet Jet::constant(std::complex<double> value, int order) {
  Jet j(order);
  j.coeffs_[0] = value;
  return j;
}

Jet Jet::variable(std::complex<double> value, int order) {
  if (order < 1) throw std::invalid_argument("variable jet requires order >= 1");
  Jet j(order);
  j.coeffs_[0] = value;
  j.coeffs_[1] = 1.0;
  return j;
}

std::complex<double> Jet::coeff(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("jet coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(k)];
}

std::complex<double> Jet::eval(double eps) const {
  std::complex<double> acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * eps + coeffs_[k];
  return acc;
}

Jet& Jet::operator+=(const Jet& rhs) {
  const std::size_t n = common_order(*this, rhs);
  coeffs_.resize(n);
  for (std::size_t k = 0; k < n; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  const std::size_t n = common_order(*this, rhs);
  coeffs_.resize(n);
  for (std::size_t k = 0; k < n; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) {
  const std::size_t n = common_order(*this, rhs);
  DSeries prod = detail::series_mul(to_engine(coeffs_, n), to_engine(rhs.coeffs_, n));
  coeffs_ = from_engine(prod);
  return *this;
}

Jet& Jet::operator*=(std::complex<double> s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }
Jet operator*(const Jet& lhs, const Jet& rhs) {
  Jet out = lhs;
  out *= rhs;
  return out;
}
Jet operator*(std::complex<double> s, Jet rhs) { return rhs *= s; }
Jet operator*(Jet lhs, std::complex<double> s) { return lhs *= s; }

Jet sin(const Jet& g) {
  DSeries s, c;
  detail::series_sin_cos(to_engine(g.coefficients(), g.coefficients().size()), s, c);
  return Jet(from_engine(s));
}

Jet cos(const Jet& g) {
  DSeries s, c;
  detail::series_sin_cos(to_engine(g.coefficients(), g.coefficients().size()), s, c);
  return Jet(from_engine(c));
}

Jet conj(const Jet& g) {
  auto c = g.coefficients();
  for (auto& v : c) v = std::conj(v);
  return Jet(std::move(c));
}

Jet abs_squared(const Jet& g) {
  DSeries sq = detail::series_abs_squared(to_engine(g.coefficients(), g.coefficients().size()));
  return Jet(from_engine(sq));
}

}  // namespace cpulse
