#ifndef CPULSE_JET_HPP
#define CPULSE_JET_HPP

// Truncated power series in the area error eps with complex coefficients.
// A Jet of order K holds coefficients c[0..K] of sum_k c_k eps^k. All
// arithmetic preserves the order and coefficient k of a result depends only
// on input coefficients 0..k. Mixed-order operands are truncated to the
// smaller order.

#include <complex>
#include <vector>

namespace cpulse {

class Jet {
 public:
  Jet() : coeffs_(1) {}
  explicit Jet(int order);
  explicit Jet(std::vector<std::complex<double>> coeffs);

  // Constant series: value + 0 eps + ...
  static Jet constant(std::complex<double> value, int order);
  // First-order variable: value + eps (requires order >= 1).
  static Jet variable(std::complex<double> value, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::complex<double> coeff(int k) const;
  const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }

  // Horner evaluation at a real eps.
  std::complex<double> eval(double eps) const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator*=(std::complex<double> s);

 private:
  std::vector<std::complex<double>> coeffs_;
};

Jet operator+(Jet lhs, const Jet& rhs);
Jet operator-(Jet lhs, const Jet& rhs);
Jet operator*(const Jet& lhs, const Jet& rhs);
Jet operator*(std::complex<double> s, Jet rhs);
Jet operator*(Jet lhs, std::complex<double> s);

Jet sin(const Jet& g);
Jet cos(const Jet& g);
Jet conj(const Jet& g);

// |g|^2 as a series in the (real) expansion variable.
Jet abs_squared(const Jet& g);

}  // namespace cpulse

#endif
