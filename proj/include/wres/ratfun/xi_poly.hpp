#pragma once

#include <utility>
#include <vector>

#include "wres/ring/scalar_poly.hpp"

namespace wres {

// Dense polynomial in xi_n with ScalarPoly coefficients; coeffs()[k] multiplies xi_n^k.
class XiPoly {
 public:
  XiPoly() = default;
  explicit XiPoly(std::vector<ScalarPoly> coeffs);
  XiPoly(const ScalarPoly& c);  // NOLINT(implicit)

  static XiPoly xi();
  // (xi_n - c)^k
  static XiPoly linear_power(const GaussianRational& c, unsigned k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ScalarPoly>& coeffs() const { return c_; }
  ScalarPoly coeff(std::size_t k) const;

  XiPoly& operator+=(const XiPoly& o);
  XiPoly& operator-=(const XiPoly& o);
  friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
  friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a -= b; }
  friend XiPoly operator*(const XiPoly& a, const XiPoly& b);
  friend XiPoly operator*(XiPoly a, const ScalarPoly& s);
  XiPoly operator-() const;
  friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.c_ == b.c_; }

  XiPoly derivative() const;
  ScalarPoly eval(const GaussianRational& point) const;
  // Synthetic division by (xi_n - c): quotient and remainder.
  std::pair<XiPoly, ScalarPoly> divide_linear(const GaussianRational& c) const;
  // Division by a monic divisor with numeric coefficients.
  std::pair<XiPoly, XiPoly> divmod_monic(const XiPoly& divisor) const;
  // First `count` Taylor coefficients at c, by repeated synthetic division.
  std::vector<ScalarPoly> taylor(const GaussianRational& c, std::size_t count) const;

  std::string str() const;

 private:
  void trim();
  std::vector<ScalarPoly> c_;
};

}  // namespace wres
