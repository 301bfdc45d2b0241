#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/ratfun/xi_poly.hpp"

namespace wres {

// numerator / ((xi_n - i)^plus * (xi_n + i)^minus), kept in lowest terms.
class RatFun {
 public:
  RatFun() = default;
  RatFun(XiPoly numerator, unsigned plus = 0, unsigned minus = 0);
  RatFun(const ScalarPoly& c) : RatFun(XiPoly(c)) {}  // NOLINT(implicit)
  RatFun(long c) : RatFun(ScalarPoly(c)) {}  // NOLINT(implicit)

  static RatFun xi();
  // (1 + xi_n^2)^k, k of either sign
  static RatFun norm_power(int k);

  const XiPoly& numerator() const { return num_; }
  unsigned pole_order_plus() const { return plus_; }
  unsigned pole_order_minus() const { return minus_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return plus_ == 0 && minus_ == 0; }
  std::optional<ScalarPoly> as_scalar() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator*(RatFun a, const ScalarPoly& s);
  RatFun operator-() const;
  friend bool operator==(const RatFun& a, const RatFun& b);

  // Defined when the numerator is a nonzero constant times powers of (xi_n -+ i).
  std::optional<RatFun> inverse() const;
  RatFun pow(int e) const;

  std::string str() const;

 private:
  void canonicalize();
  XiPoly num_;
  unsigned plus_ = 0;
  unsigned minus_ = 0;
};

struct PartialFractions {
  XiPoly polynomial_part;
  std::vector<ScalarPoly> plus_coeffs;   // [k-1] multiplies (xi_n - i)^(-k)
  std::vector<ScalarPoly> minus_coeffs;  // [k-1] multiplies (xi_n + i)^(-k)

  RatFun recombine() const;
};

enum class RfOp { add, mul };
RatFun rf_arith(const RatFun& f, const RatFun& g, RfOp op);
RatFun rf_deriv(const RatFun& f);
PartialFractions rf_partial_fractions(const RatFun& f);
RatFun rf_pi_plus(const RatFun& f);
ScalarPoly rf_pi_prime(const RatFun& f);
// Contour integral over Gamma+ divided by the formal pi: 2i * res_{+i} f.
ScalarPoly rf_contour_plus_over_pi(const RatFun& f);
// Contour integral over Gamma+ with `pi` supplied as a formal symbol.
ScalarPoly rf_contour_plus(const RatFun& f, const ScalarPoly& pi);
ScalarPoly rf_deriv_at(const RatFun& g, unsigned order, const GaussianRational& point);

}  // namespace wres
