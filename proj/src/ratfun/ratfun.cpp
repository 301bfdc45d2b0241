#include "wres/ratfun/ratfun.hpp"

#include <algorithm>

#include "wres/error.hpp"

namespace wres {

namespace {

const GaussianRational kI = GaussianRational::i();
const GaussianRational kMinusI = -GaussianRational::i();

// (c + t)^(-b) = sum_j binom(-b, j) c^(-b-j) t^j, first `count` terms
std::vector<GaussianRational> inverse_power_series(const GaussianRational& c, unsigned b, std::size_t count) {
  std::vector<GaussianRational> out;
  out.reserve(count);
  GaussianRational coef = c.pow(-static_cast<long>(b));
  GaussianRational inv_c = c.inverse();
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(coef);
    coef *= GaussianRational(-static_cast<long>(b + j)) * inv_c / GaussianRational(static_cast<long>(j + 1));
  }
  return out;
}

// Principal part at `pole` of P / ((xi - pole)^a * (xi - other)^b); [k-1] multiplies (xi - pole)^(-k).
std::vector<ScalarPoly> principal_part(const XiPoly& p, const GaussianRational& pole, unsigned a,
                                       const GaussianRational& other, unsigned b) {
  std::vector<ScalarPoly> out(a);
  if (a == 0) return out;
  std::vector<ScalarPoly> tp = p.taylor(pole, a);
  std::vector<GaussianRational> ts = inverse_power_series(pole - other, b, a);
  for (unsigned k = 0; k < a; ++k) {
    ScalarPoly g;
    for (unsigned j = 0; j <= k; ++j) {
      if (tp[j].is_zero()) continue;
      g += tp[j] * ts[k - j];
    }
    out[a - 1 - k] = std::move(g);
  }
  return out;
}

}  // namespace

RatFun::RatFun(XiPoly numerator, unsigned plus, unsigned minus)
    : num_(std::move(numerator)), plus_(plus), minus_(minus) {
  canonicalize();
}

RatFun RatFun::xi() { return RatFun(XiPoly::xi()); }

RatFun RatFun::norm_power(int k) {
  if (k >= 0) {
    XiPoly base(std::vector<ScalarPoly>{ScalarPoly(1), ScalarPoly(0), ScalarPoly(1)});
    XiPoly acc(ScalarPoly(1));
    for (int j = 0; j < k; ++j) acc = acc * base;
    return RatFun(acc);
  }
  return RatFun(XiPoly(ScalarPoly(1)), static_cast<unsigned>(-k), static_cast<unsigned>(-k));
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    plus_ = minus_ = 0;
    return;
  }
  while (plus_ > 0) {
    auto [q, r] = num_.divide_linear(kI);
    if (!r.is_zero()) break;
    num_ = std::move(q);
    --plus_;
  }
  while (minus_ > 0) {
    auto [q, r] = num_.divide_linear(kMinusI);
    if (!r.is_zero()) break;
    num_ = std::move(q);
    --minus_;
  }
}

std::optional<ScalarPoly> RatFun::as_scalar() const {
  if (!is_polynomial() || num_.degree() > 0) return std::nullopt;
  return num_.coeff(0);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  unsigned a = std::max(plus_, o.plus_);
  unsigned b = std::max(minus_, o.minus_);
  XiPoly lhs = num_ * (XiPoly::linear_power(kI, a - plus_) * XiPoly::linear_power(kMinusI, b - minus_));
  XiPoly rhs = o.num_ * (XiPoly::linear_power(kI, a - o.plus_) * XiPoly::linear_power(kMinusI, b - o.minus_));
  num_ = lhs + rhs;
  plus_ = a;
  minus_ = b;
  canonicalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFun(a.num_ * b.num_, a.plus_ + b.plus_, a.minus_ + b.minus_);
}

RatFun operator*(RatFun a, const ScalarPoly& s) {
  a.num_ = a.num_ * s;
  a.canonicalize();
  return a;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.plus_ == b.plus_ && a.minus_ == b.minus_ && a.num_ == b.num_;
}

std::optional<RatFun> RatFun::inverse() const {
  if (is_zero()) return std::nullopt;
  XiPoly rest = num_;
  unsigned p = 0;
  unsigned q = 0;
  for (;;) {
    auto [quo, rem] = rest.divide_linear(kI);
    if (!rem.is_zero() || rest.degree() < 1) break;
    rest = std::move(quo);
    ++p;
  }
  for (;;) {
    auto [quo, rem] = rest.divide_linear(kMinusI);
    if (!rem.is_zero() || rest.degree() < 1) break;
    rest = std::move(quo);
    ++q;
  }
  if (rest.degree() != 0) return std::nullopt;
  auto c = rest.coeff(0).as_constant();
  if (!c) return std::nullopt;
  XiPoly num = XiPoly::linear_power(kI, plus_) * XiPoly::linear_power(kMinusI, minus_) * ScalarPoly(c->inverse());
  return RatFun(num, p, q);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw ArithmeticError("rational function is not invertible in the pole ring");
    return inv->pow(-e);
  }
  RatFun acc(1);
  for (int k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

std::string RatFun::str() const {
  std::string s = "(" + num_.str() + ")";
  if (plus_ == 0 && minus_ == 0) return s;
  s += "/(";
  if (plus_ > 0) s += "(xn-i)^" + std::to_string(plus_);
  if (minus_ > 0) s += std::string(plus_ > 0 ? "*" : "") + "(xn+i)^" + std::to_string(minus_);
  return s + ")";
}

RatFun PartialFractions::recombine() const {
  RatFun r(polynomial_part);
  for (std::size_t k = 0; k < plus_coeffs.size(); ++k)
    r += RatFun(XiPoly(plus_coeffs[k]), static_cast<unsigned>(k + 1), 0);
  for (std::size_t k = 0; k < minus_coeffs.size(); ++k)
    r += RatFun(XiPoly(minus_coeffs[k]), 0, static_cast<unsigned>(k + 1));
  return r;
}

RatFun rf_arith(const RatFun& f, const RatFun& g, RfOp op) { return op == RfOp::add ? f + g : f * g; }

RatFun rf_deriv(const RatFun& f) {
  if (f.is_zero()) return {};
  const unsigned a = f.pole_order_plus();
  const unsigned b = f.pole_order_minus();
  const XiPoly& p = f.numerator();
  // (P'(x-i)(x+i) - P(a(x+i) + b(x-i))) / ((x-i)^(a+1)(x+i)^(b+1))
  XiPoly lin_plus = XiPoly::linear_power(kI, 1);
  XiPoly lin_minus = XiPoly::linear_power(kMinusI, 1);
  XiPoly weight = lin_minus * ScalarPoly(GaussianRational(static_cast<long>(a))) +
                  lin_plus * ScalarPoly(GaussianRational(static_cast<long>(b)));
  XiPoly num = p.derivative() * (lin_plus * lin_minus) - p * weight;
  return RatFun(num, a + 1, b + 1);
}

PartialFractions rf_partial_fractions(const RatFun& f) {
  PartialFractions pf;
  const unsigned a = f.pole_order_plus();
  const unsigned b = f.pole_order_minus();
  XiPoly den = XiPoly::linear_power(kI, a) * XiPoly::linear_power(kMinusI, b);
  auto [quot, rem] = f.numerator().divmod_monic(den);
  pf.polynomial_part = std::move(quot);
  pf.plus_coeffs = principal_part(rem, kI, a, kMinusI, b);
  pf.minus_coeffs = principal_part(rem, kMinusI, b, kI, a);
  return pf;
}

RatFun rf_pi_plus(const RatFun& f) {
  const unsigned a = f.pole_order_plus();
  if (a == 0) return {};
  std::vector<ScalarPoly> c =
      principal_part(f.numerator(), kI, a, kMinusI, f.pole_order_minus());
  // sum_k c_k (x-i)^(-k) = (sum_k c_k (x-i)^(a-k)) / (x-i)^a
  XiPoly num;
  for (unsigned k = 1; k <= a; ++k) num += XiPoly::linear_power(kI, a - k) * c[k - 1];
  return RatFun(num, a, 0);
}

namespace {

ScalarPoly residue_plus(const RatFun& f) {
  const unsigned a = f.pole_order_plus();
  if (a == 0) return {};
  return principal_part(f.numerator(), kI, a, kMinusI, f.pole_order_minus())[0];
}

}  // namespace

ScalarPoly rf_pi_prime(const RatFun& f) { return residue_plus(f) * kI; }

ScalarPoly rf_contour_plus_over_pi(const RatFun& f) {
  const int deg = f.numerator().degree();
  const int den = static_cast<int>(f.pole_order_plus() + f.pole_order_minus());
  if (!f.is_zero() && deg >= den) {
    if (!rf_partial_fractions(f).polynomial_part.is_zero())
      throw IntegrationError("non-integrable over Gamma+: nonzero polynomial part " + f.str());
  }
  return residue_plus(f) * GaussianRational(mpq_class(0), mpq_class(2));
}

ScalarPoly rf_contour_plus(const RatFun& f, const ScalarPoly& pi) { return rf_contour_plus_over_pi(f) * pi; }

ScalarPoly rf_deriv_at(const RatFun& g, unsigned order, const GaussianRational& point) {
  RatFun d = g;
  for (unsigned k = 0; k < order; ++k) d = rf_deriv(d);
  const GaussianRational lp = point - kI;
  const GaussianRational lm = point - kMinusI;
  if ((d.pole_order_plus() > 0 && lp.is_zero()) || (d.pole_order_minus() > 0 && lm.is_zero()))
    throw ArithmeticError("rf_deriv_at: evaluation point is a pole");
  GaussianRational scale = lp.pow(-static_cast<long>(d.pole_order_plus())) *
                           lm.pow(-static_cast<long>(d.pole_order_minus()));
  return d.numerator().eval(point) * scale;
}

}  // namespace wres
