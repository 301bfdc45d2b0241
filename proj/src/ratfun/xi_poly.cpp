#include "wres/ratfun/xi_poly.hpp"

#include "wres/error.hpp"

namespace wres {

XiPoly::XiPoly(std::vector<ScalarPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

XiPoly::XiPoly(const ScalarPoly& c) {
  if (!c.is_zero()) c_.push_back(c);
}

XiPoly XiPoly::xi() { return XiPoly(std::vector<ScalarPoly>{ScalarPoly(0), ScalarPoly(1)}); }

XiPoly XiPoly::linear_power(const GaussianRational& c, unsigned k) {
  XiPoly base(std::vector<ScalarPoly>{ScalarPoly(-c), ScalarPoly(1)});
  XiPoly acc(ScalarPoly(1));
  for (unsigned j = 0; j < k; ++j) acc = acc * base;
  return acc;
}

void XiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ScalarPoly XiPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ScalarPoly(); }

XiPoly& XiPoly::operator+=(const XiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

XiPoly& XiPoly::operator-=(const XiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<ScalarPoly> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return XiPoly(std::move(r));
}

XiPoly operator*(XiPoly a, const ScalarPoly& s) {
  for (auto& c : a.c_) c = c * s;
  a.trim();
  return a;
}

XiPoly XiPoly::operator-() const {
  XiPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XiPoly XiPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<ScalarPoly> r(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
  return XiPoly(std::move(r));
}

ScalarPoly XiPoly::eval(const GaussianRational& point) const {
  ScalarPoly acc;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= point;
    acc += c_[k];
  }
  return acc;
}

std::pair<XiPoly, ScalarPoly> XiPoly::divide_linear(const GaussianRational& c) const {
  if (c_.empty()) return {XiPoly(), ScalarPoly()};
  std::vector<ScalarPoly> q(c_.size() - 1);
  ScalarPoly carry;
  for (std::size_t k = c_.size(); k-- > 0;) {
    ScalarPoly cur = c_[k] + carry * c;
    if (k == 0) return {XiPoly(std::move(q)), cur};
    q[k - 1] = cur;
    carry = std::move(cur);
  }
  return {XiPoly(std::move(q)), ScalarPoly()};
}

std::pair<XiPoly, XiPoly> XiPoly::divmod_monic(const XiPoly& divisor) const {
  if (divisor.is_zero() || !(divisor.c_.back().as_constant() && divisor.c_.back().as_constant()->is_one()))
    throw ArithmeticError("divmod_monic: divisor must be monic");
  const std::size_t dd = divisor.c_.size() - 1;
  if (c_.size() <= dd) return {XiPoly(), *this};
  std::vector<ScalarPoly> rem = c_;
  std::vector<ScalarPoly> q(c_.size() - dd);
  for (std::size_t k = c_.size(); k-- > dd;) {
    ScalarPoly lead = rem[k];
    if (lead.is_zero()) continue;
    q[k - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= lead * divisor.c_[j];
  }
  rem.resize(dd);
  return {XiPoly(std::move(q)), XiPoly(std::move(rem))};
}

std::vector<ScalarPoly> XiPoly::taylor(const GaussianRational& c, std::size_t count) const {
  std::vector<ScalarPoly> out;
  out.reserve(count);
  XiPoly cur = *this;
  for (std::size_t k = 0; k < count; ++k) {
    auto [q, r] = cur.divide_linear(c);
    out.push_back(std::move(r));
    cur = std::move(q);
  }
  return out;
}

std::string XiPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string coef = c_[k].str();
    bool compound = c_[k].terms().size() > 1;
    std::string term;
    if (k == 0) {
      term = compound ? "(" + coef + ")" : coef;
    } else {
      std::string power = k == 1 ? "xn" : "xn^" + std::to_string(k);
      if (coef == "1") {
        term = power;
      } else if (coef == "-1") {
        term = "-" + power;
      } else {
        term = (compound ? "(" + coef + ")" : coef) + "*" + power;
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace wres
