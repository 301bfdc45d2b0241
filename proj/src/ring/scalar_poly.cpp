#include "wres/ring/scalar_poly.hpp"

#include "wres/error.hpp"

namespace wres {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::uint32_t k = 0; k < names_.size(); ++k) {
    if (!index_.emplace(names_[k], k).second)
      throw AlphabetError("duplicate symbol '" + names_[k] + "'");
  }
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Alphabet::at(std::string_view name) const {
  auto k = find(name);
  if (!k) throw AlphabetError("unknown symbol '" + std::string(name) + "'");
  return *k;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      r.push_back(*i++);
    } else if (j->first < i->first) {
      r.push_back(*j++);
    } else {
      r.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.insert(r.end(), i, a.end());
  r.insert(r.end(), j, b.end());
  return r;
}

std::uint32_t monomial_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

AlphabetPtr join_alphabets(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (*a == *b) return a;
  throw AlphabetError("alphabet mismatch");
}

ScalarPoly::ScalarPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ScalarPoly ScalarPoly::symbol(const AlphabetPtr& alphabet, std::string_view name) {
  if (!alphabet) throw AlphabetError("no alphabet for symbol '" + std::string(name) + "'");
  return variable(alphabet, alphabet->at(name));
}

ScalarPoly ScalarPoly::variable(const AlphabetPtr& alphabet, std::uint32_t idx) {
  if (!alphabet || idx >= alphabet->size()) throw AlphabetError("symbol index out of range");
  ScalarPoly p;
  p.alphabet_ = alphabet;
  p.terms_.emplace(Monomial{{idx, 1}}, GaussianRational(1));
  return p;
}

ScalarPoly ScalarPoly::from_terms(const AlphabetPtr& alphabet, Terms terms) {
  ScalarPoly p;
  p.alphabet_ = alphabet;
  for (auto& [m, c] : terms) {
    for (const auto& [v, e] : m) {
      if (!alphabet || v >= alphabet->size()) throw AlphabetError("symbol index out of range");
      (void)e;
    }
    if (!c.is_zero()) p.terms_.emplace(m, c);
  }
  return p;
}

bool ScalarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussianRational ScalarPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::optional<GaussianRational> ScalarPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

GaussianRational ScalarPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void ScalarPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  alphabet_ = join_alphabets(alphabet_, o.alphabet_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  alphabet_ = join_alphabets(alphabet_, o.alphabet_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly r;
  r.alphabet_ = join_alphabets(a.alphabet_, b.alphabet_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& o) { return *this = *this * o; }

ScalarPoly& ScalarPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ScalarPoly ScalarPoly::operator-() const {
  ScalarPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

ScalarPoly ScalarPoly::pow(unsigned e) const {
  ScalarPoly acc(1);
  acc.alphabet_ = alphabet_;
  for (unsigned k = 0; k < e; ++k) acc *= *this;
  return acc;
}

bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
  join_alphabets(a.alphabet_, b.alphabet_);
  return a.terms_ == b.terms_;
}

std::string monomial_str(const Alphabet* alphabet, const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += alphabet ? alphabet->name(v) : ("s" + std::to_string(v));
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string ScalarPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string term;
    bool negative = false;
    GaussianRational k = c;
    if ((k.is_real() && sgn(k.re()) < 0) || (sgn(k.re()) == 0 && sgn(k.im()) < 0)) {
      negative = true;
      k = -k;
    }
    if (m.empty()) {
      term = k.str();
    } else {
      std::string mono = monomial_str(alphabet_.get(), m);
      if (k.is_one()) {
        term = mono;
      } else if (k.is_real() || sgn(k.re()) == 0) {
        term = k.str() + "*" + mono;
      } else {
        term = "(" + k.str() + ")*" + mono;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

ScalarPoly sp_arith(const ScalarPoly& p, const ScalarPoly& q, SpOp op) {
  return op == SpOp::add ? p + q : p * q;
}

bool sp_canonical_eq(const ScalarPoly& p, const ScalarPoly& q) { return (p - q).is_zero(); }

}  // namespace wres
