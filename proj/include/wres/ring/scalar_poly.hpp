#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wres/ring/gaussian_rational.hpp"

namespace wres {

// Fixed, ordered set of commuting formal symbols.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t idx) const { return names_.at(idx); }
  std::optional<std::uint32_t> find(std::string_view name) const;
  std::uint32_t at(std::string_view name) const;  // throws AlphabetError
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Sorted (symbol, exponent) pairs.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::uint32_t monomial_degree(const Monomial& m);

class ScalarPoly {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  ScalarPoly() = default;
  ScalarPoly(const GaussianRational& c);  // NOLINT(implicit)
  ScalarPoly(long c) : ScalarPoly(GaussianRational(c)) {}  // NOLINT(implicit)

  static ScalarPoly symbol(const AlphabetPtr& alphabet, std::string_view name);
  static ScalarPoly variable(const AlphabetPtr& alphabet, std::uint32_t idx);
  static ScalarPoly from_terms(const AlphabetPtr& alphabet, Terms terms);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_term() const;
  std::optional<GaussianRational> as_constant() const;
  GaussianRational coefficient(const Monomial& m) const;

  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  ScalarPoly& operator*=(const ScalarPoly& o);
  ScalarPoly& operator*=(const GaussianRational& c);

  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator*(ScalarPoly a, const GaussianRational& c) { return a *= c; }
  friend ScalarPoly operator*(const GaussianRational& c, ScalarPoly a) { return a *= c; }
  ScalarPoly operator-() const;

  ScalarPoly pow(unsigned e) const;

  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b);

  std::string str() const;

 private:
  void add_term(const Monomial& m, const GaussianRational& c);

  AlphabetPtr alphabet_;
  Terms terms_;
};

// Shared alphabet of two operands; throws AlphabetError on mismatch.
AlphabetPtr join_alphabets(const AlphabetPtr& a, const AlphabetPtr& b);

enum class SpOp { add, mul };
ScalarPoly sp_arith(const ScalarPoly& p, const ScalarPoly& q, SpOp op);
bool sp_canonical_eq(const ScalarPoly& p, const ScalarPoly& q);

std::string monomial_str(const Alphabet* alphabet, const Monomial& m);

}  // namespace wres
