#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wres/clifford/word.hpp"
#include "wres/ratfun/ratfun.hpp"

namespace wres::testing {

struct PropertyResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return checked > 0 && failures.empty(); }
  std::string describe() const;
};

GaussianRational random_rational(std::mt19937_64& rng);
// Coefficients are random linear forms in the symbols s, t.
ScalarPoly random_scalar(std::mt19937_64& rng);
// Numerator degree below plus + minus, so the polynomial part is zero.
RatFun random_ratfun(std::mt19937_64& rng, unsigned max_pole);
// Poles only at -i and numerator degree below the pole order: an element of H-.
RatFun random_minus_ratfun(std::mt19937_64& rng, unsigned max_pole);

// Gamma+ integral against 2 pi i res_{+i} from the derivative formula, and
// vanishing on exact derivatives.
PropertyResult check_cauchy(std::size_t samples, std::uint64_t seed, unsigned max_pole = 20);
// pi+ idempotence, linearity, complement pole-freeness, derivative commutation, pi'(H-) = 0.
PropertyResult check_projection(std::size_t samples, std::uint64_t seed, unsigned max_pole = 20);
// Rule-based traces of random token-free words against the matrix oracle.
PropertyResult check_trace_oracle(unsigned n, std::size_t samples, std::uint64_t seed, unsigned max_len = 6);
// c(e_a)c(e_b) + c(e_b)c(e_a) = -2 delta_ab, entry by entry, and tr[id] = 2^m.
PropertyResult check_gamma_rep(unsigned n);

}  // namespace wres::testing
