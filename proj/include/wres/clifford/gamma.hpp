#pragma once

#include <vector>

#include "wres/clifford/word.hpp"

namespace wres {

// Square matrix with exactly one nonzero entry per row (all gamma products have this shape).
class MonomialMatrix {
 public:
  static MonomialMatrix identity(std::size_t dim);

  std::size_t dim() const { return col_.size(); }
  GaussianRational entry(std::size_t r, std::size_t c) const { return col_[r] == c ? val_[r] : GaussianRational(); }
  GaussianRational trace() const;

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend MonomialMatrix operator*(MonomialMatrix a, const GaussianRational& s);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.col_ == b.col_ && a.val_ == b.val_;
  }

  std::vector<std::size_t> col_;
  std::vector<GaussianRational> val_;
};

struct GammaRep {
  unsigned n = 0;
  std::vector<MonomialMatrix> gammas;  // gammas[k-1] = c(e_k)

  unsigned m() const { return (n - 1) / 2; }
  std::size_t dim() const { return gammas.empty() ? 0 : gammas[0].dim(); }
};

// -i times Pauli tensor products; n odd, 3 <= n <= 13.
GammaRep gamma_build(unsigned n);
const GammaRep& gamma_cached(unsigned n);

// Exact trace of a product of generators (indices 1..n).
GaussianRational gamma_trace_oracle(const std::vector<unsigned>& word, const GammaRep& rep);

// Expands c(Z) and c(xi') into generator sums; tokens are rejected.
std::map<std::vector<unsigned>, ScalarPoly> expand_to_generators(const CliffWord& w, const CliffordContext& ctx);

// Trace of a token-free word through the matrix oracle, divided by tr[id].
ScalarPoly oracle_trace_word(const CliffWord& w, const CliffordContext& ctx);

}  // namespace wres
