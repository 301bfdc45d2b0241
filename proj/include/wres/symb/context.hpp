#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wres/clifford/word.hpp"

namespace wres {

// Symbol alphabet for dimension n = 2m+1. Component symbols use the suffix
// "n" for the normal index: X1..X{n-1}, Xn; dX* are x_n-derivatives;
// DY{j}_{l} = d_{x_j} Y_l for j < n; kX{j} = <nabla_X d_n, e_j>; xi{j} for j < n.
struct SymbolContext {
  unsigned m = 1;
  unsigned n = 3;
  AlphabetPtr alphabet;
  CliffordContext cliff;
  // Per alphabet index: index of the x_n-derivative symbol, kDxnZero, or kDxnNoRule.
  std::vector<long> dxn_map;
  std::vector<bool> is_xi;

  static constexpr long kDxnZero = -1;
  static constexpr long kDxnNoRule = -2;

  ScalarPoly sym(std::string_view name) const { return ScalarPoly::symbol(alphabet, name); }
  ScalarPoly comp(std::string_view base, unsigned k) const { return sym(component(base, k, n)); }
  ScalarPoly dy(unsigned j, unsigned l) const;  // d_{x_j} Y_l, with j = n meaning dY_l
  ScalarPoly xi(unsigned k) const { return comp("xi", k); }

  ScalarPoly h1() const { return sym("h1"); }
  ScalarPoly pi() const { return sym("pi"); }
  ScalarPoly vol() const { return sym("Vol"); }
};

using ContextPtr = std::shared_ptr<const SymbolContext>;

ContextPtr make_context(unsigned m);

}  // namespace wres
