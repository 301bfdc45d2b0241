#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wres/ring/scalar_poly.hpp"

namespace wres {

// Vector letters (Z, Xi, Gen) anticommute; the rest are opaque tokens.
enum class LetterKind : std::uint8_t {
  Z,        // c(Z)
  Xi,       // c(xi') = sum_{k<n} xi_k c(e_k)
  Gen,      // c(e_k), k = index; c(e_n) = c(dx_n)
  DXi,      // d/dx_n [c(xi')](x0)
  DZ,       // d/dx_n c(Z)
  AX,       // A(X)
  AY,       // A(Y)
  Sigma0D,  // sigma_0(D)(x0)
};

struct Letter {
  LetterKind kind = LetterKind::Gen;
  std::uint8_t index = 0;

  static Letter gen(unsigned k) { return {LetterKind::Gen, static_cast<std::uint8_t>(k)}; }
  static Letter of(LetterKind k) { return {k, 0}; }

  bool is_vector() const { return kind == LetterKind::Z || kind == LetterKind::Xi || kind == LetterKind::Gen; }
  // Canonical order within a run: Z < Xi < e_1 < ... < e_n.
  unsigned rank() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using CliffWord = std::vector<Letter>;
using CliffExpr = std::map<CliffWord, ScalarPoly>;

// Symbol name of component k of a vector field; the normal index prints as "n".
std::string component(std::string_view base, unsigned k, unsigned n);

struct CliffordContext {
  unsigned n = 3;
  AlphabetPtr alphabet;   // must hold Z_k, xi_k, dZ_k, kX_j, kY_j, h1 when those letters occur
  bool unit_xi = true;    // apply |xi'| = 1 to g(xi', xi')

  unsigned m() const { return (n - 1) / 2; }
  ScalarPoly sym(std::string_view name) const { return ScalarPoly::symbol(alphabet, name); }
  ScalarPoly comp(std::string_view base, unsigned k) const { return sym(component(base, k, n)); }
  // g(u, v) for vector letters
  ScalarPoly pairing(const Letter& u, const Letter& v) const;
};

enum class ReduceOrder { left_to_right, right_to_left };

void cexpr_add(CliffExpr& e, const CliffWord& w, const ScalarPoly& c);
CliffExpr cexpr_mul(const CliffExpr& a, const CliffExpr& b, const CliffordContext& ctx);

// Sorts every run of vector letters with uv = -vu - 2g(u,v), uu = -g(u,u).
CliffExpr cw_reduce(const CliffWord& raw, const CliffordContext& ctx,
                    ReduceOrder order = ReduceOrder::left_to_right);
CliffExpr cw_reduce(const CliffExpr& raw, const CliffordContext& ctx,
                    ReduceOrder order = ReduceOrder::left_to_right);

std::string letter_str(const Letter& l, unsigned n);
std::string word_str(const CliffWord& w, unsigned n);

}  // namespace wres
