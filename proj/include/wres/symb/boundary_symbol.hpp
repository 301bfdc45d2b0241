#pragma once

#include <map>
#include <string>

#include "wres/ratfun/ratfun.hpp"
#include "wres/symb/context.hpp"

namespace wres {

// Sign in d/dx_n (|xi|^2)(x0) = kDxnNormSquaredSign * h'(0) |xi'|^2.
inline constexpr long kDxnNormSquaredSign = +1;

// Sum of (reduced Clifford word) x RatFun. The xi' components and formal
// scalars live in the RatFun coefficients; xi_n lives in the RatFun variable.
class BoundarySymbol {
 public:
  using Terms = std::map<CliffWord, RatFun>;

  explicit BoundarySymbol(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static BoundarySymbol scalar(const ContextPtr& ctx, const RatFun& r);
  static BoundarySymbol letter(const ContextPtr& ctx, const Letter& l);
  static BoundarySymbol c_z(const ContextPtr& ctx) { return letter(ctx, Letter::of(LetterKind::Z)); }
  static BoundarySymbol c_dxn(const ContextPtr& ctx);
  // c(xi) = c(xi') + xi_n c(dx_n)
  static BoundarySymbol c_xi(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  const SymbolContext& ctx() const { return *ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // The identity-word coefficient.
  RatFun scalar_part() const;

  void add_term(const CliffWord& w, const RatFun& r);

  BoundarySymbol& operator+=(const BoundarySymbol& o);
  BoundarySymbol& operator-=(const BoundarySymbol& o);
  friend BoundarySymbol operator+(BoundarySymbol a, const BoundarySymbol& b) { return a += b; }
  friend BoundarySymbol operator-(BoundarySymbol a, const BoundarySymbol& b) { return a -= b; }
  friend BoundarySymbol operator*(const BoundarySymbol& a, const BoundarySymbol& b);
  friend BoundarySymbol operator*(BoundarySymbol a, const RatFun& r);
  friend BoundarySymbol operator*(const RatFun& r, BoundarySymbol a) { return std::move(a) * r; }
  BoundarySymbol operator-() const;
  friend bool operator==(const BoundarySymbol& a, const BoundarySymbol& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  ContextPtr ctx_;
  Terms terms_;
};

BoundarySymbol bs_mul(const BoundarySymbol& a, const BoundarySymbol& b);
// Formal d/dx_n at x0. Only for unprojected symbols whose radial parts are P/|xi|^{2k}.
BoundarySymbol bs_dxn(const BoundarySymbol& a);
ScalarPoly sp_dxn(const ScalarPoly& p, const SymbolContext& ctx);
BoundarySymbol bs_dxi(const BoundarySymbol& a, unsigned order = 1);
BoundarySymbol bs_pi_plus(const BoundarySymbol& a);
// Clifford content traced out (tr[id] = 2^m folded); result has only the identity word.
BoundarySymbol bs_trace(const BoundarySymbol& a);
// Gamma+ integral of a traced symbol, with the formal symbol pi.
ScalarPoly bs_xi_n_int(const BoundarySymbol& a);
// Tangential derivative d/dx_i (i < n) at x0; vanishes on |xi|^2 and c(xi) sources.
BoundarySymbol bs_dx_tangential(const BoundarySymbol& a);
BoundarySymbol substitute_token(const BoundarySymbol& a, LetterKind token, const CliffExpr& replacement);

}  // namespace wres
