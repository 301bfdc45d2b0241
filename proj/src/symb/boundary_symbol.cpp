#include "wres/symb/boundary_symbol.hpp"

#include "wres/clifford/trace.hpp"
#include "wres/error.hpp"

namespace wres {

BoundarySymbol BoundarySymbol::scalar(const ContextPtr& ctx, const RatFun& r) {
  BoundarySymbol s(ctx);
  s.add_term({}, r);
  return s;
}

BoundarySymbol BoundarySymbol::letter(const ContextPtr& ctx, const Letter& l) {
  BoundarySymbol s(ctx);
  s.add_term({l}, RatFun(1));
  return s;
}

BoundarySymbol BoundarySymbol::c_dxn(const ContextPtr& ctx) { return letter(ctx, Letter::gen(ctx->n)); }

BoundarySymbol BoundarySymbol::c_xi(const ContextPtr& ctx) {
  BoundarySymbol s(ctx);
  s.add_term({Letter::of(LetterKind::Xi)}, RatFun(1));
  s.add_term({Letter::gen(ctx->n)}, RatFun::xi());
  return s;
}

RatFun BoundarySymbol::scalar_part() const {
  auto it = terms_.find(CliffWord{});
  return it == terms_.end() ? RatFun() : it->second;
}

void BoundarySymbol::add_term(const CliffWord& w, const RatFun& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BoundarySymbol& BoundarySymbol::operator+=(const BoundarySymbol& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [w, r] : o.terms_) add_term(w, r);
  return *this;
}

BoundarySymbol& BoundarySymbol::operator-=(const BoundarySymbol& o) { return *this += -o; }

BoundarySymbol BoundarySymbol::operator-() const {
  BoundarySymbol r = *this;
  for (auto& [w, f] : r.terms_) f = -f;
  return r;
}

BoundarySymbol operator*(const BoundarySymbol& a, const BoundarySymbol& b) { return bs_mul(a, b); }

BoundarySymbol operator*(BoundarySymbol a, const RatFun& r) {
  BoundarySymbol out(a.ctx_);
  for (const auto& [w, f] : a.terms_) out.add_term(w, f * r);
  return out;
}

std::string BoundarySymbol::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, r] : terms_) {
    if (!s.empty()) s += "\n+ ";
    s += "[" + word_str(w, ctx_ ? ctx_->n : 0) + "] * " + r.str();
  }
  return s;
}

BoundarySymbol bs_mul(const BoundarySymbol& a, const BoundarySymbol& b) {
  BoundarySymbol out(a.context() ? a.context() : b.context());
  for (const auto& [wa, ra] : a.terms())
    for (const auto& [wb, rb] : b.terms()) {
      CliffWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      RatFun prod = ra * rb;
      if (prod.is_zero()) continue;
      if (w.size() < 2) {
        out.add_term(w, prod);
        continue;
      }
      for (const auto& [rw, c] : cw_reduce(w, out.ctx().cliff)) out.add_term(rw, prod * c);
    }
  return out;
}

ScalarPoly sp_dxn(const ScalarPoly& p, const SymbolContext& ctx) {
  ScalarPoly::Terms out;
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t k = 0; k < mono.size(); ++k) {
      const auto [var, exp] = mono[k];
      const long d = ctx.dxn_map.at(var);
      if (d == SymbolContext::kDxnZero) continue;
      if (d == SymbolContext::kDxnNoRule)
        throw RuleError("no d/dx_n rule for symbol '" + ctx.alphabet->name(var) + "'");
      Monomial rest = mono;
      if (exp == 1) {
        rest.erase(rest.begin() + static_cast<long>(k));
      } else {
        rest[k].second = exp - 1;
      }
      Monomial term = monomial_mul(rest, Monomial{{static_cast<std::uint32_t>(d), 1}});
      out[term] += c * GaussianRational(static_cast<long>(exp));
    }
  }
  ScalarPoly::Terms clean;
  for (auto& [mono, c] : out)
    if (!c.is_zero()) clean.emplace(mono, c);
  return ScalarPoly::from_terms(ctx.alphabet, std::move(clean));
}

namespace {

RatFun radial_dxn(const RatFun& r, const SymbolContext& ctx) {
  const unsigned k = r.pole_order_plus();
  if (k != r.pole_order_minus())
    throw RuleError("d/dx_n needs a radial part of the form P/|xi|^{2k}; got " + r.str());
  std::vector<ScalarPoly> dc;
  for (const auto& c : r.numerator().coeffs()) dc.push_back(sp_dxn(c, ctx));
  RatFun out(XiPoly(std::move(dc)), k, k);
  if (k > 0) {
    ScalarPoly factor = ctx.h1() * GaussianRational(-static_cast<long>(k) * kDxnNormSquaredSign);
    out += RatFun(r.numerator() * factor, k + 1, k + 1);
  }
  return out;
}

std::optional<Letter> letter_dxn(const Letter& l, unsigned n) {
  switch (l.kind) {
    case LetterKind::Z:
      return Letter::of(LetterKind::DZ);
    case LetterKind::Xi:
      return Letter::of(LetterKind::DXi);
    case LetterKind::Gen:
      if (l.index == n) return std::nullopt;
      break;
    default:
      break;
  }
  throw RuleError("no d/dx_n rule for Clifford letter " + letter_str(l, n));
}

}  // namespace

BoundarySymbol bs_dxn(const BoundarySymbol& a) {
  const SymbolContext& ctx = a.ctx();
  BoundarySymbol out(a.context());
  for (const auto& [w, r] : a.terms()) {
    out.add_term(w, radial_dxn(r, ctx));
    for (std::size_t p = 0; p < w.size(); ++p) {
      auto dl = letter_dxn(w[p], ctx.n);
      if (!dl) continue;
      CliffWord dw = w;
      dw[p] = *dl;
      for (const auto& [rw, c] : cw_reduce(dw, ctx.cliff)) out.add_term(rw, r * c);
    }
  }
  return out;
}

BoundarySymbol bs_dxi(const BoundarySymbol& a, unsigned order) {
  BoundarySymbol out(a.context());
  for (const auto& [w, r] : a.terms()) {
    RatFun d = r;
    for (unsigned k = 0; k < order; ++k) d = rf_deriv(d);
    out.add_term(w, d);
  }
  return out;
}

BoundarySymbol bs_pi_plus(const BoundarySymbol& a) {
  BoundarySymbol out(a.context());
  for (const auto& [w, r] : a.terms()) out.add_term(w, rf_pi_plus(r));
  return out;
}

BoundarySymbol bs_trace(const BoundarySymbol& a) {
  const SymbolContext& ctx = a.ctx();
  const ScalarPoly tr_id = ScalarPoly(GaussianRational(2).pow(static_cast<long>(ctx.m)));
  RatFun acc;
  for (const auto& [w, r] : a.terms()) {
    ScalarPoly t = w.empty() ? ScalarPoly(1) : cw_trace_word(w, ctx.cliff);
    if (!t.is_zero()) acc += r * (t * tr_id);
  }
  return BoundarySymbol::scalar(a.context(), acc);
}

ScalarPoly bs_xi_n_int(const BoundarySymbol& a) {
  for (const auto& [w, r] : a.terms())
    if (!w.empty()) throw IntegrationError("xi_n integration of a symbol with Clifford content");
  return rf_contour_plus(a.scalar_part(), a.ctx().pi());
}

BoundarySymbol bs_dx_tangential(const BoundarySymbol& a) {
  const unsigned n = a.ctx().n;
  for (const auto& [w, r] : a.terms()) {
    for (const auto& l : w)
      if (!(l.kind == LetterKind::Xi || (l.kind == LetterKind::Gen && l.index == n)))
        throw RuleError("no tangential derivative rule for " + letter_str(l, n));
    if (r.pole_order_plus() != r.pole_order_minus())
      throw RuleError("tangential derivative needs a radial part P/|xi|^{2k}");
    for (const auto& c : r.numerator().coeffs())
      if (!c.is_constant()) throw RuleError("tangential derivative of a symbol with x-dependent coefficients");
  }
  return BoundarySymbol(a.context());
}

BoundarySymbol substitute_token(const BoundarySymbol& a, LetterKind token, const CliffExpr& replacement) {
  const CliffordContext& cc = a.ctx().cliff;
  BoundarySymbol out(a.context());
  for (const auto& [w, r] : a.terms()) {
    CliffExpr acc{{CliffWord{}, ScalarPoly(1)}};
    for (const auto& l : w) {
      if (l.kind == token) {
        acc = cexpr_mul(acc, replacement, cc);
      } else {
        acc = cexpr_mul(acc, CliffExpr{{CliffWord{l}, ScalarPoly(1)}}, cc);
      }
    }
    for (const auto& [rw, c] : acc) out.add_term(rw, r * c);
  }
  return out;
}

}  // namespace wres
