#include "wres/symb/sphere.hpp"

#include "wres/error.hpp"

namespace wres {

namespace {

struct Split {
  Monomial xi_part;
  Monomial rest;
  unsigned xi_degree = 0;
};

Split split_xi(const Monomial& mono, const SymbolContext& ctx) {
  Split s;
  for (const auto& [v, e] : mono) {
    if (ctx.is_xi[v]) {
      s.xi_part.emplace_back(v, e);
      s.xi_degree += e;
    } else {
      s.rest.emplace_back(v, e);
    }
  }
  return s;
}

}  // namespace

ScalarPoly unit_sphere_reduce(const ScalarPoly& p, const SymbolContext& ctx) {
  if (ctx.n < 3) return p;
  const std::uint32_t xi1 = ctx.alphabet->at(component("xi", 1, ctx.n));
  ScalarPoly cur = p;
  for (;;) {
    ScalarPoly next;
    bool changed = false;
    for (const auto& [mono, c] : cur.terms()) {
      const Split s = split_xi(mono, ctx);
      std::uint32_t e1 = 0;
      for (const auto& [v, e] : s.xi_part)
        if (v == xi1) e1 = e;
      ScalarPoly term = ScalarPoly::from_terms(ctx.alphabet, {{mono, c}});
      if (s.xi_degree < 4 || e1 < 2) {
        next += term;
        continue;
      }
      changed = true;
      Monomial reduced = mono;
      for (auto it = reduced.begin(); it != reduced.end(); ++it)
        if (it->first == xi1) {
          if (it->second == 2) {
            reduced.erase(it);
          } else {
            it->second -= 2;
          }
          break;
        }
      ScalarPoly repl(1);
      for (unsigned j = 2; j < ctx.n; ++j) repl -= ctx.xi(j).pow(2);
      next += ScalarPoly::from_terms(ctx.alphabet, {{reduced, c}}) * repl;
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
}

ScalarPoly sphere_integrate(const ScalarPoly& p, const SymbolContext& ctx) {
  const ScalarPoly reduced = unit_sphere_reduce(p, ctx);
  const GaussianRational inv_dim = GaussianRational(static_cast<long>(ctx.n - 1)).inverse();
  const ScalarPoly vol = ctx.vol();
  ScalarPoly out;
  for (const auto& [mono, c] : reduced.terms()) {
    const Split s = split_xi(mono, ctx);
    if (s.xi_degree % 2 == 1) continue;
    const ScalarPoly rest = ScalarPoly::from_terms(ctx.alphabet, {{s.rest, c}});
    if (s.xi_degree == 0) {
      out += rest * vol;
    } else if (s.xi_degree == 2) {
      if (s.xi_part.size() == 1) out += rest * vol * inv_dim;
    } else {
      throw IntegrationError("unsupported sphere moment of degree " + std::to_string(s.xi_degree));
    }
  }
  return out;
}

}  // namespace wres
