#include "wres/symb/context.hpp"

#include "wres/error.hpp"

namespace wres {

ScalarPoly SymbolContext::dy(unsigned j, unsigned l) const {
  if (j == n) return comp("dY", l);
  return sym("DY" + std::to_string(j) + "_" + component("", l, n));
}

ContextPtr make_context(unsigned m) {
  if (m < 1 || m > 6) throw Error("make_context: m must lie in 1..6");
  auto ctx = std::make_shared<SymbolContext>();
  ctx->m = m;
  ctx->n = 2 * m + 1;
  const unsigned n = ctx->n;
  std::vector<std::string> names{"h1", "pi", "Vol"};
  for (const char* base : {"X", "Y", "Z", "dX", "dY", "dZ"})
    for (unsigned k = 1; k <= n; ++k) names.push_back(component(base, k, n));
  for (unsigned j = 1; j < n; ++j)
    for (unsigned l = 1; l <= n; ++l) names.push_back("DY" + std::to_string(j) + "_" + component("", l, n));
  for (const char* base : {"kX", "kY", "xi"})
    for (unsigned k = 1; k < n; ++k) names.push_back(component(base, k, n));
  ctx->alphabet = std::make_shared<const Alphabet>(std::move(names));
  const Alphabet& a = *ctx->alphabet;
  ctx->dxn_map.assign(a.size(), SymbolContext::kDxnNoRule);
  ctx->is_xi.assign(a.size(), false);
  for (const char* s : {"pi", "Vol"}) ctx->dxn_map[a.at(s)] = SymbolContext::kDxnZero;
  for (unsigned k = 1; k <= n; ++k)
    for (const char* base : {"X", "Y", "Z"})
      ctx->dxn_map[a.at(component(base, k, n))] = a.at(component(std::string("d") + base, k, n));
  for (unsigned k = 1; k < n; ++k) {
    ctx->dxn_map[a.at(component("xi", k, n))] = SymbolContext::kDxnZero;
    ctx->is_xi[a.at(component("xi", k, n))] = true;
  }
  ctx->cliff.n = n;
  ctx->cliff.alphabet = ctx->alphabet;
  ctx->cliff.unit_xi = true;
  return ctx;
}

}  // namespace wres
