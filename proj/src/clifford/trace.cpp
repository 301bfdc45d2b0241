#include "wres/clifford/trace.hpp"

#include <functional>
#include <optional>

#include "wres/error.hpp"

namespace wres {

namespace {

using K = LetterKind;

ScalarPoly wick(const CliffWord& w, const CliffordContext& ctx) {
  if (w.empty()) return ScalarPoly(1);
  ScalarPoly acc;
  for (std::size_t j = 1; j < w.size(); ++j) {
    ScalarPoly g = ctx.pairing(w[0], w[j]);
    if (g.is_zero()) continue;
    CliffWord rest;
    rest.reserve(w.size() - 2);
    for (std::size_t k = 1; k < w.size(); ++k)
      if (k != j) rest.push_back(w[k]);
    // moving w[j] next to w[0] costs j-1 swaps
    ScalarPoly t = g * wick(rest, ctx);
    if (j % 2 == 1) {
      acc -= t;
    } else {
      acc += t;
    }
  }
  return acc;
}

struct TokenRule {
  CliffWord pattern;
  std::function<ScalarPoly(const CliffordContext&)> value;
};

ScalarPoly g_z_xi(const CliffordContext& ctx) { return ctx.pairing(Letter::of(K::Z), Letter::of(K::Xi)); }

ScalarPoly sum_xi(const CliffordContext& ctx, std::string_view base) {
  ScalarPoly r;
  for (unsigned k = 1; k < ctx.n; ++k) r += ctx.comp(base, k) * ctx.comp("xi", k);
  return r;
}

const GaussianRational kHalf = GaussianRational::fraction(1, 2);

std::vector<TokenRule> token_rules(unsigned n) {
  const Letter z = Letter::of(K::Z);
  const Letter xi = Letter::of(K::Xi);
  const Letter en = Letter::gen(n);
  std::vector<TokenRule> rules;
  // tr[c(Z) dxn[c(xi')]] = -1/2 h'(0) g(Z, xi')
  rules.push_back({{z, Letter::of(K::DXi)},
                   [](const CliffordContext& c) { return -(c.sym("h1") * g_z_xi(c)) * kHalf; }});
  // tr[dxn(c(Z)) c(xi')] = -dxn(g(Z, xi')) + 1/2 h'(0) g(Z, xi')
  rules.push_back({{Letter::of(K::DZ), xi},
                   [](const CliffordContext& c) { return -sum_xi(c, "dZ") + c.sym("h1") * g_z_xi(c) * kHalf; }});
  // tr[dxn(c(Z)) c(dxn)] = -dxn(Z_n)
  rules.push_back({{Letter::of(K::DZ), en}, [](const CliffordContext& c) { return -c.comp("dZ", c.n); }});
  // tr[c(Z) c(xi') c(dxn) dxn[c(xi')]] = -h'(0)/2 Z_n |xi'|^2
  rules.push_back({{z, xi, en, Letter::of(K::DXi)}, [](const CliffordContext& c) {
                     return -(c.sym("h1") * c.comp("Z", c.n) * c.pairing(Letter::of(K::Xi), Letter::of(K::Xi))) *
                            kHalf;
                   }});
  // tr[c(Z) A(X) c(xi')] = 1/2 sum_j <nabla_X d_n, e_j> xi_j ; tr[c(Z) A(X) c(dxn)] = 0
  rules.push_back({{z, Letter::of(K::AX), xi}, [](const CliffordContext& c) { return sum_xi(c, "kX") * kHalf; }});
  rules.push_back({{z, Letter::of(K::AX), en}, [](const CliffordContext&) { return ScalarPoly(); }});
  rules.push_back({{z, Letter::of(K::AY), xi}, [](const CliffordContext& c) { return sum_xi(c, "kY") * kHalf; }});
  rules.push_back({{z, Letter::of(K::AY), en}, [](const CliffordContext&) { return ScalarPoly(); }});
  return rules;
}

}  // namespace

bool is_volume_word(const CliffWord& w, unsigned n) {
  if (w.size() != n) return false;
  for (unsigned k = 0; k < n; ++k)
    if (w[k].kind != K::Gen || w[k].index != k + 1) return false;
  return true;
}

ScalarPoly cw_trace_word(const CliffWord& w, const CliffordContext& ctx) {
  std::size_t tokens = 0;
  for (const auto& l : w) tokens += l.is_vector() ? 0 : 1;
  if (tokens == 0) {
    if (is_volume_word(w, ctx.n)) throw TraceError("volume element submitted to the trace: " + word_str(w, ctx.n));
    if (w.size() % 2 == 1) {
      if (w.size() >= ctx.n) throw TraceError("odd word of length >= n may carry the volume element: " + word_str(w, ctx.n));
      return {};
    }
    return wick(w, ctx);
  }
  if (tokens == 1) {
    static thread_local unsigned cached_n = 0;
    static thread_local std::vector<TokenRule> rules;
    if (cached_n != ctx.n) {
      rules = token_rules(ctx.n);
      cached_n = ctx.n;
    }
    for (std::size_t r = 0; r < w.size(); ++r) {
      CliffWord rot(w.begin() + static_cast<long>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
      for (const auto& rule : rules)
        if (rule.pattern == rot) return rule.value(ctx);
    }
  }
  throw TraceError("untabulated trace pattern: " + word_str(w, ctx.n));
}

ScalarPoly cw_trace_rules(const CliffExpr& e, const CliffordContext& ctx) {
  ScalarPoly acc;
  for (const auto& [w, c] : cw_reduce(e, ctx)) {
    ScalarPoly t = cw_trace_word(w, ctx);
    if (!t.is_zero()) acc += c * t;
  }
  return acc * GaussianRational(2).pow(static_cast<long>(ctx.m()));
}

}  // namespace wres
