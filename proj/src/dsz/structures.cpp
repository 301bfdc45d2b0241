#include "wres/dsz/structures.hpp"

#include <exception>

#include "wres/error.hpp"

namespace wres {

const std::array<std::string, kStructureCount>& structure_labels() {
  static const std::array<std::string, kStructureCount> labels{
      "d/dx_n(g(X^T,Y^T)Z_n)", "d/dx_n(X_nY_nZ_n)", "g(X^T,Y^T)Z_nh'(0)", "X_nY_nZ_nh'(0)", "X(Y_n)Z_n"};
  return labels;
}

std::array<ScalarPoly, kStructureCount> structure_polys(const SymbolContext& ctx) {
  const unsigned n = ctx.n;
  ScalarPoly g;
  for (unsigned k = 1; k < n; ++k) g += ctx.comp("X", k) * ctx.comp("Y", k);
  const ScalarPoly zn = ctx.comp("Z", n);
  const ScalarPoly xyz = ctx.comp("X", n) * ctx.comp("Y", n) * zn;
  ScalarPoly xyn;
  for (unsigned j = 1; j <= n; ++j) xyn += ctx.comp("X", j) * ctx.dy(j, n);
  return {sp_dxn(g * zn, ctx), sp_dxn(xyz, ctx), g * zn * ctx.h1(), xyz * ctx.h1(), xyn * zn};
}

namespace {

Monomial monomial_of(const ScalarPoly& p) {
  if (p.terms().size() != 1) throw Error("structure marker must be a single monomial");
  return p.terms().begin()->first;
}

}  // namespace

Decomposition decompose_structures(const ScalarPoly& phi, const SymbolContext& ctx) {
  const unsigned n = ctx.n;
  const ScalarPoly pv = ctx.pi() * ctx.vol();
  const ScalarPoly x1y1 = ctx.comp("X", 1) * ctx.comp("Y", 1);
  const ScalarPoly xnyn = ctx.comp("X", n) * ctx.comp("Y", n);
  const ScalarPoly zn = ctx.comp("Z", n);
  const std::array<ScalarPoly, kStructureCount> markers{
      x1y1 * ctx.comp("dZ", n) * pv, xnyn * ctx.comp("dZ", n) * pv, x1y1 * zn * ctx.h1() * pv,
      xnyn * zn * ctx.h1() * pv, ctx.comp("X", 1) * ctx.dy(1, n) * zn * pv};
  const auto polys = structure_polys(ctx);
  Decomposition d;
  d.remainder = phi;
  for (std::size_t s = 0; s < kStructureCount; ++s) {
    d.coeff[s] = phi.coefficient(monomial_of(markers[s]));
    d.remainder -= polys[s] * pv * d.coeff[s];
  }
  return d;
}

std::map<std::string, RatFun> term_keys(const BoundarySymbol& s) {
  std::map<std::string, RatFun> out;
  const unsigned n = s.context() ? s.ctx().n : 0;
  for (const auto& [w, r] : s.terms()) {
    const auto& coeffs = r.numerator().coeffs();
    std::map<Monomial, std::vector<ScalarPoly>> split;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      for (const auto& [mono, c] : coeffs[k].terms()) {
        auto& v = split[mono];
        v.resize(coeffs.size());
        v[k] = ScalarPoly(c);
      }
    const std::string word = "[" + word_str(w, n) + "]";
    for (auto& [mono, v] : split) {
      const std::string key = word + " " + monomial_str(s.context() ? s.ctx().alphabet.get() : nullptr, mono);
      out[key] += RatFun(XiPoly(std::move(v)), r.pole_order_plus(), r.pole_order_minus());
    }
  }
  return out;
}

const std::vector<DisplaySpec>& display_specs() {
  static const std::vector<DisplaySpec> specs{
      {"display:A.pi-sigma1", "(pi+ (ref lemma:A.sigma1))"},
      {"display:A.dxi-pi-sigma1", "(dxi (pi+ (ref lemma:A.sigma1)))"},
      {"display:A.dxi2-pi-sigma1", "(dxi (pi+ (ref lemma:A.sigma1)) 2)"},
      {"display:A.dxn-pi-sigma1", "(pi+ (dxn (ref lemma:A.sigma1)))"},
      {"display:A.dxi2-dxn-pi-sigma1", "(dxi (pi+ (dxn (ref lemma:A.sigma1))) 2)"},
      {"display:A.pi-A1", "(pi+ (ref src:A.A1))"},
      {"display:A.pi-A2", "(pi+ (ref src:A.A2))"},
      {"display:A.pi-A3", "(pi+ (ref src:A.A3))"},
      {"display:B.pi-sigma0", "(pi+ (ref lemma:B.sigma0))"},
      {"display:B.dxi-pi-sigma0", "(dxi (pi+ (ref lemma:B.sigma0)))"},
      {"display:B.dxi2-pi-sigma0", "(dxi (pi+ (ref lemma:B.sigma0)) 2)"},
      {"display:B.dxn-pi-sigma0", "(pi+ (dxn (ref lemma:B.sigma0)))"},
      {"display:B.dxi2-dxn-pi-sigma0", "(dxi (pi+ (dxn (ref lemma:B.sigma0))) 2)"},
      {"display:B.pi-B1", "(pi+ (ref src:B.B1))"},
      {"display:B.pi-B2", "(pi+ (ref src:B.B2))"},
      {"display:B.pi-B3", "(pi+ (ref src:B.B3))"},
  };
  return specs;
}

DisplayCheck check_display(Workspace& ws, const DisplaySpec& spec) {
  DisplayCheck c;
  c.record = spec.record;
  c.m = ws.m();
  const auto printed = term_keys(ws.record(spec.record));
  const auto engine = term_keys(ws.eval(spec.engine));
  c.printed_terms = printed.size();
  c.engine_terms = engine.size();
  for (const auto& [key, value] : printed) {
    auto it = engine.find(key);
    if (it == engine.end()) {
      c.mismatched.push_back({key, value.str(), "absent"});
    } else if (!(it->second == value)) {
      c.mismatched.push_back({key, value.str(), it->second.str()});
    }
  }
  for (const auto& [key, value] : engine)
    if (!printed.count(key)) c.omitted.push_back(key);
  c.match = c.mismatched.empty();
  return c;
}

std::vector<DisplayCheck> run_displays(const CoefficientCatalog& cat, unsigned m_lo, unsigned m_hi, Exec exec) {
  if (m_lo < 1 || m_lo > m_hi) throw Error("run_displays: need 1 <= m_lo <= m_hi");
  const auto& specs = display_specs();
  const long span = static_cast<long>(m_hi - m_lo + 1);
  std::vector<DisplayCheck> out(specs.size() * static_cast<std::size_t>(span));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(span));
  const auto work = [&](long q) {
    try {
      Workspace ws(cat, m_lo + static_cast<unsigned>(q));
      for (std::size_t s = 0; s < specs.size(); ++s)
        out[s * static_cast<std::size_t>(span) + static_cast<std::size_t>(q)] = check_display(ws, specs[s]);
    } catch (...) {
      errors[static_cast<std::size_t>(q)] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long q = 0; q < span; ++q) work(q);
  } else {
    for (long q = 0; q < span; ++q) work(q);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace wres
