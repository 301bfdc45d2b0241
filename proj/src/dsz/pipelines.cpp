#include "wres/dsz/pipelines.hpp"

#include <exception>
#include <functional>

#include "wres/error.hpp"
#include "wres/symb/sphere.hpp"

namespace wres {

std::string theorem_str(Theorem t) { return t == Theorem::A ? "A" : "B"; }

std::string case_str(CaseId c) {
  static const std::array<std::string, 5> names{"I", "II", "III", "IV", "V"};
  return names[static_cast<std::size_t>(c)];
}

std::optional<Theorem> parse_theorem(const std::string& s) {
  if (s == "A" || s == "a") return Theorem::A;
  if (s == "B" || s == "b") return Theorem::B;
  return std::nullopt;
}

std::optional<CaseId> parse_case(const std::string& s) {
  for (CaseId c : kCases)
    if (case_str(c) == s) return c;
  return std::nullopt;
}

const CaseSpec& case_spec(Theorem t, CaseId c) {
  static const std::vector<CaseSpec> specs{
      {Theorem::A, CaseId::I, 1, 0, 0, "lemma:A.sigma1", "lemma:A.R0", {"display:A.pi-sigma1"}},
      {Theorem::A, CaseId::II, 0, 1, 0, "lemma:A.sigma1", "lemma:A.R0", {"display:A.dxn-pi-sigma1"}},
      {Theorem::A, CaseId::III, 0, 0, 1, "lemma:A.sigma1", "lemma:A.R0", {"display:A.pi-sigma1"}},
      {Theorem::A, CaseId::IV, 0, 0, 0, "lemma:A.sigma1", "lemma:A.R1", {"display:A.pi-sigma1"}},
      {Theorem::A, CaseId::V, 0, 0, 0, "src:A.sigma0", "lemma:A.R0",
       {"display:A.pi-A1", "display:A.pi-A2", "display:A.pi-A3"}},
      {Theorem::B, CaseId::I, 1, 0, 0, "lemma:B.sigma0", "lemma:B.R0", {"display:B.pi-sigma0"}},
      {Theorem::B, CaseId::II, 0, 1, 0, "lemma:B.sigma0", "lemma:B.R0", {"display:B.dxn-pi-sigma0"}},
      {Theorem::B, CaseId::III, 0, 0, 1, "lemma:B.sigma0", "lemma:B.R0", {"display:B.pi-sigma0"}},
      {Theorem::B, CaseId::IV, 0, 0, 0, "lemma:B.sigma0", "lemma:B.R1", {"display:B.pi-sigma0"}},
      {Theorem::B, CaseId::V, 0, 0, 0, "src:B.sigma-1", "lemma:B.R0",
       {"display:B.pi-B1", "display:B.pi-B2", "display:B.pi-B3"}},
  };
  return specs[static_cast<std::size_t>(t) * kCases.size() + static_cast<std::size_t>(c)];
}

GaussianRational case_prefactor(const CaseSpec& s) {
  const unsigned e = s.alpha + s.j + s.k + 1;
  GaussianRational num = (-GaussianRational::i()).pow(static_cast<long>(e));
  mpz_class den = 1;
  for (unsigned q = 2; q <= s.j + s.k + 1; ++q) den *= q;
  return num / GaussianRational(mpq_class(den));
}

namespace {

template <class F>
auto step(const CaseSpec& s, unsigned m, const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw PipelineError(theorem_str(s.theorem) + "-" + case_str(s.id) + " m=" + std::to_string(m) + " step '" +
                        name + "': " + e.what());
  }
}

BoundarySymbol dxn_pow(BoundarySymbol a, unsigned k) {
  for (unsigned q = 0; q < k; ++q) a = bs_dxn(a);
  return a;
}

// prefactor * int_{|xi'|=1} int tr[left * right] dxi_n
ScalarPoly integrate(const BoundarySymbol& left, const BoundarySymbol& right, const GaussianRational& pref,
                     const SymbolContext& ctx) {
  return sphere_integrate(bs_xi_n_int(bs_trace(left * right)), ctx) * pref;
}

}  // namespace

CaseReport run_case(Workspace& ws, Theorem t, CaseId c) {
  const CaseSpec& s = case_spec(t, c);
  const unsigned m = ws.m();
  const SymbolContext& ctx = ws.ctx();
  CaseReport r;
  r.theorem = t;
  r.id = c;
  r.m = m;
  const GaussianRational pref = case_prefactor(s);
  const BoundarySymbol& src_l = step(s, m, "left input", [&]() -> const BoundarySymbol& { return ws.record(s.left); });
  const BoundarySymbol& src_r =
      step(s, m, "right input", [&]() -> const BoundarySymbol& { return ws.record(s.right); });
  r.expected = step(s, m, "expected value", [&] { return ws.scalar("phi:" + theorem_str(t) + "." + case_str(c)); });

  if (s.alpha > 0) {
    // Tangential derivatives of the right factor vanish at x0.
    const BoundarySymbol right = step(s, m, "tangential derivative", [&] { return bs_dx_tangential(src_r); });
    const BoundarySymbol left = step(s, m, "projection", [&] { return bs_pi_plus(src_l); });
    r.computed = step(s, m, "integration", [&] { return integrate(left, right, pref, ctx); });
    r.by_parts_phi = r.computed;
    r.by_parts_ok = true;
    r.display_phi = r.computed;
    r.omitted_vanish = true;
  } else {
    const BoundarySymbol p_engine = step(s, m, "projection", [&] { return bs_pi_plus(dxn_pow(src_l, s.j)); });
    BoundarySymbol p_display(ws.context());
    step(s, m, "display", [&] {
      for (const auto& d : s.display) p_display += ws.record(d);
      return 0;
    });
    const BoundarySymbol right =
        step(s, m, "right factor", [&] { return bs_dxi(dxn_pow(src_r, s.k), s.j + 1); });
    const auto phi = [&](const BoundarySymbol& p) {
      return step(s, m, "integration", [&] { return integrate(bs_dxi(p, s.k), right, pref, ctx); });
    };
    r.computed = phi(p_engine);
    r.display_phi = phi(p_display);
    r.omitted_phi = phi(p_engine - p_display);
    r.omitted_vanish = r.omitted_phi.is_zero();
    r.by_parts_phi = step(s, m, "integration by parts", [&] {
      const GaussianRational sign((s.j + 1) % 2 == 0 ? 1 : -1);
      return integrate(bs_dxi(p_engine, s.k + s.j + 1), dxn_pow(src_r, s.k), pref * sign, ctx);
    });
    r.by_parts_ok = r.by_parts_phi == r.computed;
  }
  r.diff = r.computed - r.expected;
  r.match = r.diff.is_zero();
  return r;
}

CaseReport run_case(const CoefficientCatalog& cat, Theorem t, CaseId c, unsigned m) {
  Workspace ws(cat, m);
  return run_case(ws, t, c);
}

TheoremReport assemble_theorem(Workspace& ws, Theorem t, std::vector<CaseReport> cases) {
  if (cases.size() != kCases.size()) throw Error("assemble_theorem: need five case reports");
  TheoremReport r;
  r.theorem = t;
  r.m = ws.m();
  r.cases = std::move(cases);
  ScalarPoly printed_sum;
  for (const auto& c : r.cases) {
    if (c.theorem != t || c.m != r.m) throw Error("assemble_theorem: case report for a different theorem or m");
    r.total += c.computed;
    printed_sum += c.expected;
  }
  r.expected = ws.scalar("thm:" + theorem_str(t));
  r.diff = r.total - r.expected;
  r.match = r.diff.is_zero();
  r.printed_cases_sum_to_theorem = printed_sum == r.expected;
  const Decomposition got = decompose_structures(r.total, ws.ctx());
  const Decomposition want = decompose_structures(r.expected, ws.ctx());
  if (!want.remainder.is_zero())
    throw Error("thm:" + theorem_str(t) + " is not a combination of the five structures");
  for (std::size_t s = 0; s < kStructureCount; ++s)
    r.structures.push_back({structure_labels()[s], got.coeff[s], want.coeff[s], got.coeff[s] == want.coeff[s]});
  r.remainder = got.remainder;
  return r;
}

TheoremReport run_theorem(const CoefficientCatalog& cat, Theorem t, unsigned m) {
  Workspace ws(cat, m);
  std::vector<CaseReport> cases;
  for (CaseId c : kCases) cases.push_back(run_case(ws, t, c));
  return assemble_theorem(ws, t, std::move(cases));
}

std::vector<CaseReport> run_cases(const CoefficientCatalog& cat, const std::vector<CaseKey>& keys, Exec exec) {
  std::vector<CaseReport> out(keys.size());
  std::vector<std::exception_ptr> errors(keys.size());
  const long total = static_cast<long>(keys.size());
  const auto work = [&](long q) {
    const auto u = static_cast<std::size_t>(q);
    try {
      out[u] = run_case(cat, keys[u].theorem, keys[u].id, keys[u].m);
    } catch (...) {
      errors[u] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long q = 0; q < total; ++q) work(q);
  } else {
    for (long q = 0; q < total; ++q) work(q);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<TheoremReport> run_theorems(const CoefficientCatalog& cat, unsigned m_lo, unsigned m_hi, Exec exec) {
  if (m_lo < 1 || m_lo > m_hi) throw Error("run_theorems: need 1 <= m_lo <= m_hi");
  std::vector<CaseKey> keys;
  for (Theorem t : kTheorems)
    for (unsigned m = m_lo; m <= m_hi; ++m)
      for (CaseId c : kCases) keys.push_back({t, c, m});
  std::vector<CaseReport> reports = run_cases(cat, keys, exec);
  std::vector<TheoremReport> out;
  std::size_t q = 0;
  for (Theorem t : kTheorems)
    for (unsigned m = m_lo; m <= m_hi; ++m) {
      Workspace ws(cat, m);
      std::vector<CaseReport> cases(reports.begin() + static_cast<long>(q),
                                    reports.begin() + static_cast<long>(q + kCases.size()));
      q += kCases.size();
      out.push_back(assemble_theorem(ws, t, std::move(cases)));
    }
  return out;
}

}  // namespace wres
