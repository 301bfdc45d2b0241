#include "wres/dsz/coefficients.hpp"

#include <exception>
#include <functional>
#include <set>

#include "wres/error.hpp"

namespace wres {

const std::vector<std::string>& coefficient_names() {
  static const std::vector<std::string> names{"A0", "A1", "A2", "A3", "B0", "B1", "C0", "C1", "C2",
                                              "C3", "D0", "D1", "D2", "D3", "E0", "E1", "E2", "E3",
                                              "F0", "F1", "G0", "G1", "H0", "H1", "H2", "H3", "H4", "H5"};
  return names;
}

const std::vector<std::string>& swept_coefficient_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& n : coefficient_names())
      if (n != "H5") v.push_back(n);
    return v;
  }();
  return names;
}

namespace {

void collect_coef_names(const ExprNode& n, std::set<std::string>& out) {
  if (!n.is_list) return;
  if (n.head() == "coef" && n.kids.size() == 2 && !n.kids[1].is_list) out.insert(n.kids[1].atom);
  for (const auto& k : n.kids) collect_coef_names(k, out);
}

ExprEnv scalar_env(const Goldens& g, unsigned m) {
  ExprEnv env;
  env.m = m;
  const Goldens* gp = &g;
  env.ref = [gp, m](const std::string& name) {
    ExprEnv inner;
    inner.m = m;
    return eval_expr(gp->at(name).expr, inner);
  };
  return env;
}

}  // namespace

CoefficientCatalog::CoefficientCatalog(const Goldens& goldens) : goldens_(&goldens) {
  for (const auto& name : coefficient_names())
    for (const char* prefix : {"def:", "closed:"})
      if (!goldens.contains(prefix + name)) throw Error(std::string("coefficient catalog: missing record ") + prefix + name);
  std::set<std::string> used;
  for (const auto& r : goldens.records())
    if (r.name.rfind("phi:", 0) == 0 || r.name.rfind("thm:", 0) == 0) collect_coef_names(r.expr, used);
  for (const auto& u : used)
    if (!contains(u)) throw Error("coefficient catalog: (coef " + u + ") has no catalog entry");
}

bool CoefficientCatalog::contains(const std::string& name) const {
  for (const auto& n : coefficient_names())
    if (n == name) return true;
  return false;
}

GaussianRational CoefficientCatalog::eval(const std::string& record, unsigned m) const {
  if (m < 1) throw Error("coefficient: m must be at least 1");
  return eval_constant(goldens_->at(record).expr, scalar_env(*goldens_, m));
}

GaussianRational CoefficientCatalog::defined(const std::string& name, unsigned m) const {
  if (!contains(name)) throw Error("unknown coefficient '" + name + "'");
  return eval("def:" + name, m);
}

GaussianRational CoefficientCatalog::closed(const std::string& name, unsigned m) const {
  if (!contains(name)) throw Error("unknown coefficient '" + name + "'");
  return eval("closed:" + name, m);
}

std::vector<CoeffRow> verify_coefficients(const CoefficientCatalog& cat, unsigned m_lo, unsigned m_hi, Exec exec) {
  if (m_lo < 1 || m_lo > m_hi) throw Error("verify_coefficients: need 1 <= m_lo <= m_hi");
  const auto& names = swept_coefficient_names();
  const long span = static_cast<long>(m_hi - m_lo + 1);
  const long total = static_cast<long>(names.size()) * span;
  std::vector<CoeffRow> rows(static_cast<std::size_t>(total));
  std::vector<std::exception_ptr> errors(rows.size());
  const auto work = [&](long t) {
    try {
      CoeffRow& r = rows[static_cast<std::size_t>(t)];
      r.name = names[static_cast<std::size_t>(t / span)];
      r.m = m_lo + static_cast<unsigned>(t % span);
      r.defined = cat.defined(r.name, r.m);
      r.closed = cat.closed(r.name, r.m);
      r.match = r.defined == r.closed;
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < total; ++t) work(t);
  } else {
    for (long t = 0; t < total; ++t) work(t);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

H5Probe probe_h5(const CoefficientCatalog& cat, unsigned m) {
  if (m < 1) throw Error("probe_h5: m must be at least 1");
  const ExprNode& def = cat.goldens().at("def:H5").expr;
  if (def.head() != "at-i" || def.kids.size() != 3) throw Error("def:H5 must have the form (at-i N e)");
  const ExprEnv env = scalar_env(cat.goldens(), m);
  const BoundarySymbol inner = eval_expr(def.kids[2], env);
  const RatFun f = inner.scalar_part();
  const auto at = [&](unsigned order) {
    auto c = rf_deriv_at(f, order, GaussianRational::i()).as_constant();
    if (!c) throw Error("probe_h5: bracket is not constant in m");
    return *c;
  };
  return H5Probe{m, at(m), at(m + 2)};
}

}  // namespace wres
