#include "wres/dsz/workspace.hpp"

#include "wres/error.hpp"

namespace wres {

Workspace::Workspace(const CoefficientCatalog& cat, unsigned m) : cat_(&cat), m_(m), ctx_(make_context(m)) {
  env_.m = m;
  env_.ctx = ctx_;
  env_.ref = [this](const std::string& name) { return record(name); };
  env_.coef = [this](const std::string& name) {
    auto it = coef_cache_.find(name);
    if (it == coef_cache_.end()) it = coef_cache_.emplace(name, cat_->defined(name, m_)).first;
    return it->second;
  };
}

const BoundarySymbol& Workspace::record(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) return it->second;
  const GoldenRecord& r = cat_->goldens().at(name);
  if (!active_.insert(name).second) throw Error("record '" + name + "' refers to itself");
  BoundarySymbol v(ctx_);
  try {
    v = eval_expr(r.expr, env_);
    active_.erase(name);
  } catch (const Error& e) {
    active_.erase(name);
    throw Error("record '" + name + "' (goldens line " + std::to_string(r.line) + "): " + e.what());
  }
  return cache_.emplace(name, std::move(v)).first->second;
}

BoundarySymbol Workspace::eval(const std::string& expr_text) { return eval(parse_expr(expr_text)); }

BoundarySymbol Workspace::eval(const ExprNode& node) { return eval_expr(node, env_); }

ScalarPoly Workspace::scalar(const std::string& name) {
  const BoundarySymbol& v = record(name);
  for (const auto& [w, r] : v.terms())
    if (!w.empty()) throw Error("record '" + name + "' has Clifford content");
  auto s = v.scalar_part().as_scalar();
  if (!s) throw Error("record '" + name + "' depends on xi_n");
  return *s;
}

}  // namespace wres
