#pragma once

#include <map>
#include <set>
#include <string>

#include "wres/dsz/coefficients.hpp"

namespace wres {

// Evaluates goldens records and engine expressions at one m with a shared
// symbol context. (ref NAME) results are memoized; (coef NAME) uses the
// derivative definition. Not copyable: the evaluation callbacks refer to it.
class Workspace {
 public:
  Workspace(const CoefficientCatalog& cat, unsigned m);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  unsigned m() const { return m_; }
  const ContextPtr& context() const { return ctx_; }
  const SymbolContext& ctx() const { return *ctx_; }
  const CoefficientCatalog& catalog() const { return *cat_; }

  const BoundarySymbol& record(const std::string& name);
  BoundarySymbol eval(const std::string& expr_text);
  BoundarySymbol eval(const ExprNode& node);
  // Record value as an x-free polynomial.
  ScalarPoly scalar(const std::string& name);

 private:
  const CoefficientCatalog* cat_;
  unsigned m_;
  ContextPtr ctx_;
  ExprEnv env_;
  std::map<std::string, BoundarySymbol> cache_;
  std::map<std::string, GaussianRational> coef_cache_;
  std::set<std::string> active_;
};

}  // namespace wres
