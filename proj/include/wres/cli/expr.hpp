#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wres/error.hpp"
#include "wres/symb/boundary_symbol.hpp"

namespace wres {

// Prefix expression tree: an atom or a parenthesized list whose head is an operator.
struct ExprNode {
  std::string atom;
  std::vector<ExprNode> kids;
  bool is_list = false;

  const std::string& head() const;
  std::string str() const;
};

class ExprParseError : public Error {
 public:
  ExprParseError(const std::string& what, std::size_t offset)
      : Error("expression parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

ExprNode parse_expr(const std::string& text);

// Evaluation environment. ctx may be null for expressions that use only
// numbers, m, x, i and the scalar operators (coefficient formulas).
struct ExprEnv {
  unsigned m = 1;
  ContextPtr ctx;
  std::map<std::string, long> vars;
  std::function<BoundarySymbol(const std::string&)> ref;  // (ref NAME)
  std::function<GaussianRational(const std::string&)> coef;  // (coef NAME)

  unsigned n() const { return 2 * m + 1; }
};

BoundarySymbol eval_expr(const ExprNode& node, const ExprEnv& env);
// Evaluates to a single constant; throws Error otherwise.
GaussianRational eval_constant(const ExprNode& node, const ExprEnv& env);
// Evaluates to an identity-word symbol and returns its coefficient polynomial (no x allowed).
ScalarPoly eval_scalar(const ExprNode& node, const ExprEnv& env);

}  // namespace wres
