#include "wres/cli/expr.hpp"

#include <cctype>

#include "wres/error.hpp"

namespace wres {

const std::string& ExprNode::head() const {
  static const std::string empty;
  return is_list && !kids.empty() && !kids[0].is_list ? kids[0].atom : empty;
}

std::string ExprNode::str() const {
  if (!is_list) return atom;
  std::string s = "(";
  for (std::size_t k = 0; k < kids.size(); ++k) {
    if (k) s += ' ';
    s += kids[k].str();
  }
  return s + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& t) : t_(t) {}

  ExprNode parse_all() {
    ExprNode n = parse();
    skip_ws();
    if (p_ != t_.size()) throw ExprParseError("trailing input", p_);
    return n;
  }

 private:
  void skip_ws() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }

  ExprNode parse() {
    skip_ws();
    if (p_ >= t_.size()) throw ExprParseError("unexpected end of input", p_);
    if (t_[p_] == ')') throw ExprParseError("unexpected ')'", p_);
    ExprNode n;
    if (t_[p_] == '(') {
      const std::size_t open = p_++;
      n.is_list = true;
      for (;;) {
        skip_ws();
        if (p_ >= t_.size()) throw ExprParseError("unbalanced '('", open);
        if (t_[p_] == ')') {
          ++p_;
          break;
        }
        n.kids.push_back(parse());
      }
      if (n.kids.empty() || n.kids[0].is_list) throw ExprParseError("list must start with an operator", open);
      return n;
    }
    const std::size_t start = p_;
    while (p_ < t_.size() && !std::isspace(static_cast<unsigned char>(t_[p_])) && t_[p_] != '(' && t_[p_] != ')')
      ++p_;
    n.atom = t_.substr(start, p_ - start);
    return n;
  }

  const std::string& t_;
  std::size_t p_ = 0;
};

bool is_integer_literal(const std::string& s) {
  std::size_t k = (s.size() > 1 && s[0] == '-') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

const SymbolContext& need_ctx(const ExprEnv& env, const std::string& what) {
  if (!env.ctx) throw Error("'" + what + "' needs a symbol context");
  return *env.ctx;
}

BoundarySymbol scalar_of(const ExprEnv& env, const RatFun& r) { return BoundarySymbol::scalar(env.ctx, r); }

BoundarySymbol scalar_of(const ExprEnv& env, const ScalarPoly& p) { return scalar_of(env, RatFun(p)); }

RatFun as_ratfun(const BoundarySymbol& v, const std::string& what) {
  for (const auto& [w, r] : v.terms())
    if (!w.empty()) throw Error("'" + what + "' needs a scalar operand");
  return v.scalar_part();
}

long as_integer(const GaussianRational& q, const std::string& what) {
  if (!q.is_real() || q.re().get_den() != 1 || !q.re().get_num().fits_slong_p())
    throw Error("'" + what + "' needs an integer, got " + q.str());
  return q.re().get_num().get_si();
}

Letter letter_atom(const std::string& a, bool& ok) {
  ok = true;
  if (a == "c.Z") return Letter::of(LetterKind::Z);
  if (a == "c.xi'") return Letter::of(LetterKind::Xi);
  if (a == "D.xi'") return Letter::of(LetterKind::DXi);
  if (a == "D.Z") return Letter::of(LetterKind::DZ);
  if (a == "A.X") return Letter::of(LetterKind::AX);
  if (a == "A.Y") return Letter::of(LetterKind::AY);
  if (a == "sigma0D") return Letter::of(LetterKind::Sigma0D);
  ok = false;
  return {};
}

BoundarySymbol eval_atom(const std::string& a, const ExprEnv& env) {
  if (is_integer_literal(a)) return scalar_of(env, ScalarPoly(GaussianRational(mpq_class(a))));
  if (auto it = env.vars.find(a); it != env.vars.end()) return scalar_of(env, ScalarPoly(it->second));
  if (a == "i") return scalar_of(env, ScalarPoly(GaussianRational::i()));
  if (a == "m") return scalar_of(env, ScalarPoly(static_cast<long>(env.m)));
  if (a == "n") return scalar_of(env, ScalarPoly(static_cast<long>(env.n())));
  if (a == "x") return scalar_of(env, RatFun::xi());
  if (a == "nrm2") return scalar_of(env, RatFun::norm_power(1));
  if (a == "dnrm2") return scalar_of(env, need_ctx(env, a).h1() * GaussianRational(kDxnNormSquaredSign));
  if (a == "h1") return scalar_of(env, need_ctx(env, a).h1());
  if (a == "pi") return scalar_of(env, need_ctx(env, a).pi());
  if (a == "vol") return scalar_of(env, need_ctx(env, a).vol());
  if (a == "c.dxn") return BoundarySymbol::c_dxn(env.ctx ? env.ctx : throw Error("'c.dxn' needs a symbol context"));
  if (a == "c.xi") return BoundarySymbol::c_xi(env.ctx ? env.ctx : throw Error("'c.xi' needs a symbol context"));
  bool ok = false;
  Letter l = letter_atom(a, ok);
  if (ok) return BoundarySymbol::letter(env.ctx ? env.ctx : throw Error("'" + a + "' needs a symbol context"), l);
  throw Error("unknown atom '" + a + "'");
}

void expect_arity(const ExprNode& n, std::size_t lo, std::size_t hi) {
  const std::size_t k = n.kids.size() - 1;
  if (k < lo || k > hi)
    throw Error("operator '" + n.head() + "' takes " + std::to_string(lo) +
                (hi != lo ? ".." + std::to_string(hi) : "") + " operands: " + n.str());
}

long eval_index(const ExprNode& n, const ExprEnv& env) {
  const long k = as_integer(eval_constant(n, env), "index");
  if (k < 1 || k > static_cast<long>(env.n())) throw Error("index out of range in " + n.str());
  return k;
}

BoundarySymbol eval_list(const ExprNode& node, const ExprEnv& env) {
  const std::string& op = node.head();
  const auto arg = [&](std::size_t k) { return eval_expr(node.kids[k], env); };
  const std::size_t argc = node.kids.size() - 1;

  if (op == "+") {
    BoundarySymbol acc(env.ctx);
    for (std::size_t k = 1; k <= argc; ++k) acc += arg(k);
    return acc;
  }
  if (op == "-") {
    expect_arity(node, 1, 64);
    if (argc == 1) return -arg(1);
    BoundarySymbol acc = arg(1);
    for (std::size_t k = 2; k <= argc; ++k) acc -= arg(k);
    return acc;
  }
  if (op == "*") {
    BoundarySymbol acc = scalar_of(env, RatFun(1));
    for (std::size_t k = 1; k <= argc; ++k) acc = bs_mul(acc, arg(k));
    return acc;
  }
  if (op == "/") {
    expect_arity(node, 2, 2);
    RatFun den = as_ratfun(arg(2), "/");
    auto inv = den.inverse();
    if (!inv) throw Error("divisor is not invertible: " + node.kids[2].str());
    return arg(1) * *inv;
  }
  if (op == "^") {
    expect_arity(node, 2, 2);
    const long e = as_integer(eval_constant(node.kids[2], env), "^");
    RatFun base = as_ratfun(arg(1), "^");
    if (e < 0) {
      auto inv = base.inverse();
      if (!inv) throw Error("negative power of a non-invertible base: " + node.str());
      return scalar_of(env, inv->pow(static_cast<int>(-e)));
    }
    return scalar_of(env, base.pow(static_cast<int>(e)));
  }
  if (op == "sum-t" || op == "sum-a") {
    expect_arity(node, 2, 2);
    if (node.kids[1].is_list) throw Error("sum index must be a name: " + node.str());
    const long hi = static_cast<long>(env.n()) - (op == "sum-t" ? 1 : 0);
    BoundarySymbol acc(env.ctx);
    ExprEnv inner = env;
    for (long k = 1; k <= hi; ++k) {
      inner.vars[node.kids[1].atom] = k;
      acc += eval_expr(node.kids[2], inner);
    }
    return acc;
  }
  if (op == "rise") {
    expect_arity(node, 2, 2);
    const long a = as_integer(eval_constant(node.kids[1], env), "rise");
    const long b = as_integer(eval_constant(node.kids[2], env), "rise");
    mpz_class p = 1;
    for (long k = a; k <= b; ++k) p *= k;
    return scalar_of(env, ScalarPoly(GaussianRational(mpq_class(p))));
  }
  if (op == "fact") {
    expect_arity(node, 1, 1);
    const long a = as_integer(eval_constant(node.kids[1], env), "fact");
    if (a < 0) throw Error("factorial of a negative number");
    mpz_class p = 1;
    for (long k = 2; k <= a; ++k) p *= k;
    return scalar_of(env, ScalarPoly(GaussianRational(mpq_class(p))));
  }
  if (op == "at-i") {
    expect_arity(node, 2, 2);
    const long order = as_integer(eval_constant(node.kids[1], env), "at-i");
    if (order < 0) throw Error("negative derivative order");
    return scalar_of(env, rf_deriv_at(as_ratfun(arg(2), "at-i"), static_cast<unsigned>(order), GaussianRational::i()));
  }
  if (op == "coef" || op == "ref") {
    expect_arity(node, 1, 1);
    if (node.kids[1].is_list) throw Error("'" + op + "' needs a name");
    const std::string& name = node.kids[1].atom;
    if (op == "coef") {
      if (!env.coef) throw Error("no coefficient resolver for (coef " + name + ")");
      return scalar_of(env, ScalarPoly(env.coef(name)));
    }
    if (!env.ref) throw Error("no reference resolver for (ref " + name + ")");
    return env.ref(name);
  }
  if (op == "dxn") {
    expect_arity(node, 1, 1);
    return bs_dxn(arg(1));
  }
  if (op == "dxi") {
    expect_arity(node, 1, 2);
    const long order = argc == 2 ? as_integer(eval_constant(node.kids[2], env), "dxi") : 1;
    return bs_dxi(arg(1), static_cast<unsigned>(order));
  }
  if (op == "pi+") {
    expect_arity(node, 1, 1);
    return bs_pi_plus(arg(1));
  }
  if (op == "g") {
    expect_arity(node, 2, 2);
    const SymbolContext& c = need_ctx(env, op);
    ScalarPoly acc;
    for (unsigned k = 1; k < c.n; ++k) acc += c.comp(node.kids[1].atom, k) * c.comp(node.kids[2].atom, k);
    return scalar_of(env, acc);
  }
  if (op == "X" || op == "Y" || op == "Z" || op == "dX" || op == "dY" || op == "dZ" || op == "kX" ||
      op == "kY" || op == "xi") {
    expect_arity(node, 1, 1);
    const SymbolContext& c = need_ctx(env, op);
    const long k = eval_index(node.kids[1], env);
    if (op == "xi" && k == static_cast<long>(c.n)) return scalar_of(env, RatFun::xi());
    if ((op == "kX" || op == "kY" || op == "xi") && k == static_cast<long>(c.n))
      throw Error("'" + op + "' has tangential components only");
    return scalar_of(env, c.comp(op, static_cast<unsigned>(k)));
  }
  if (op == "DY") {
    expect_arity(node, 2, 2);
    const SymbolContext& c = need_ctx(env, op);
    return scalar_of(env, c.dy(static_cast<unsigned>(eval_index(node.kids[1], env)),
                               static_cast<unsigned>(eval_index(node.kids[2], env))));
  }
  if (op == "c.e") {
    expect_arity(node, 1, 1);
    need_ctx(env, op);
    return BoundarySymbol::letter(env.ctx, Letter::gen(static_cast<unsigned>(eval_index(node.kids[1], env))));
  }
  throw Error("unknown operator '" + op + "'");
}

}  // namespace

ExprNode parse_expr(const std::string& text) { return Parser(text).parse_all(); }

BoundarySymbol eval_expr(const ExprNode& node, const ExprEnv& env) {
  return node.is_list ? eval_list(node, env) : eval_atom(node.atom, env);
}

GaussianRational eval_constant(const ExprNode& node, const ExprEnv& env) {
  const RatFun r = as_ratfun(eval_expr(node, env), "constant");
  auto s = r.as_scalar();
  if (!s) throw Error("expected a constant, got " + r.str());
  auto c = s->as_constant();
  if (!c) throw Error("expected a constant, got " + s->str());
  return *c;
}

ScalarPoly eval_scalar(const ExprNode& node, const ExprEnv& env) {
  const RatFun r = as_ratfun(eval_expr(node, env), "scalar");
  auto s = r.as_scalar();
  if (!s) throw Error("expected a polynomial free of x, got " + r.str());
  return *s;
}

}  // namespace wres
