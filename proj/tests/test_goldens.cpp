#include "wres/cli/goldens.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "wres/dsz/coefficients.hpp"

namespace wres {
namespace {

std::string real_goldens_text() {
  std::ifstream f(WRES_DEFAULT_GOLDENS);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t error_line(const std::string& text) {
  try {
    parse_goldens(text);
  } catch (const GoldenParseError& e) {
    return e.line();
  }
  return 0;
}

GaussianRational constant(const std::string& expr, unsigned m) {
  ExprEnv env;
  env.m = m;
  return eval_constant(parse_expr(expr), env);
}

TEST(Goldens, ParsesRecordsWithContinuationsAndComments) {
  const Goldens g = parse_goldens(
      "# comment\n"
      "\n"
      "def:A0 | case II | (at-i (+ m 2) (/ 1 (* m (^ (+ x i) m))))\n"
      "   | quote=A_0\n"
      "closed:A0 | case II | (- (/ (rise (+ m 1) (+ (* 2 m) 1)) (^ 2 (+ (* 2 m) 2)))) | quote=A_0 closed\n");
  ASSERT_EQ(g.records().size(), 2u);
  EXPECT_EQ(g.at("def:A0").line, 3u);
  EXPECT_EQ(g.at("def:A0").quote, "A_0");
  EXPECT_EQ(g.at("closed:A0").anchor, "case II");
  EXPECT_EQ(g.names_with_prefix("def:"), std::vector<std::string>{"def:A0"});
}

TEST(Goldens, MissingQuoteIsRejectedWithLineNumber) {
  EXPECT_EQ(error_line("a | b | 1 | quote=x\n\nc | d | 2 |\n"), 3u);
  EXPECT_EQ(error_line("a | b | 1 | note=x\n"), 1u);
  EXPECT_EQ(error_line("a | b | 1 | quote=\n"), 1u);
}

TEST(Goldens, MissingAnchorIsRejected) { EXPECT_EQ(error_line("# x\na |  | 1 | quote=x\n"), 2u); }

TEST(Goldens, DuplicateNameIsRejected) {
  EXPECT_EQ(error_line("A0 | a | 1 | quote=x\nB0 | a | 1 | quote=x\nA0 | b | 2 | quote=y\n"), 3u);
}

TEST(Goldens, MalformedExpressionReportsItsLine) {
  EXPECT_EQ(error_line("a | b | 1 | quote=x\nc | d | (+ 1 2 | quote=y\n"), 2u);
  EXPECT_EQ(error_line("  orphan continuation\n"), 1u);
  EXPECT_EQ(error_line("a | b\n"), 1u);
}

TEST(Goldens, RealFileIsComplete) {
  const Goldens g = parse_goldens(real_goldens_text());
  EXPECT_GE(g.records().size(), 100u);
  for (const auto& r : g.records()) {
    EXPECT_FALSE(r.anchor.empty()) << r.name;
    EXPECT_FALSE(r.quote.empty()) << r.name;
  }
  EXPECT_NO_THROW(CoefficientCatalog{g});
  EXPECT_EQ(g.names_with_prefix("phi:").size(), 10u);
  EXPECT_EQ(g.names_with_prefix("thm:").size(), 2u);
}

TEST(Goldens, LoadingAMissingFileIsAnIoError) { EXPECT_THROW(load_goldens("/nonexistent/goldens.txt"), IoError); }

TEST(CoefficientCatalog, MissingRecordFailsToLoad) {
  std::string text = real_goldens_text();
  const auto pos = text.find("\nclosed:B1 ");
  ASSERT_NE(pos, std::string::npos);
  text.insert(pos + 1, "#");
  const Goldens g = parse_goldens(text);
  EXPECT_THROW(CoefficientCatalog{g}, Error);
}

TEST(CoefficientCatalog, UnknownCoefficientInStatementFailsToLoad) {
  const Goldens g = parse_goldens(real_goldens_text() + "phi:Z.I | nowhere | (* pi (coef Q7)) | quote=x\n");
  EXPECT_THROW(CoefficientCatalog{g}, Error);
}

TEST(Expr, ParseErrorsCarryOffsets) {
  EXPECT_THROW(parse_expr("(+ 1 2"), ExprParseError);
  EXPECT_THROW(parse_expr("(+ 1 2))"), ExprParseError);
  EXPECT_THROW(parse_expr("((+ 1) 2)"), ExprParseError);
  try {
    parse_expr("1 2");
    FAIL();
  } catch (const ExprParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Expr, RisingProductUsesTheEmptyProductConvention) {
  EXPECT_EQ(constant("(rise 3 5)", 1), GaussianRational(60));
  EXPECT_EQ(constant("(rise (+ m 1) (- (* 2 m) 1))", 1), GaussianRational(1));
  EXPECT_EQ(constant("(rise (+ m 1) (- (* 2 m) 1))", 3), GaussianRational(20));
  EXPECT_EQ(constant("(fact 5)", 1), GaussianRational(120));
}

TEST(Expr, DerivativeAtI) {
  // d^3/dx^3 [5x/(x+i)^2] at i
  EXPECT_EQ(constant("(at-i 3 (/ (* 5 x) (^ (+ x i) 2)))", 1), GaussianRational::fraction(15, 8));
  EXPECT_EQ(constant("(/ 3 (* 2 i))", 1), GaussianRational::fraction(-3, 2) * GaussianRational::i());
}

TEST(Expr, ErrorsAreReported) {
  ExprEnv env;
  EXPECT_THROW(eval_expr(parse_expr("(frob 1)"), env), Error);
  EXPECT_THROW(eval_expr(parse_expr("c.Z"), env), Error);
  EXPECT_THROW(eval_expr(parse_expr("(ref lemma:x)"), env), Error);
  EXPECT_THROW(eval_constant(parse_expr("x"), env), Error);
  EXPECT_THROW(eval_expr(parse_expr("(/ 1 (+ x 2))"), env), Error);
}

}  // namespace
}  // namespace wres
