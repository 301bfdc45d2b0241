#include "wres/dsz/structures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace wres {
namespace {

class Displays : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    goldens_ = new Goldens(load_goldens(WRES_DEFAULT_GOLDENS));
    catalog_ = new CoefficientCatalog(*goldens_);
  }
  static void TearDownTestSuite() {
    delete catalog_;
    delete goldens_;
  }
  static const CoefficientCatalog& cat() { return *catalog_; }

 private:
  static inline Goldens* goldens_ = nullptr;
  static inline CoefficientCatalog* catalog_ = nullptr;
};

TEST_F(Displays, EveryPrintedTermIsReproducedExceptOneProjection) {
  for (unsigned m = 1; m <= 3; ++m) {
    Workspace ws(cat(), m);
    for (const auto& spec : display_specs()) {
      const DisplayCheck c = check_display(ws, spec);
      if (spec.record == "display:B.pi-B3") {
        EXPECT_FALSE(c.match);
        continue;
      }
      EXPECT_TRUE(c.match) << spec.record << " m=" << m;
      EXPECT_GT(c.printed_terms, 0u);
    }
  }
}

TEST_F(Displays, ThirdCompositionTermProjectionDisagrees) {
  Workspace ws(cat(), 2);
  const auto it = std::find_if(display_specs().begin(), display_specs().end(),
                               [](const DisplaySpec& s) { return s.record == "display:B.pi-B3"; });
  ASSERT_NE(it, display_specs().end());
  const DisplayCheck c = check_display(ws, *it);
  ASSERT_EQ(c.mismatched.size(), 1u);
  EXPECT_EQ(c.mismatched[0].key, "[c(Z)] h1*Xn*Yn");
  EXPECT_EQ(c.mismatched[0].printed, "(2*i)");
  EXPECT_EQ(c.mismatched[0].engine, "(-1/2)/((xn-i)^2)");
  EXPECT_EQ(c.printed_terms, 1u);
  EXPECT_EQ(c.engine_terms, 9u);
}

TEST_F(Displays, UnprojectedDisplaysAreComplete) {
  Workspace ws(cat(), 2);
  for (const auto& spec : display_specs())
    if (spec.record == "display:A.pi-sigma1" || spec.record == "display:B.pi-sigma0") {
      const DisplayCheck c = check_display(ws, spec);
      EXPECT_TRUE(c.omitted.empty()) << spec.record;
      EXPECT_EQ(c.printed_terms, c.engine_terms);
    }
}

TEST_F(Displays, SweepIsOrderedByDisplayThenM) {
  const auto rows = run_displays(cat(), 1, 2, Exec::serial);
  ASSERT_EQ(rows.size(), display_specs().size() * 2);
  EXPECT_EQ(rows[0].record, display_specs()[0].record);
  EXPECT_EQ(rows[0].m, 1u);
  EXPECT_EQ(rows[1].m, 2u);
  EXPECT_EQ(rows[2].record, display_specs()[1].record);
}

TEST_F(Displays, CheckedSymbolsMatchEngineDerivatives) {
  for (unsigned m = 1; m <= 2; ++m) {
    Workspace ws(cat(), m);
    EXPECT_EQ(ws.record("check:A.dxn-R0"), ws.eval("(dxn (ref lemma:A.R0))"));
    EXPECT_EQ(ws.record("check:A.dxi-R0"), ws.eval("(dxi (ref lemma:A.R0))"));
    EXPECT_EQ(ws.record("check:B.dxn-R0"), ws.eval("(dxn (ref lemma:B.R0))"));
    EXPECT_EQ(ws.record("check:B.dxi-R0"), ws.eval("(dxi (ref lemma:B.R0))"));
  }
}

TEST_F(Displays, StructureDecompositionRoundTrips) {
  Workspace ws(cat(), 2);
  const auto polys = structure_polys(ws.ctx());
  const ScalarPoly pv = ws.ctx().pi() * ws.ctx().vol();
  ScalarPoly phi;
  for (std::size_t s = 0; s < kStructureCount; ++s) phi += polys[s] * pv * GaussianRational(static_cast<long>(s + 1));
  const Decomposition d = decompose_structures(phi, ws.ctx());
  for (std::size_t s = 0; s < kStructureCount; ++s) EXPECT_EQ(d.coeff[s], GaussianRational(static_cast<long>(s + 1)));
  EXPECT_TRUE(d.remainder.is_zero());
}

}  // namespace
}  // namespace wres
