#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wres/dsz/workspace.hpp"

namespace wres {

// The five formal structures of the theorem statements:
//   S1 = d/dx_n(g(X^T,Y^T) Z_n), S2 = d/dx_n(X_n Y_n Z_n), S3 = g(X^T,Y^T) Z_n h'(0),
//   S4 = X_n Y_n Z_n h'(0), S5 = X(Y_n) Z_n.
inline constexpr std::size_t kStructureCount = 5;
const std::array<std::string, kStructureCount>& structure_labels();
std::array<ScalarPoly, kStructureCount> structure_polys(const SymbolContext& ctx);

// phi = sum_s coeff[s] * pi * Vol * S_s + remainder, with coeff[s] read off a
// monomial that only S_s contains.
struct Decomposition {
  std::array<GaussianRational, kStructureCount> coeff;
  ScalarPoly remainder;
};

Decomposition decompose_structures(const ScalarPoly& phi, const SymbolContext& ctx);

// Splits a symbol into (Clifford word, formal monomial) keys, each carrying a
// rational function of xi_n with constant coefficients.
std::map<std::string, RatFun> term_keys(const BoundarySymbol& s);

// A printed intermediate display and the engine expression it should equal.
struct DisplaySpec {
  std::string record;
  std::string engine;
};

const std::vector<DisplaySpec>& display_specs();

struct TermMismatch {
  std::string key;
  std::string printed;
  std::string engine;  // "absent" when the engine lacks the key
};

struct DisplayCheck {
  std::string record;
  unsigned m = 0;
  std::size_t printed_terms = 0;
  std::size_t engine_terms = 0;
  // Printed keys whose value differs from the engine (or that the engine lacks).
  std::vector<TermMismatch> mismatched;
  // Engine keys absent from the display.
  std::vector<std::string> omitted;
  bool match = false;
};

DisplayCheck check_display(Workspace& ws, const DisplaySpec& spec);

// Every display for m in [m_lo, m_hi], ordered by (display, m).
std::vector<DisplayCheck> run_displays(const CoefficientCatalog& cat, unsigned m_lo, unsigned m_hi, Exec exec);

}  // namespace wres
