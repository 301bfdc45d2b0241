#pragma once

#include "wres/symb/context.hpp"

namespace wres {

// Replaces xi1^2 by 1 - sum_{j>=2} xi_j^2 in terms of xi'-degree >= 4 until none remain reducible.
ScalarPoly unit_sphere_reduce(const ScalarPoly& p, const SymbolContext& ctx);

// Integral over |xi'| = 1 in R^{n-1} with the formal total volume Vol.
// Supports xi'-moments of degree at most 2 after reduction.
ScalarPoly sphere_integrate(const ScalarPoly& p, const SymbolContext& ctx);

}  // namespace wres
