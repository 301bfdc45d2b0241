#pragma once

#include "wres/clifford/word.hpp"

namespace wres {

// Trace of a reduced word divided by tr[id]. Token-free words use the Wick
// expansion; token words must match the rule table up to cyclic rotation.
ScalarPoly cw_trace_word(const CliffWord& reduced, const CliffordContext& ctx);

// Full trace with tr[id] = 2^m folded in.
ScalarPoly cw_trace_rules(const CliffExpr& e, const CliffordContext& ctx);

// True when the word is c(e_1)...c(e_n), whose trace is not zero in odd dimension.
bool is_volume_word(const CliffWord& w, unsigned n);

}  // namespace wres
