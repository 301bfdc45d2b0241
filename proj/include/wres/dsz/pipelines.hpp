#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wres/dsz/structures.hpp"

namespace wres {

enum class Theorem { A, B };
enum class CaseId { I, II, III, IV, V };

std::string theorem_str(Theorem t);
std::string case_str(CaseId c);
std::optional<Theorem> parse_theorem(const std::string& s);
std::optional<CaseId> parse_case(const std::string& s);
inline constexpr std::array<Theorem, 2> kTheorems{Theorem::A, Theorem::B};
inline constexpr std::array<CaseId, 5> kCases{CaseId::I, CaseId::II, CaseId::III, CaseId::IV, CaseId::V};

// One term of the boundary sum: prefactor (-i)^{|a|+j+k+1} / (a! (j+k+1)!),
// left factor d_xi^k pi+(d_xn^j L) and right factor d_x'^a d_xi^{j+1} d_xn^k R.
struct CaseSpec {
  Theorem theorem;
  CaseId id;
  unsigned alpha;
  unsigned j;
  unsigned k;
  std::string left;                  // record of L
  std::string right;                 // record of R
  std::vector<std::string> display;  // printed records whose sum is pi+(d_xn^j L)
};

const CaseSpec& case_spec(Theorem t, CaseId c);
GaussianRational case_prefactor(const CaseSpec& spec);

struct CaseReport {
  Theorem theorem = Theorem::A;
  CaseId id = CaseId::I;
  unsigned m = 0;
  ScalarPoly computed;
  ScalarPoly expected;
  ScalarPoly diff;  // computed - expected
  bool match = false;
  // The same integral with the j+1 xi_n-derivatives moved onto the left factor.
  ScalarPoly by_parts_phi;
  bool by_parts_ok = false;
  // Phi with the printed intermediate display in place of the engine's projected symbol.
  ScalarPoly display_phi;
  // Contribution of the engine terms missing from the display; the source claims it is 0.
  ScalarPoly omitted_phi;
  bool omitted_vanish = false;
};

CaseReport run_case(Workspace& ws, Theorem t, CaseId c);
CaseReport run_case(const CoefficientCatalog& cat, Theorem t, CaseId c, unsigned m);

struct StructureRow {
  std::string label;
  GaussianRational computed;
  GaussianRational expected;
  bool match = false;
};

struct TheoremReport {
  Theorem theorem = Theorem::A;
  unsigned m = 0;
  std::vector<CaseReport> cases;
  ScalarPoly total;     // sum of computed case values
  ScalarPoly expected;  // theorem right-hand side
  ScalarPoly diff;
  bool match = false;
  std::vector<StructureRow> structures;
  ScalarPoly remainder;  // part of total outside the five structures
  // Whether the printed case results add up to the printed theorem.
  bool printed_cases_sum_to_theorem = false;
};

// cases must hold the five reports of theorem t at ws.m().
TheoremReport assemble_theorem(Workspace& ws, Theorem t, std::vector<CaseReport> cases);
TheoremReport run_theorem(const CoefficientCatalog& cat, Theorem t, unsigned m);

struct CaseKey {
  Theorem theorem;
  CaseId id;
  unsigned m;
};

// Reports in the order of keys.
std::vector<CaseReport> run_cases(const CoefficientCatalog& cat, const std::vector<CaseKey>& keys, Exec exec);
// Both theorems for m in [m_lo, m_hi], ordered by (theorem, m).
std::vector<TheoremReport> run_theorems(const CoefficientCatalog& cat, unsigned m_lo, unsigned m_hi, Exec exec);

}  // namespace wres
