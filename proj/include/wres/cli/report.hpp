#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wres/dsz/pipelines.hpp"

namespace wres {

enum class Format { text, json, csv };
std::optional<Format> parse_format(const std::string& s);

// Waiver key for the H5 derivative-order rows (coefficient names waive their own rows).
inline const std::string kH5Waiver = "H5-order";

struct Report {
  std::string command;
  unsigned m_lo = 0;
  unsigned m_hi = 0;
  std::vector<CoeffRow> coefficients;
  std::vector<H5Probe> h5;
  std::vector<CaseReport> cases;  // standalone case runs
  std::vector<TheoremReport> theorems;
  std::vector<DisplayCheck> displays;
  std::set<std::string> waivers;
};

// A case row holds when the value matches, the by-parts form agrees and the omitted terms vanish.
bool case_ok(const CaseReport& c);
// The H5 row holds when both derivative orders give the stated value 0.
bool h5_ok(const H5Probe& p);

struct ReportSummary {
  std::size_t rows = 0;
  std::size_t matched = 0;
  std::size_t waived = 0;
  std::size_t mismatched = 0;
};

ReportSummary summarize(const Report& r);
// 0 when every comparator row matches or is waived, 1 otherwise.
int report_exit_code(const Report& r);
std::string emit_report(const Report& r, Format f);

}  // namespace wres
