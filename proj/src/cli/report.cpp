#include "wres/cli/report.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace wres {

using ojson = nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

bool case_ok(const CaseReport& c) { return c.match && c.by_parts_ok && c.omitted_vanish; }

bool h5_ok(const H5Probe& p) { return p.order_m.is_zero() && p.order_m_plus_2.is_zero(); }

namespace {

bool coeff_waived(const Report& r, const CoeffRow& row) { return !row.match && r.waivers.count(row.name) > 0; }

// The order-m value must vanish; only the printed order-(m+2) discrepancy is waivable.
bool h5_waived(const Report& r, const H5Probe& p) {
  return !h5_ok(p) && p.order_m.is_zero() && r.waivers.count(kH5Waiver) > 0;
}

struct Tally {
  ReportSummary s;
  void add(bool ok, bool waived = false) {
    ++s.rows;
    if (ok) {
      ++s.matched;
    } else if (waived) {
      ++s.waived;
    } else {
      ++s.mismatched;
    }
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string status(bool ok, bool waived = false) { return ok ? "ok" : waived ? "MISMATCH (waived)" : "MISMATCH"; }

std::string case_label(const CaseReport& c) { return theorem_str(c.theorem) + "-" + case_str(c.id); }

std::string range_str(unsigned lo, unsigned hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

struct CoeffGroup {
  unsigned lo = 0;
  unsigned hi = 0;
  std::size_t total = 0;
  std::size_t matched = 0;
};

std::vector<std::pair<std::string, CoeffGroup>> group_coefficients(const std::vector<CoeffRow>& rows) {
  std::vector<std::pair<std::string, CoeffGroup>> out;
  for (const auto& row : rows) {
    if (out.empty() || out.back().first != row.name) out.push_back({row.name, CoeffGroup{row.m, row.m, 0, 0}});
    CoeffGroup& g = out.back().second;
    g.lo = std::min(g.lo, row.m);
    g.hi = std::max(g.hi, row.m);
    ++g.total;
    if (row.match) ++g.matched;
  }
  return out;
}

std::string coefficient_summary(const Report& r) {
  const auto groups = group_coefficients(r.coefficients);
  std::size_t matched = 0;
  unsigned lo = ~0u;
  unsigned hi = 0;
  std::string bad;
  for (const auto& [name, g] : groups) {
    matched += g.matched;
    lo = std::min(lo, g.lo);
    hi = std::max(hi, g.hi);
    if (g.matched != g.total) bad += (bad.empty() ? "" : " ") + name;
  }
  const std::string shape = std::to_string(groups.size()) + "×" + std::to_string(hi - lo + 1);
  if (matched == r.coefficients.size()) return shape + " coefficients verified";
  return shape + " coefficient rows: " + std::to_string(matched) + " match, " +
         std::to_string(r.coefficients.size() - matched) + " mismatched (" + bad + ")";
}

// ---- text ----

void text_case(std::ostringstream& os, const CaseReport& c, const std::string& indent) {
  os << indent << "case " << case_label(c) << " m=" << c.m << ": " << status(case_ok(c)) << "\n";
  os << indent << "  computed: " << c.computed.str() << "\n";
  os << indent << "  expected: " << c.expected.str() << "\n";
  if (!c.match) os << indent << "  difference: " << c.diff.str() << "\n";
  os << indent << "  by-parts form agrees: " << yes_no(c.by_parts_ok) << "\n";
  os << indent << "  omitted terms vanish: " << yes_no(c.omitted_vanish) << "\n";
  if (!c.omitted_vanish) os << indent << "  omitted contribution: " << c.omitted_phi.str() << "\n";
  if (!(c.display_phi == c.computed)) os << indent << "  with printed display: " << c.display_phi.str() << "\n";
}

void text_theorem(std::ostringstream& os, const TheoremReport& t) {
  os << "theorem " << theorem_str(t.theorem) << " m=" << t.m << ": " << status(t.match) << "\n";
  os << "  structure coefficients (times pi*Vol):\n";
  for (const auto& s : t.structures)
    os << "    " << s.label << ": computed " << s.computed.str() << ", expected " << s.expected.str() << ", "
       << status(s.match) << "\n";
  os << "  remainder: " << t.remainder.str() << "\n";
  os << "  printed case results sum to the statement: " << yes_no(t.printed_cases_sum_to_theorem) << "\n";
  for (const auto& c : t.cases) text_case(os, c, "  ");
}

void text_display(std::ostringstream& os, const DisplayCheck& d) {
  os << d.record << " m=" << d.m << ": " << status(d.match) << " (printed " << d.printed_terms << " terms, engine "
     << d.engine_terms << ", not printed " << d.omitted.size() << ")\n";
  for (const auto& mm : d.mismatched)
    os << "  " << mm.key << ": printed " << mm.printed << ", engine " << mm.engine << "\n";
}

std::string emit_text(const Report& r, const ReportSummary& sum, int code) {
  std::ostringstream os;
  os << "wres " << r.command << " m=" << range_str(r.m_lo, r.m_hi) << "\n";
  if (!r.coefficients.empty()) {
    os << "\ncoefficients (derivative definition vs closed form)\n";
    for (const auto& [name, g] : group_coefficients(r.coefficients)) {
      os << "  " << name << " m=" << range_str(g.lo, g.hi) << ": " << g.matched << "/" << g.total << " match\n";
      for (const auto& row : r.coefficients)
        if (row.name == name && !row.match)
          os << "    m=" << row.m << " defined " << row.defined.str() << ", closed " << row.closed.str() << ", "
             << status(false, coeff_waived(r, row)) << "\n";
    }
    os << "  " << coefficient_summary(r) << "\n";
  }
  if (!r.h5.empty()) {
    os << "\nH5 derivative order\n";
    os << "  the contour line differentiates m times; the printed bracket differentiates m+2 times;\n";
    os << "  the stated value H5 = 0 needs both to vanish\n";
    for (const auto& p : r.h5)
      os << "  m=" << p.m << " order m: " << p.order_m.str() << ", order m+2: " << p.order_m_plus_2.str() << ", "
         << status(h5_ok(p), h5_waived(r, p)) << "\n";
  }
  if (!r.cases.empty()) {
    os << "\ncases\n";
    for (const auto& c : r.cases) text_case(os, c, "");
  }
  if (!r.theorems.empty()) {
    os << "\ntheorems\n";
    for (const auto& t : r.theorems) text_theorem(os, t);
  }
  if (!r.displays.empty()) {
    os << "\nintermediate displays\n";
    for (const auto& d : r.displays) text_display(os, d);
  }
  os << "\nsummary: " << sum.rows << " rows, " << sum.matched << " match, " << sum.waived << " waived, "
     << sum.mismatched << " mismatched\n";
  os << "status: " << (code == 0 ? "verified" : "mismatch") << "\n";
  return os.str();
}

// ---- json ----

ojson json_case(const CaseReport& c) {
  ojson j;
  j["theorem"] = theorem_str(c.theorem);
  j["case"] = case_str(c.id);
  j["m"] = c.m;
  j["match"] = case_ok(c);
  j["value_match"] = c.match;
  j["computed"] = c.computed.str();
  j["expected"] = c.expected.str();
  j["difference"] = c.diff.str();
  j["by_parts_ok"] = c.by_parts_ok;
  j["by_parts"] = c.by_parts_phi.str();
  j["omitted_vanish"] = c.omitted_vanish;
  j["omitted"] = c.omitted_phi.str();
  j["with_printed_display"] = c.display_phi.str();
  return j;
}

std::string emit_json(const Report& r, const ReportSummary& sum, int code) {
  ojson j;
  j["command"] = r.command;
  j["m_range"] = {r.m_lo, r.m_hi};
  j["waivers"] = ojson::array();
  for (const auto& w : r.waivers) j["waivers"].push_back(w);
  j["coefficients"] = ojson::array();
  for (const auto& row : r.coefficients)
    j["coefficients"].push_back({{"name", row.name},
                                 {"m", row.m},
                                 {"defined", row.defined.str()},
                                 {"closed", row.closed.str()},
                                 {"match", row.match},
                                 {"waived", coeff_waived(r, row)}});
  if (!r.coefficients.empty()) j["coefficient_summary"] = coefficient_summary(r);
  j["h5_probe"] = ojson::array();
  for (const auto& p : r.h5)
    j["h5_probe"].push_back({{"m", p.m},
                             {"order_m", p.order_m.str()},
                             {"order_m_plus_2", p.order_m_plus_2.str()},
                             {"stated", "0"},
                             {"match", h5_ok(p)},
                             {"waived", h5_waived(r, p)}});
  j["cases"] = ojson::array();
  for (const auto& c : r.cases) j["cases"].push_back(json_case(c));
  j["theorems"] = ojson::array();
  for (const auto& t : r.theorems) {
    ojson jt;
    jt["theorem"] = theorem_str(t.theorem);
    jt["m"] = t.m;
    jt["match"] = t.match;
    jt["structures"] = ojson::array();
    for (const auto& s : t.structures)
      jt["structures"].push_back({{"label", s.label},
                                  {"computed", s.computed.str()},
                                  {"expected", s.expected.str()},
                                  {"match", s.match}});
    jt["remainder"] = t.remainder.str();
    jt["printed_cases_sum_to_theorem"] = t.printed_cases_sum_to_theorem;
    jt["total"] = t.total.str();
    jt["expected"] = t.expected.str();
    jt["difference"] = t.diff.str();
    jt["cases"] = ojson::array();
    for (const auto& c : t.cases) jt["cases"].push_back(json_case(c));
    j["theorems"].push_back(std::move(jt));
  }
  j["displays"] = ojson::array();
  for (const auto& d : r.displays) {
    ojson jd;
    jd["record"] = d.record;
    jd["m"] = d.m;
    jd["match"] = d.match;
    jd["printed_terms"] = d.printed_terms;
    jd["engine_terms"] = d.engine_terms;
    jd["mismatched"] = ojson::array();
    for (const auto& mm : d.mismatched)
      jd["mismatched"].push_back({{"key", mm.key}, {"printed", mm.printed}, {"engine", mm.engine}});
    jd["not_printed"] = d.omitted;
    j["displays"].push_back(std::move(jd));
  }
  j["summary"] = {{"rows", sum.rows}, {"matched", sum.matched}, {"waived", sum.waived}, {"mismatched", sum.mismatched}};
  j["status"] = code == 0 ? "verified" : "mismatch";
  j["exit_code"] = code;
  return j.dump(2) + "\n";
}

// ---- csv ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& os, const std::string& name, unsigned m, const std::string& defined,
             const std::string& closed, bool match) {
  os << csv_field(name) << "," << m << "," << csv_field(defined) << "," << csv_field(closed) << ","
     << (match ? "true" : "false") << "\n";
}

void csv_case(std::ostringstream& os, const CaseReport& c) {
  const std::string base = "case:" + case_label(c);
  csv_row(os, base, c.m, c.computed.str(), c.expected.str(), c.match);
  csv_row(os, base + ":by-parts", c.m, c.by_parts_phi.str(), c.computed.str(), c.by_parts_ok);
  csv_row(os, base + ":omitted", c.m, c.omitted_phi.str(), "0", c.omitted_vanish);
}

std::string emit_csv(const Report& r) {
  std::ostringstream os;
  os << "name,m,defined,closed,match\n";
  for (const auto& row : r.coefficients) csv_row(os, row.name, row.m, row.defined.str(), row.closed.str(), row.match);
  for (const auto& p : r.h5) csv_row(os, kH5Waiver, p.m, p.order_m_plus_2.str(), p.order_m.str(), h5_ok(p));
  for (const auto& c : r.cases) csv_case(os, c);
  for (const auto& t : r.theorems) {
    const std::string base = "thm:" + theorem_str(t.theorem);
    csv_row(os, base, t.m, t.total.str(), t.expected.str(), t.match);
    for (const auto& s : t.structures)
      csv_row(os, base + ":" + s.label, t.m, s.computed.str(), s.expected.str(), s.match);
    csv_row(os, base + ":remainder", t.m, t.remainder.str(), "0", t.remainder.is_zero());
    for (const auto& c : t.cases) csv_case(os, c);
  }
  for (const auto& d : r.displays) {
    const std::size_t agreeing = d.printed_terms - d.mismatched.size();
    csv_row(os, d.record, d.m, std::to_string(agreeing), std::to_string(d.printed_terms), d.match);
    for (const auto& mm : d.mismatched) csv_row(os, d.record + " " + mm.key, d.m, mm.engine, mm.printed, false);
  }
  return os.str();
}

}  // namespace

ReportSummary summarize(const Report& r) {
  Tally t;
  for (const auto& row : r.coefficients) t.add(row.match, coeff_waived(r, row));
  for (const auto& p : r.h5) t.add(h5_ok(p), h5_waived(r, p));
  for (const auto& c : r.cases) t.add(case_ok(c));
  for (const auto& th : r.theorems) {
    t.add(th.match);
    for (const auto& c : th.cases) t.add(case_ok(c));
  }
  for (const auto& d : r.displays) t.add(d.match);
  return t.s;
}

int report_exit_code(const Report& r) { return summarize(r).mismatched == 0 ? 0 : 1; }

std::string emit_report(const Report& r, Format f) {
  const ReportSummary sum = summarize(r);
  const int code = sum.mismatched == 0 ? 0 : 1;
  switch (f) {
    case Format::json:
      return emit_json(r, sum, code);
    case Format::csv:
      return emit_csv(r);
    case Format::text:
      break;
  }
  return emit_text(r, sum, code);
}

}  // namespace wres
