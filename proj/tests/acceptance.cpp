#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "properties.hpp"
#include "wres/cli/app.hpp"

namespace {

using namespace wres;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome coefficients(const CoefficientCatalog& cat) {
  const auto start = Clock::now();
  const auto rows = verify_coefficients(cat, 1, 16, Exec::parallel);
  const double t = seconds_since(start);
  std::size_t matched = 0;
  std::set<std::string> bad;
  for (const auto& r : rows) {
    if (r.match) {
      ++matched;
    } else {
      bad.insert(r.name);
    }
  }
  const GaussianRational i = GaussianRational::i();
  const bool anchors = cat.defined("A1", 1) == GaussianRational::fraction(-3, 8) &&
                       cat.closed("A1", 1) == GaussianRational::fraction(-3, 8) &&
                       cat.defined("D0", 1) == GaussianRational::fraction(1, 4) &&
                       cat.closed("D0", 1) == GaussianRational::fraction(1, 4) &&
                       cat.defined("E1", 1) == GaussianRational::fraction(3, 8) * i &&
                       cat.closed("E1", 1) == GaussianRational::fraction(3, 8) * i;
  std::string d = std::to_string(matched) + "/" + std::to_string(rows.size()) + " rows equal";
  if (!bad.empty()) {
    d += ", closed forms differ for";
    for (const auto& b : bad) d += " " + b;
  }
  d += "; spot anchors " + std::string(anchors ? "hold" : "fail") + "; " + secs(t);
  return {matched == rows.size() && rows.size() == 27 * 16 && anchors && t < 5.0, d};
}

Outcome h5(const CoefficientCatalog& cat) {
  bool order_m_zero = true;
  for (unsigned m = 1; m <= 16; ++m) order_m_zero = order_m_zero && probe_h5(cat, m).order_m.is_zero();
  const H5Probe p1 = probe_h5(cat, 1);
  const GaussianRational want = GaussianRational::fraction(-3, 2) / GaussianRational::i();
  Report r;
  r.h5.push_back(p1);
  const std::string text = emit_report(r, Format::text);
  const bool documented = text.find("order m+2: " + want.str()) != std::string::npos &&
                          text.find("differentiates m+2 times") != std::string::npos;
  return {order_m_zero && p1.order_m_plus_2 == want && documented,
          "order m is 0 for m=1..16: " + std::string(order_m_zero ? "yes" : "no") + "; order m+2 at m=1: " +
              p1.order_m_plus_2.str() + "; report documents both orders: " + (documented ? "yes" : "no")};
}

Outcome property(const std::function<testing::PropertyResult()>& f, double limit) {
  const auto start = Clock::now();
  const testing::PropertyResult r = f();
  const double t = seconds_since(start);
  return {r.ok() && t < limit, r.describe() + "; " + secs(t)};
}

Outcome pipelines(const CoefficientCatalog& cat) {
  std::size_t cases = 0;
  std::size_t values = 0;
  std::size_t displayed = 0;
  std::size_t omitted = 0;
  std::size_t by_parts = 0;
  std::size_t theorems = 0;
  std::size_t structures = 0;
  double worst = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    const auto start = Clock::now();
    const auto reports = run_theorems(cat, m, m, Exec::parallel);
    worst = std::max(worst, seconds_since(start));
    for (const auto& t : reports) {
      theorems += t.match ? 1 : 0;
      for (const auto& s : t.structures) structures += s.match ? 1 : 0;
      for (const auto& c : t.cases) {
        ++cases;
        values += c.match ? 1 : 0;
        displayed += c.display_phi == c.expected ? 1 : 0;
        omitted += c.omitted_vanish ? 1 : 0;
        by_parts += c.by_parts_ok ? 1 : 0;
      }
    }
  }
  const bool pass = values == cases && omitted == cases && by_parts == cases && theorems == 6 && worst < 30.0;
  return {pass, "case values reproduced " + std::to_string(values) + "/" + std::to_string(cases) +
                    "; printed displays give the printed value " + std::to_string(displayed) + "/" +
                    std::to_string(cases) + "; omitted terms vanish " + std::to_string(omitted) + "/" + std::to_string(cases) +
                    "; by-parts forms agree " + std::to_string(by_parts) + "/" + std::to_string(cases) +
                    "; theorem statements reproduced " + std::to_string(theorems) + "/6 (structure coefficients " +
                    std::to_string(structures) + "/30); slowest m " + secs(worst)};
}

Outcome displays(const CoefficientCatalog& cat) {
  const auto rows = run_displays(cat, 2, 2, Exec::parallel);
  std::size_t ok = 0;
  std::string bad;
  for (const auto& d : rows) {
    if (d.match) {
      ++ok;
    } else {
      bad += " " + d.record;
    }
  }
  return {ok == rows.size(), std::to_string(ok) + "/" + std::to_string(rows.size()) + " displays reproduced at m=2" +
                                 (bad.empty() ? "" : "; differing:" + bad)};
}

Outcome determinism() {
  std::string first;
  bool same = true;
  for (const char* fmt : {"text", "json"}) {
    std::ostringstream a, b, ea, eb;
    const int ca = run_cli({"verify-all", "--format", fmt}, a, ea);
    const int cb = run_cli({"verify-all", "--format", fmt}, b, eb);
    same = same && ca == cb && a.str() == b.str() && !a.str().empty();
  }
  return {same, same ? "two consecutive verify-all runs are byte-identical (text, json)" : "reports differ"};
}

}  // namespace

int main() {
  bool all = true;
  const auto line = [&](const char* name, const std::function<Outcome()>& f) {
    Outcome o{false, ""};
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  };
  const Goldens goldens = load_goldens(WRES_DEFAULT_GOLDENS);
  const CoefficientCatalog cat(goldens);
  line("coefficient verification", [&] { return coefficients(cat); });
  line("H5 probe", [&] { return h5(cat); });
  line("Cauchy consistency", [] { return property([] { return testing::check_cauchy(600, 1, 20); }, 10.0); });
  line("projection algebra", [] { return property([] { return testing::check_projection(300, 2, 20); }, 60.0); });
  line("trace oracle", [] {
    return property(
        [] {
          testing::PropertyResult r;
          for (unsigned n : {3u, 5u, 7u})
            for (const auto& part : {testing::check_trace_oracle(n, 400, n, 6), testing::check_gamma_rep(n)}) {
              r.checked += part.checked;
              r.failures.insert(r.failures.end(), part.failures.begin(), part.failures.end());
            }
          return r;
        },
        5.0);
  });
  line("full pipeline reproduction", [&] { return pipelines(cat); });
  line("intermediate displays", [&] { return displays(cat); });
  line("determinism", [] { return determinism(); });
  return all ? 0 : 1;
}
