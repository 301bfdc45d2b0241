#include "wres/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wres {

namespace {

std::optional<unsigned> parse_uint(const std::string& s) {
  unsigned v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) return std::nullopt;
  return v;
}

CliExit usage(const std::string& what) { return CliExit("usage error: " + what, 2); }

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  const auto lo = parse_uint(dots == std::string::npos ? s : s.substr(0, dots));
  const auto hi = parse_uint(dots == std::string::npos ? s : s.substr(dots + 2));
  if (!lo || !hi) throw usage("malformed m range '" + s + "' (expected N or A..B)");
  return {*lo, *hi};
}

struct Raw {
  std::string m;
  std::string m_max;
  std::string theorem;
  std::string case_id;
  std::string format = "text";
  std::string goldens = WRES_DEFAULT_GOLDENS;
  std::vector<std::string> waivers;
  bool serial = false;
  bool parallel = false;
  std::string record;
};

void add_common(CLI::App* sub, Raw& raw, bool with_range) {
  if (with_range) {
    auto* m = sub->add_option("--m", raw.m, "m or inclusive range A..B");
    sub->add_option("--m-max", raw.m_max, "range 1..N")->excludes(m);
  } else {
    sub->add_option("--m", raw.m, "m");
  }
  sub->add_option("--format", raw.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--goldens", raw.goldens, "goldens file");
  sub->add_option("--waive", raw.waivers, "waive mismatches of a coefficient, or H5-order")->delimiter(',');
  auto* serial = sub->add_flag("--serial", raw.serial, "run sweeps on one thread");
  sub->add_flag("--parallel", raw.parallel, "run sweeps with OpenMP (default)")->excludes(serial);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification of boundary-term calculus for spectral Einstein functionals", "wres"};
  app.require_subcommand(1);
  Raw raw;
  struct Sub {
    Command cmd;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  subs.push_back({Command::verify_coefficients,
                  app.add_subcommand("verify-coefficients", "compare derivative definitions with closed forms")});
  subs.push_back({Command::verify_case, app.add_subcommand("verify-case", "run boundary cases")});
  subs.push_back({Command::verify_all, app.add_subcommand("verify-all", "coefficients, H5 probe, theorems, displays")});
  subs.push_back({Command::probe_h5, app.add_subcommand("probe-h5", "evaluate both H5 derivative orders")});
  subs.push_back({Command::show, app.add_subcommand("show", "print a goldens record and its value")});
  for (const auto& s : subs) add_common(s.app, raw, s.cmd != Command::show);
  subs[1].app->add_option("--theorem", raw.theorem, "A or B (default both)");
  subs[1].app->add_option("--case", raw.case_id, "I..V (default all)");
  subs[4].app->add_option("record", raw.record, "record name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    if (code == 0) throw CliExit(out.str(), 0);
    std::string msg = err.str();
    while (!msg.empty() && msg.back() == '\n') msg.pop_back();
    throw CliExit(msg, 2);
  }

  RunConfig cfg;
  for (const auto& s : subs)
    if (s.app->parsed()) cfg.command = s.cmd;
  cfg.format = *parse_format(raw.format);
  cfg.goldens = raw.goldens;
  cfg.exec = raw.serial ? Exec::serial : Exec::parallel;
  cfg.record = raw.record;

  unsigned limit = kCoefficientMaxM;
  unsigned default_hi = kCoefficientMaxM;
  if (cfg.command == Command::verify_case || cfg.command == Command::verify_all) {
    limit = kPipelineMaxM;
    default_hi = kPipelineMaxM;
  } else if (cfg.command == Command::show) {
    limit = kContextMaxM;
    default_hi = 1;
  }
  if (!raw.m.empty()) {
    std::tie(cfg.m_lo, cfg.m_hi) = parse_range(raw.m);
    if (cfg.command == Command::show && cfg.m_lo != cfg.m_hi) throw usage("show takes a single m");
  } else if (!raw.m_max.empty()) {
    const auto hi = parse_uint(raw.m_max);
    if (!hi) throw usage("malformed --m-max '" + raw.m_max + "'");
    cfg.m_lo = 1;
    cfg.m_hi = *hi;
  } else {
    cfg.m_lo = 1;
    cfg.m_hi = default_hi;
  }
  if (cfg.m_lo < 1 || cfg.m_lo > cfg.m_hi) throw usage("empty m range " + raw.m + raw.m_max);
  if (cfg.m_hi > limit) throw usage("m must not exceed " + std::to_string(limit) + " for this command");

  if (!raw.theorem.empty()) {
    cfg.theorem = parse_theorem(raw.theorem);
    if (!cfg.theorem) throw usage("unknown theorem '" + raw.theorem + "' (expected A or B)");
  }
  if (!raw.case_id.empty()) {
    cfg.case_id = parse_case(raw.case_id);
    if (!cfg.case_id) throw usage("unknown case '" + raw.case_id + "' (expected I, II, III, IV or V)");
  }
  for (const auto& w : raw.waivers) {
    bool known = w == kH5Waiver;
    for (const auto& n : swept_coefficient_names()) known = known || w == n;
    if (!known) throw usage("cannot waive '" + w + "' (expected a coefficient name or " + kH5Waiver + ")");
    cfg.waivers.insert(w);
  }
  std::ifstream probe(cfg.goldens);
  if (!probe) throw usage("goldens file '" + cfg.goldens + "' not found");
  return cfg;
}

Report build_report(const RunConfig& cfg, const CoefficientCatalog& cat) {
  Report r;
  r.m_lo = cfg.m_lo;
  r.m_hi = cfg.m_hi;
  r.waivers = cfg.waivers;
  const auto probes = [&](unsigned lo, unsigned hi) {
    for (unsigned m = lo; m <= hi; ++m) r.h5.push_back(probe_h5(cat, m));
  };
  switch (cfg.command) {
    case Command::verify_coefficients:
      r.command = "verify-coefficients";
      r.coefficients = verify_coefficients(cat, cfg.m_lo, cfg.m_hi, cfg.exec);
      probes(cfg.m_lo, cfg.m_hi);
      break;
    case Command::probe_h5:
      r.command = "probe-h5";
      probes(cfg.m_lo, cfg.m_hi);
      break;
    case Command::verify_case: {
      r.command = "verify-case";
      std::vector<CaseKey> keys;
      for (Theorem t : kTheorems) {
        if (cfg.theorem && *cfg.theorem != t) continue;
        for (CaseId c : kCases) {
          if (cfg.case_id && *cfg.case_id != c) continue;
          for (unsigned m = cfg.m_lo; m <= cfg.m_hi; ++m) keys.push_back({t, c, m});
        }
      }
      r.cases = run_cases(cat, keys, cfg.exec);
      break;
    }
    case Command::verify_all:
      r.command = "verify-all";
      r.coefficients = verify_coefficients(cat, 1, kCoefficientMaxM, cfg.exec);
      probes(1, kCoefficientMaxM);
      r.theorems = run_theorems(cat, cfg.m_lo, cfg.m_hi, cfg.exec);
      r.displays = run_displays(cat, cfg.m_lo, cfg.m_hi, cfg.exec);
      break;
    case Command::show:
      throw Error("build_report: show has no report");
  }
  return r;
}

namespace {

int run_show(const RunConfig& cfg, const CoefficientCatalog& cat, std::ostream& out, std::ostream& err) {
  const GoldenRecord* rec = cat.goldens().find(cfg.record);
  if (!rec) {
    err << "wres: usage error: no goldens record '" << cfg.record << "'\n";
    return 2;
  }
  Workspace ws(cat, cfg.m_lo);
  const std::string value = ws.record(cfg.record).str();
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j{{"name", rec->name}, {"line", rec->line},   {"anchor", rec->anchor},
                             {"expr", rec->expr_text}, {"quote", rec->quote}, {"m", cfg.m_lo},
                             {"value", value}};
    out << j.dump(2) << "\n";
  } else {
    out << "name: " << rec->name << "\nline: " << rec->line << "\nanchor: " << rec->anchor
        << "\nexpr: " << rec->expr_text << "\nquote: " << rec->quote << "\nvalue at m=" << cfg.m_lo << ":\n"
        << value << "\n";
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Goldens goldens;
  try {
    goldens = load_goldens(cfg.goldens);
  } catch (const Error& e) {
    err << "wres: " << e.what() << "\n";
    return 2;
  }
  std::optional<CoefficientCatalog> cat;
  try {
    cat.emplace(goldens);
  } catch (const Error& e) {
    err << "wres: " << e.what() << "\n";
    return 2;
  }
  try {
    if (cfg.command == Command::show) return run_show(cfg, *cat, out, err);
    const Report r = build_report(cfg, *cat);
    out << emit_report(r, cfg.format);
    return report_exit_code(r);
  } catch (const std::exception& e) {
    err << "wres: internal pipeline error: " << e.what() << "\n";
    return 3;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const CliExit& e) {
    (e.code() == 0 ? out : err) << e.what() << (e.code() == 0 ? "" : "\n");
    return e.code();
  }
  return run(cfg, out, err);
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace wres
