#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wres/cli/report.hpp"

namespace wres {

enum class Command { verify_coefficients, verify_case, verify_all, probe_h5, show };

inline constexpr unsigned kCoefficientMaxM = 16;
inline constexpr unsigned kPipelineMaxM = 3;
// Largest m the symbol context supports.
inline constexpr unsigned kContextMaxM = 6;

struct RunConfig {
  Command command = Command::verify_all;
  unsigned m_lo = 1;
  unsigned m_hi = 1;
  std::optional<Theorem> theorem;
  std::optional<CaseId> case_id;
  Format format = Format::text;
  std::string goldens = WRES_DEFAULT_GOLDENS;
  std::set<std::string> waivers;
  Exec exec = Exec::parallel;
  std::string record;  // show
};

// Help requests (code 0) and usage errors (code 2).
class CliExit : public Error {
 public:
  CliExit(const std::string& what, int code) : Error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

// args excludes the program name.
RunConfig parse_args(const std::vector<std::string>& args);

Report build_report(const RunConfig& cfg, const CoefficientCatalog& cat);

// Runs a parsed config; returns the exit code (0 verified, 1 mismatch, 2 usage/IO, 3 pipeline error).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace wres
