#pragma once

#include <string>
#include <vector>

#include "wres/cli/goldens.hpp"

namespace wres {

enum class Exec { serial, parallel };

// Catalog names in order A0..H5.
const std::vector<std::string>& coefficient_names();
// The 27 names compared by verify_coefficients: the catalog without H5, which probe_h5 covers.
const std::vector<std::string>& swept_coefficient_names();

struct CoeffRow {
  std::string name;
  unsigned m = 0;
  GaussianRational defined;
  GaussianRational closed;
  bool match = false;
};

// Coefficient definitions (def:NAME) and printed closed forms (closed:NAME)
// read from the goldens. Construction checks catalog completeness: every
// catalog name has both records and every (coef NAME) used by phi:/thm:
// records names a catalog entry.
class CoefficientCatalog {
 public:
  explicit CoefficientCatalog(const Goldens& goldens);

  const Goldens& goldens() const { return *goldens_; }
  bool contains(const std::string& name) const;
  // Derivative definition at xi_n = i.
  GaussianRational defined(const std::string& name, unsigned m) const;
  // Printed rising-product formula.
  GaussianRational closed(const std::string& name, unsigned m) const;

 private:
  GaussianRational eval(const std::string& record, unsigned m) const;
  const Goldens* goldens_;
};

// One row per (swept name, m), ordered by catalog name then m.
std::vector<CoeffRow> verify_coefficients(const CoefficientCatalog& cat, unsigned m_lo, unsigned m_hi,
                                          Exec exec = Exec::serial);

// The H5 bracket evaluated with derivative order m (contour line) and m+2 (printed bracket).
struct H5Probe {
  unsigned m = 0;
  GaussianRational order_m;
  GaussianRational order_m_plus_2;
};

H5Probe probe_h5(const CoefficientCatalog& cat, unsigned m);

}  // namespace wres
