#pragma once

#include "fvir/diffpoly.hpp"

#include <string>
#include <vector>

namespace fvir {

/// Outcome of one symbolic identity. The residual is the canonical text of
/// whatever failed to vanish; it is empty on success.
struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string residual;
};

struct Report {
  std::string title;
  std::vector<IdentityCheck> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string residual = {});
  /// Passes iff the residual is exactly zero.
  void expect_zero(std::string name, const DiffPoly& residual, const Naming& naming);
  void expect_zero(std::string name, const AlgDiffPoly& residual, const Naming& naming);
  /// Passes iff the density is a total x-derivative.
  void expect_total_derivative(std::string name, const DiffPoly& density, const Naming& naming);
};

/// {"passed": bool, "suites": [{"title", "passed", "identities": [{name, status, residual}]}]}
std::string reports_to_json(const std::vector<Report>& reports);

/// One line per identity: "PASS suite / identity" or "FAIL … : residual".
std::string reports_to_text(const std::vector<Report>& reports);

}  // namespace fvir
