#include "fvir/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace fvir {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

void Report::add(std::string name, bool ok, std::string residual) {
  checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(residual)});
}

void Report::expect_zero(std::string name, const DiffPoly& residual, const Naming& naming) {
  add(std::move(name), residual.is_zero(), to_string(residual, naming));
}

void Report::expect_zero(std::string name, const AlgDiffPoly& residual, const Naming& naming) {
  add(std::move(name), residual.is_zero(), to_string(residual, naming));
}

void Report::expect_total_derivative(std::string name, const DiffPoly& density, const Naming& naming) {
  add(std::move(name), density.is_zero() || is_total_derivative(density), to_string(density, naming));
}

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json doc;
  bool all = true;
  doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json suite;
    suite["title"] = r.title;
    suite["passed"] = r.passed();
    suite["identities"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
      suite["identities"].push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"residual", c.residual}});
    all = all && r.passed();
    doc["suites"].push_back(std::move(suite));
  }
  nlohmann::ordered_json out;
  out["passed"] = all;
  out["suites"] = std::move(doc["suites"]);
  return out.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      os << (c.passed ? "PASS " : "FAIL ") << r.title << " / " << c.name;
      if (!c.passed) os << " : " << c.residual;
      os << '\n';
    }
  return os.str();
}

}  // namespace fvir
