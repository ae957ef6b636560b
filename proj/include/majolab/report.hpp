#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "majolab/reps.hpp"

namespace majolab {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string identity;
  std::string rep;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double tolerance = kDefaultTol;

  bool pass() const;
  void add(std::string identity, std::string rep, double residual, std::string detail = {});
  void append(const VerifyReport& other);
  nlohmann::json to_json() const;
};

/// Identity suite for one representation. Custom reps without S_C get the gamma-only checks.
VerifyReport verify_rep(const RepSpec& rep, double tol = kDefaultTol);
/// Every built-in plus the transport chains, literature fixtures and boundary conditions.
VerifyReport verify_all(double tol = kDefaultTol);

/// Label such as "dirac/D2".
std::string rep_label(const RepSpec& rep);

/// All representation tables regenerated from the similarity matrices, as stable JSON text.
std::string tables_json();

}  // namespace majolab
