#pragma once

// The invariant suite as a report: one named check per property, grouped by
// module. Used by `famindex verify` and by the acceptance runner.

#include <string>
#include <vector>

#include "famindex/gammasets.hpp"
#include "famindex/mgamma.hpp"
#include "famindex/precuspidal.hpp"

namespace famindex {

enum class CheckStatus { Pass, Fail, Info };
const char* to_string(CheckStatus s);

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<Check> checks;
  int passed() const;
  int failed() const;
  int info() const;
  bool ok() const { return failed() == 0; }
  /// Checks whose id starts with `prefix`.
  std::vector<const Check*> select(const std::string& prefix) const;
};

/// Golden X lists by tag, as (small, large) catalog names in listing order.
struct GoldenX {
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> lists;
  static GoldenX from_json(const std::string& text);
  static const GoldenX& standard();
};

struct VerifyOptions {
  /// Subset of {"f2spaces", "inductive", "gammasets", "mgamma", "precuspidal"};
  /// empty runs all of them.
  std::vector<std::string> modules;
  GammaConfig gamma;
  SsConfig ss;
  const PrecuspidalData* data = nullptr;   // standard() when null
  const GoldenX* golden = nullptr;         // standard() when null
  int max_d = 12;           // enumerative bound
  int rho_max_d = 8;        // vector kinds in the ρ checks
  int rank_cap = 7;
};

VerificationReport verify(const VerifyOptions& opt);

std::string report_json(const VerificationReport& r);
std::string report_tsv(const VerificationReport& r);

}  // namespace famindex
