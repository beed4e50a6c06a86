#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lck {

struct ReportEntry {
  std::string check;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::string paper_anchor;  // the identity this suite certifies
  std::vector<ReportEntry> entries;
  std::string error;  // non-empty when the suite aborted
  double wall_ms = 0.0;

  double residual_max() const {
    double r = 0.0;
    for (const auto& e : entries) r = std::max(r, e.residual);
    return r;
  }
  bool verdict() const {
    if (!error.empty()) return false;
    for (const auto& e : entries)
      if (!e.pass) return false;
    return !entries.empty();
  }
};

struct VerificationReport {
  int schema_version = 1;
  nlohmann::json config_echo;
  std::string conventions_fingerprint;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  std::string timestamp;

  bool all_pass() const {
    for (const auto& s : suites)
      if (!s.verdict()) return false;
    return true;
  }

  nlohmann::json to_json() const;
  /// Deterministic body: the full report minus timestamp and wall times.
  std::string canonical_body() const;

  static VerificationReport from_json(const nlohmann::json& j);
};

/// Human-readable rendering of a report.
std::string explain(const VerificationReport& rep);

}  // namespace lck
