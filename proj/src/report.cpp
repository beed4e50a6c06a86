#include "lcklab/report.hpp"

#include <sstream>

using nlohmann::json;

namespace lck {

namespace {

json suite_json(const SuiteResult& s, bool with_timing) {
  json j;
  j["suite"] = s.suite;
  j["paper_anchor"] = s.paper_anchor;
  j["residual_max"] = s.residual_max();
  j["verdict"] = s.verdict() ? "pass" : "fail";
  if (!s.error.empty()) j["error"] = s.error;
  j["entries"] = json::array();
  for (const auto& e : s.entries) {
    j["entries"].push_back({{"check", e.check},
                            {"residual", e.residual},
                            {"tol", e.tol},
                            {"pass", e.pass}});
  }
  if (with_timing) j["wall_ms"] = s.wall_ms;
  return j;
}

json report_json(const VerificationReport& r, bool with_timing) {
  json j;
  j["schema_version"] = r.schema_version;
  j["config"] = r.config_echo;
  j["conventions_fingerprint"] = r.conventions_fingerprint;
  j["seed"] = r.seed;
  j["suites"] = json::array();
  for (const auto& s : r.suites) j["suites"].push_back(suite_json(s, with_timing));
  j["verdict"] = r.all_pass() ? "pass" : "fail";
  if (with_timing && !r.timestamp.empty()) j["timestamp"] = r.timestamp;
  return j;
}

}  // namespace

json VerificationReport::to_json() const { return report_json(*this, true); }

std::string VerificationReport::canonical_body() const {
  return report_json(*this, false).dump(2);
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  r.schema_version = j.value("schema_version", 1);
  r.config_echo = j.value("config", json::object());
  r.conventions_fingerprint = j.value("conventions_fingerprint", "");
  r.seed = j.value("seed", std::uint64_t{0});
  r.timestamp = j.value("timestamp", "");
  for (const auto& js : j.value("suites", json::array())) {
    SuiteResult s;
    s.suite = js.value("suite", "");
    s.paper_anchor = js.value("paper_anchor", "");
    s.error = js.value("error", "");
    s.wall_ms = js.value("wall_ms", 0.0);
    for (const auto& je : js.value("entries", json::array())) {
      ReportEntry e;
      e.check = je.value("check", "");
      e.residual = je.value("residual", 0.0);
      e.tol = je.value("tol", 0.0);
      e.pass = je.value("pass", false);
      s.entries.push_back(e);
    }
    r.suites.push_back(std::move(s));
  }
  return r;
}

std::string explain(const VerificationReport& rep) {
  std::ostringstream out;
  out << "verification report (schema " << rep.schema_version << ")\n";
  out << "conventions fingerprint: " << rep.conventions_fingerprint << "\n";
  out << "seed: " << rep.seed << "\n\n";
  if (rep.suites.empty()) {
    out << "no suites were run.\n";
    return out.str();
  }
  for (const auto& s : rep.suites) {
    out << (s.verdict() ? "PASS " : "FAIL ") << s.suite << "  [" << s.paper_anchor
        << "]\n";
    if (!s.error.empty()) out << "      aborted: " << s.error << "\n";
    for (const auto& e : s.entries) {
      out << "      " << (e.pass ? "ok   " : "FAIL ") << e.check << "  residual="
          << e.residual << " tol=" << e.tol << "\n";
    }
  }
  out << "\noverall: " << (rep.all_pass() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace lck
