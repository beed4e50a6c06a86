#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lcklab/suites.hpp"

namespace fs = std::filesystem;

namespace {

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

fs::path default_out_dir() {
  if (const char* env = std::getenv("LCKLAB_OUT_DIR")) return env;
  return fs::current_path();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lcklab: verification suites for LCK geometry on C^n \\ {0}"};
  app.require_subcommand(1);

  std::string config_path, report_path, out_path;
  int samples = -1, quad_n = -1;
  long long seed = -1;
  double tol_jet = -1.0, tol_quad = -1.0;

  auto* run = app.add_subcommand("run", "run suites from a config file");
  run->add_option("config", config_path, "config file (INI-style)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--samples", samples, "override run.samples");
  run->add_option("--quadrature-n", quad_n, "override run.quadrature_n");
  run->add_option("--seed", seed, "override run.seed");
  run->add_option("--tol-jet", tol_jet, "override tolerances.tol_jet");
  run->add_option("--tol-quad", tol_quad, "override tolerances.tol_quad");
  run->add_option("--out", out_path,
                  "report path (default: <LCKLAB_OUT_DIR|.>/report.json)");

  auto* explain_cmd = app.add_subcommand("explain", "render a report as text");
  explain_cmd->add_option("report", report_path, "report JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("list-suites", "list available suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& s : lck::suite_names()) std::cout << s << "\n";
      return 0;
    }

    if (explain_cmd->parsed()) {
      std::ifstream in(report_path);
      nlohmann::json j;
      in >> j;
      auto rep = lck::VerificationReport::from_json(j);
      std::cout << lck::explain(rep);
      return rep.all_pass() ? 0 : 1;
    }

    lck::RunConfig cfg = lck::RunConfig::parse_file(config_path);
    if (samples > 0) cfg.samples = samples;
    if (quad_n > 0) cfg.quadrature_n = quad_n;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (tol_jet > 0.0) cfg.tol_jet = tol_jet;
    if (tol_quad > 0.0) cfg.tol_quad = tol_quad;
    cfg.validate();

    lck::VerificationReport rep = lck::run_suites(cfg);
    rep.timestamp = now_iso8601();

    fs::path out = out_path.empty() ? default_out_dir() / "report.json"
                                    : fs::path(out_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    std::ofstream of(out);
    of << rep.to_json().dump(2) << "\n";
    if (!of) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }

    for (const auto& s : rep.suites)
      std::cout << (s.verdict() ? "PASS" : "FAIL") << "  " << s.suite
                << "  residual_max=" << s.residual_max() << "\n";
    std::cout << "report: " << out.string() << "\n";
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
