#include "lcklab/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "lcklab/errors.hpp"

namespace lck {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_numbers(const std::string& v, const std::string& where) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(v);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(where + ": expected a number, got '" + item + "'");
    }
  }
  return out;
}

double parse_one(const std::string& v, const std::string& where) {
  auto nums = parse_numbers(v, where);
  if (nums.size() != 1) throw ConfigError(where + ": expected a single number");
  return nums[0];
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "validate-lck", "lee-form",  "monodromy",     "key-formula",
      "proof-chain",  "omega-W",   "psi-potential", "certify",
      "averaging-pipeline", "vaisman"};
  return names;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

RunConfig RunConfig::parse_text(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  std::string section;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto where = origin + ":" + std::to_string(lineno);
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    std::string full = section.empty() ? key : section + "." + key;

    if (full == "model.n") {
      cfg.n = static_cast<int>(parse_one(val, where));
    } else if (full == "model.alpha") {
      cfg.alpha = parse_one(val, where);
    } else if (full == "model.lambda") {
      cfg.lambda = parse_one(val, where);
    } else if (full == "model.killing_rates") {
      cfg.killing_rates = parse_numbers(val, where);
    } else if (full == "run.samples") {
      cfg.samples = static_cast<int>(parse_one(val, where));
    } else if (full == "run.quadrature_n") {
      cfg.quadrature_n = static_cast<int>(parse_one(val, where));
    } else if (full == "run.seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_one(val, where));
    } else if (full == "run.suites") {
      cfg.suites.clear();
      std::string item;
      std::stringstream vs(val);
      while (std::getline(vs, item, ',')) {
        item = trim(item);
        if (!item.empty()) cfg.suites.push_back(item);
      }
    } else if (full == "tolerances.tol_jet") {
      cfg.tol_jet = parse_one(val, where);
    } else if (full == "tolerances.tol_quad") {
      cfg.tol_quad = parse_one(val, where);
    } else {
      throw ConfigError(where + ": unknown key '" + full + "'");
    }
  }
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  if (n < 2) throw ConfigError("model.n must be >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("model.alpha must be in (0,1)");
  if (!(lambda > 0.0)) throw ConfigError("model.lambda must be positive");
  if (samples < 1) throw ConfigError("run.samples must be positive");
  if (quadrature_n < 4) throw ConfigError("run.quadrature_n must be >= 4");
  if (!(tol_jet > 0.0)) throw ConfigError("tolerances.tol_jet must be positive");
  if (!(tol_quad > 0.0)) throw ConfigError("tolerances.tol_quad must be positive");
  if (static_cast<int>(killing_rates.size()) > n)
    throw ConfigError("model.killing_rates has more entries than blocks");
  for (const auto& s : suites) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw ConfigError("unknown suite '" + s + "'");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["model"]["n"] = n;
  j["model"]["alpha"] = alpha;
  j["model"]["lambda"] = lambda;
  j["model"]["killing_rates"] = killing_rates;
  j["run"]["samples"] = samples;
  j["run"]["quadrature_n"] = quadrature_n;
  j["run"]["seed"] = seed;
  j["run"]["suites"] = suites.empty() ? suite_names() : suites;
  j["tolerances"]["tol_jet"] = tol_jet;
  j["tolerances"]["tol_quad"] = tol_quad;
  return j;
}

}  // namespace lck
