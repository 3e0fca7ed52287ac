#include "qmod/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmod/io.hpp"

namespace qmod {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw std::invalid_argument("config: bad numeric value for key '" + key + "': " + value);
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    throw std::invalid_argument("config: bad integer value for key '" + key + "': " + value);
  return static_cast<int>(v);
}

}  // namespace

std::string dump_config(const RunConfig& cfg) {
  std::ostringstream out;
  const auto num = [](double v) { return io::format_double(v); };
  out << "model=" << (cfg.model == RunConfig::Model::cavity ? "cavity" : "freespace") << "\n";
  if (cfg.model == RunConfig::Model::cavity) {
    out << "g=" << num(cfg.cavity.g) << "\n";
    out << "kappa=" << num(cfg.cavity.kappa) << "\n";
    out << "delta_c=" << num(cfg.cavity.delta_c) << "\n";
    out << "omega=" << num(cfg.cavity.omega) << "\n";
    out << "chi=" << num(cfg.cavity.chi) << "\n";
    out << "phi=" << num(cfg.cavity.phi) << "\n";
  } else {
    out << "rho=" << num(cfg.fs.rho) << "\n";
    out << "omega0_over_omega=" << num(cfg.fs.omega0_over_omega) << "\n";
    out << "gamma_fs=" << num(cfg.fs.gamma_fs) << "\n";
    out << "omega=" << num(cfg.fs.omega) << "\n";
    out << "n0=" << cfg.fs.n0 << "\n";
    out << "m0=" << cfg.fs.m0 << "\n";
    out << "phi=" << num(cfg.fs.phi) << "\n";
    out << "drop_four_photon=" << (cfg.fs.drop_four_photon ? 1 : 0) << "\n";
  }
  out << "t_max=" << num(cfg.t_max) << "\n";
  out << "dt=" << num(cfg.dt) << "\n";
  if (cfg.n_bar) out << "nbar=" << *cfg.n_bar << "\n";
  out << "tol=" << num(cfg.tol) << "\n";
  out << "output=" << cfg.output << "\n";
  out << "format=" << (cfg.format == RunConfig::Format::csv ? "csv" : "json") << "\n";
  return out.str();
}

RunConfig parse_config(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got: " + line);
    pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  RunConfig cfg;
  // model first: it decides which record 'omega' and 'phi' belong to
  for (const auto& [key, value] : pairs) {
    if (key != "model") continue;
    if (value == "cavity") cfg.model = RunConfig::Model::cavity;
    else if (value == "freespace") cfg.model = RunConfig::Model::freespace;
    else throw std::invalid_argument("config: model must be 'cavity' or 'freespace', got: " + value);
  }
  const bool cav = cfg.model == RunConfig::Model::cavity;

  for (const auto& [key, value] : pairs) {
    if (key == "model") continue;
    if (key == "g") cfg.cavity.g = parse_number(key, value);
    else if (key == "kappa") cfg.cavity.kappa = parse_number(key, value);
    else if (key == "delta_c") cfg.cavity.delta_c = parse_number(key, value);
    else if (key == "chi") cfg.cavity.chi = parse_number(key, value);
    else if (key == "rho") cfg.fs.rho = parse_number(key, value);
    else if (key == "omega0_over_omega") cfg.fs.omega0_over_omega = parse_number(key, value);
    else if (key == "gamma_fs") cfg.fs.gamma_fs = parse_number(key, value);
    else if (key == "n0") cfg.fs.n0 = parse_int(key, value);
    else if (key == "m0") cfg.fs.m0 = parse_int(key, value);
    else if (key == "drop_four_photon") cfg.fs.drop_four_photon = parse_int(key, value) != 0;
    else if (key == "omega") (cav ? cfg.cavity.omega : cfg.fs.omega) = parse_number(key, value);
    else if (key == "phi") (cav ? cfg.cavity.phi : cfg.fs.phi) = parse_number(key, value);
    else if (key == "t_max") cfg.t_max = parse_number(key, value);
    else if (key == "dt") cfg.dt = parse_number(key, value);
    else if (key == "nbar") cfg.n_bar = parse_int(key, value);
    else if (key == "tol") cfg.tol = parse_number(key, value);
    else if (key == "output") cfg.output = value;
    else if (key == "format") {
      if (value == "csv") cfg.format = RunConfig::Format::csv;
      else if (value == "json") cfg.format = RunConfig::Format::json;
      else throw std::invalid_argument("config: format must be 'csv' or 'json', got: " + value);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("config: cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace qmod
