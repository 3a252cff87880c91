#include "ricci/jobconfig.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_positive(const std::string& key, const std::string& value) {
  const double v = std::stod(value);
  if (!(v > 0.0)) fail(Errc::BadParameters, "config key '" + key + "' must be positive");
  return v;
}

}  // namespace

JobConfig JobConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadParameters, "cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string::size_type eq = line.find('=');
    if (eq == std::string::npos) fail(Errc::BadParameters, "config line without '=': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  JobConfig cfg;
  cfg.apply(kv);
  return cfg;
}

void JobConfig::apply(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    try {
      if (key == "eps_boundary")
        eps_boundary = parse_positive(key, value);
      else if (key == "span")
        span = parse_positive(key, value);
      else if (key == "ivp_span")
        ivp_span = parse_positive(key, value);
      else if (key == "quad_tol")
        quad_tol = parse_positive(key, value);
      else if (key == "seed")
        seed = std::stoull(value);
      else if (key == "n")
        n = static_cast<unsigned>(std::stoul(value));
      else if (key == "ntheta")
        ntheta = static_cast<unsigned>(std::stoul(value));
      else if (key == "threads")
        threads = static_cast<unsigned>(std::stoul(value));
      else
        fail(Errc::BadParameters, "unknown config key: " + key);
    } catch (const std::invalid_argument&) {
      fail(Errc::BadParameters, "bad value for config key '" + key + "': " + value);
    } catch (const std::out_of_range&) {
      fail(Errc::BadParameters, "value out of range for config key '" + key + "': " + value);
    }
  }
}

}  // namespace ricci
