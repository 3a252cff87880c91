#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ricci {

// Defaults shared by the CLI commands. A config file of `key = value` lines
// ('#' comments) may pre-set them; flags override the file. Unknown keys are
// rejected, tolerances must be positive.
struct JobConfig {
  double eps_boundary = 1e-8;
  double span = 8.0;           // default half-width for unbounded intervals
  double ivp_span = 50.0;
  double quad_tol = 1e-10;
  std::uint64_t seed = 1;
  unsigned n = 101;
  unsigned ntheta = 64;
  unsigned threads = 0;  // 0: RICCI_ROT_THREADS or hardware default

  static JobConfig from_file(const std::string& path);
  void apply(const std::map<std::string, std::string>& kv);
};

}  // namespace ricci
