#pragma once

#include <cstdint>
#include <random>

#include "ricci/params.hpp"

namespace ricci {

// Parameter families for randomized sweeps, one per classification branch.
enum class ParamFamily {
  A0Negative,         // complete: 0 < b <= 1, c^2 < b d
  A0NegativeBounded,  // b > 1, c^2 < b d
  A0Positive,         // c^2 > b d, b < 1 (includes b = 0 and b < 0 modes)
  B0NegativePlus,     // a > 0, c < 0
  B0NegativeMinus,    // a < 0, c > 0
  B0PositivePlus,     // c > 0, a < 1
  B0PositiveMinus,    // c < 0, a > -1
  General,            // a != 0, b != 0
};

// Deterministic uniform draws built directly on the engine's bit stream, so
// sweeps reproduce bit-exactly for a given seed on any platform.
class ParamRng {
 public:
  explicit ParamRng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = double(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  double signed_uniform(double lo_mag, double hi_mag) {
    const double v = uniform(lo_mag, hi_mag);
    return (eng_() & 1u) ? v : -v;
  }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Draws admissible parameters of the requested family, away from the
// degenerate margins (discriminants bounded from zero, slopes bounded from
// the critical values) so that randomized properties are well conditioned.
RicciParams draw_params(ParamFamily family, ParamRng& rng);

}  // namespace ricci
