#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ricci/params.hpp"

namespace ricci {

// One point of a generating curve. H is absent at horizontal-tangent samples
// (it diverges there); `residual` is the scale-free Ricci residual.
struct ProfileSample {
  double s = 0.0;
  double f = 0.0;
  double fp = 0.0;
  double g = 0.0;
  double K = 0.0;
  std::optional<double> H;
  double residual = 0.0;
};

// Why directional integration of the profile IVP stopped.
enum class StopReason { None, SpanExhausted, BoundaryTangent, RadiusCollapse, StepLimit };

const char* stop_reason_name(StopReason r);

struct IvpStop {
  StopReason reason = StopReason::None;
  double s = 0.0;
  double f = 0.0;
};

// Immutable sampled generating curve, ordered by increasing s. g vanishes at
// s0_anchor. Curves produced by the IVP solver carry the stop records.
struct ProfileCurve {
  RicciParams params;
  std::vector<ProfileSample> samples;
  double s0_anchor = 0.0;
  std::optional<IvpStop> stop_left, stop_right;
};

struct ProfilePoint {
  double f = 0.0;
  double fp = 0.0;
};

// Closed-form evaluation of a profile at arc length s.
using ProfileFn = std::function<ProfilePoint(double)>;

inline const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::None: return "none";
    case StopReason::SpanExhausted: return "span";
    case StopReason::BoundaryTangent: return "boundary-tangent";
    case StopReason::RadiusCollapse: return "radius-collapse";
    case StopReason::StepLimit: return "step-limit";
  }
  return "?";
}

}  // namespace ricci
