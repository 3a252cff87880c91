#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ricci/curve.hpp"
#include "ricci/interval.hpp"
#include "ricci/params.hpp"
#include "ricci/profile.hpp"

namespace ricci {

enum class KSign { Negative, Zero, Positive };

// Case tags. CatenoidalRicci and FunnelRicci are reserved for the complete
// negatively curved subfamilies; their bounded siblings (a = 0 with b > 1,
// b = 0 with |a| > 1) carry the *Bounded tags.
enum class CaseTag {
  FlatCylinder,
  FlatCone,
  FlatPlane,
  CatenoidalRicci,
  NegativeA0Bounded,
  PositiveA0,
  FunnelRicci,
  NegativeB0Bounded,
  PositiveB0,
  GeneralCase,
};

const char* case_tag_name(CaseTag t);
const char* k_sign_name(KSign k);

struct ClassificationReport {
  RicciParams params;
  CaseTag case_tag = CaseTag::FlatCylinder;
  KSign k_sign = KSign::Zero;
  DomainInterval interval;
  bool complete = false;
  bool marginal = false;  // a sign classification sat within 1e-12 of flipping
  std::map<std::string, double> descriptors;
  std::vector<std::string> notes;
};

// Decides which case applies, the maximal admissible interval and the
// geometric descriptors. Throws Inadmissible when (a,b,c) lies in the
// excluded set, NoSurface when the admissible parameters still carry no
// profile (empty domain). For the general case, t0 fixes the gauge point of
// the reparametrised profile; when absent a deterministic representative of
// an admissible component is chosen (recorded in descriptors["t0"]).
ClassificationReport classify(const RicciParams& p, std::optional<double> t0 = std::nullopt);

// Maximal admissible interval for the a = 0 family per the sign of c^2 - b d
// and the position of b relative to (0, 1). For the two-component situation
// (K > 0, 0 < b < 1) the right component is returned and s1/s2 are exposed in
// the classify descriptors. Throws Degenerate when b = c = 0.
DomainInterval maximal_interval_a0(double b, double c, double d);

// Admissible t-set of the general case (wrapper over the profile module).
std::vector<TInterval> general_case_J(double a, double b);

struct FlatInfo {
  CaseTag tag = CaseTag::FlatCylinder;
  double m = 0.0;       // profile slope
  double r = 0.0;       // radius at s = 0 (cylinder: the radius)
  double phi = 0.0;     // cone opening angle, 2 atan(|m|/sqrt(1-m^2))
  double vertex = 0.0;  // cone apex height relative to the curve anchor
};

// Detects an affine profile (within 1e-10 across the samples) and returns the
// flat descriptors; nullopt when the curve is not flat.
std::optional<FlatInfo> detect_flat(const ProfileCurve& curve);

// Classification plus the matching closed-form evaluator (the general case
// shares the component choice with the report).
struct ResolvedProfile {
  ClassificationReport report;
  ProfileFn eval;
};
ResolvedProfile resolve_profile(const RicciParams& p, std::optional<double> t0 = std::nullopt);

}  // namespace ricci
