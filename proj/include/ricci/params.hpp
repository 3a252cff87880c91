#pragma once

#include <optional>
#include <string>

namespace ricci {

// Sign branch of a*f + c used by the b = 0 implicit family. Ignored elsewhere.
enum class Branch { Plus, Minus };

const char* branch_name(Branch b);

// Constants of the profile ODE f f' = a f + b s + c, plus the integration
// constant d picked up when the ODE is integrated once more:
//   a = 0      : f^2 = b s^2 + 2 c s + d          (d has units of length^2)
//   b = 0      : a f - c log|a f + c| = a^2 s + d (d has units of length)
//   a,b != 0   : overall scale of the reparametrised profile
struct RicciParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  Branch branch = Branch::Plus;
};

// Line in the (s,x)-plane stored as coefficients of x_coef*x + s_coef*s + offset = 0.
struct Line {
  double x_coef = 0.0;
  double s_coef = 0.0;
  double offset = 0.0;
};

// Structure of the well-posedness region
//   Omega = { (s,x) : x > 0, (a x + b s + c)^2 < x^2 }.
// The two boundary lines always exist; the barriers only in the cases below.
struct OmegaRegion {
  Line l1;  // (a-1) x + b s + c = 0
  Line l2;  // (a+1) x + b s + c = 0
  std::optional<double> barrier_s;  // -c/b, present iff a^2 >= 1 and b != 0
  std::optional<double> barrier_x;  // -c/(2a), present iff a^2 == 1 and b == 0
  bool nonempty = false;
};

// True iff Omega is nonempty, i.e. (a,b,c) avoids the excluded set
//   E1 = {(a,0,0) : |a| >= 1}
//   E2 = {(a,0,c) : a >= 1, c > 0}
//   E3 = {(a,0,c) : a <= -1, c < 0}.
// Membership is decided by the exact set definitions; boundary triples
// (|a| = 1 exactly, c = 0 exactly) count as excluded.
bool check_admissible(double a, double b, double c);

// Name of the excluded subset hit ("E1"/"E2"/"E3"), or nullptr if admissible.
const char* excluded_subset_name(double a, double b, double c);

OmegaRegion omega_region(const RicciParams& p);

// Strict membership test for the IVP seed.
bool in_omega(const RicciParams& p, double s, double x);

}  // namespace ricci
