#include "ricci/params.hpp"

#include <cmath>

namespace ricci {

const char* branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

const char* excluded_subset_name(double a, double b, double c) {
  if (b != 0.0) return nullptr;
  if (c == 0.0 && std::abs(a) >= 1.0) return "E1";
  if (a >= 1.0 && c > 0.0) return "E2";
  if (a <= -1.0 && c < 0.0) return "E3";
  return nullptr;
}

bool check_admissible(double a, double b, double c) {
  return excluded_subset_name(a, b, c) == nullptr;
}

OmegaRegion omega_region(const RicciParams& p) {
  OmegaRegion r;
  r.l1 = Line{p.a - 1.0, p.b, p.c};
  r.l2 = Line{p.a + 1.0, p.b, p.c};
  r.nonempty = check_admissible(p.a, p.b, p.c);
  const double a2 = p.a * p.a;
  if (p.b != 0.0 && a2 >= 1.0) r.barrier_s = -p.c / p.b;
  if (p.b == 0.0 && a2 == 1.0) r.barrier_x = -p.c / (2.0 * p.a);
  return r;
}

bool in_omega(const RicciParams& p, double s, double x) {
  if (!(x > 0.0)) return false;
  const double u = p.a * x + p.b * s + p.c;
  return u * u < x * x;
}

}  // namespace ricci
