#pragma once

#include <cmath>
#include <limits>

namespace ricci {

// Provenance of a maximal-interval endpoint.
//   Infinite       : the profile extends without bound
//   PolynomialRoot : horizontal tangent (|f'| -> 1) at finite arc length
//   Asymptote      : the curve approaches the endpoint without attaining it
//   Barrier        : the s-barrier -c/b of the (s,x)-region (reached only
//                    asymptotically, |f'| -> 1 in the limit)
//   RadicandZero   : the radius f vanishes (pinch point / cone vertex)
enum class EndpointKind { Infinite, PolynomialRoot, Asymptote, Barrier, RadicandZero };

const char* endpoint_kind_name(EndpointKind k);

struct DomainInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  EndpointKind lo_kind = EndpointKind::Infinite;
  EndpointKind hi_kind = EndpointKind::Infinite;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double s) const {
    if (s < lo || (s == lo && !lo_closed)) return false;
    if (s > hi || (s == hi && !hi_closed)) return false;
    return true;
  }
  bool whole_line() const { return std::isinf(lo) && std::isinf(hi); }

  static DomainInterval all() { return {}; }
};

inline const char* endpoint_kind_name(EndpointKind k) {
  switch (k) {
    case EndpointKind::Infinite: return "Infinite";
    case EndpointKind::PolynomialRoot: return "PolynomialRoot";
    case EndpointKind::Asymptote: return "Asymptote";
    case EndpointKind::Barrier: return "Barrier";
    case EndpointKind::RadicandZero: return "RadicandZero";
  }
  return "?";
}

}  // namespace ricci
