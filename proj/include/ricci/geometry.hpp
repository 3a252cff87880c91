#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ricci/classify.hpp"
#include "ricci/curve.hpp"
#include "ricci/interval.hpp"
#include "ricci/params.hpp"

namespace ricci {

// Height of the generating curve: g(s) = Int_{s0}^{s} sqrt(1 - f'(z)^2) dz by
// adaptive quadrature (target absolute error abs_tol). Ends where |f'| -> 1
// are opened with the substitution z = end -+ u^2 so the square-root zero of
// the integrand does not stall the refinement.
double height_g(const ProfileFn& fn, double s0, double s, double abs_tol = 1e-10);

// n samples of the profile on the (finite) interval, cosine-clustered toward
// the endpoints. g is anchored at s = 0 when the interval contains it, else
// at the midpoint. Open endpoints are inset by 1e-9 of the span.
ProfileCurve sample_profile(const RicciParams& p, const DomainInterval& interval, std::size_t n);
ProfileCurve sample_profile(const ResolvedProfile& rp, const DomainInterval& interval,
                            std::size_t n);

struct SurfaceMesh {
  std::size_t n_s = 0, n_theta = 0;
  std::vector<std::array<double, 3>> vertices;       // row-major: sample-major, angle-minor
  std::vector<std::array<std::uint32_t, 4>> quads;   // 0-based, theta seam wraps
};

// Revolves the profile: vertex(i,j) = (f_i cos th_j, f_i sin th_j, g_i) with
// th_j = 2 pi j / n_theta.
SurfaceMesh build_mesh(const ProfileCurve& curve, std::size_t n_theta);

enum class ExportFormat { Obj, Csv, Json };

// Shortest round-trip decimal formatting (std::to_chars).
std::string format_double(double v);

void write_obj(const SurfaceMesh& mesh, std::ostream& os);
void write_csv(const ProfileCurve& curve, std::ostream& os);

// Byte-stream exporters; throw UnsupportedFormat on a mismatched pairing
// (meshes go to OBJ, profiles to CSV or JSON).
std::string export_mesh(const SurfaceMesh& mesh, ExportFormat format);
std::string export_profile(const ProfileCurve& curve, ExportFormat format);

// Parses a profile CSV produced by write_csv (header s,f,fp,g,K,H,residual).
ProfileCurve read_csv(std::istream& is, const RicciParams& params);

}  // namespace ricci
