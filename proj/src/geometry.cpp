#include "ricci/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/numerics/quadrature.hpp"
#include "ricci/serialize.hpp"

namespace ricci {

namespace {

double integrand_gap(const ProfileFn& fn, double s) {
  const ProfilePoint p = fn(s);
  return 1.0 - p.fp * p.fp;
}

// True when the height integrand has square-root structure at this end.
bool singular_end(const ProfileFn& fn, double s) {
  double gap;
  try {
    gap = integrand_gap(fn, s);
  } catch (const Error&) {
    return true;  // endpoint itself not evaluable; open it
  }
  return gap < 1e-3;
}

double height_between(const ProfileFn& fn, double lo, double hi, bool open_lo, bool open_hi,
                      double abs_tol) {
  auto psi = [&fn](double z) {
    const ProfilePoint p = fn(z);
    const double gap = 1.0 - p.fp * p.fp;
    return gap > 0.0 ? std::sqrt(gap) : 0.0;
  };
  return num::integrate_endpoint_opened(psi, lo, hi, open_lo, open_hi, abs_tol);
}

}  // namespace

double height_g(const ProfileFn& fn, double s0, double s, double abs_tol) {
  if (s == s0) return 0.0;
  const double lo = std::min(s0, s), hi = std::max(s0, s);
  double value;
  try {
    value = height_between(fn, lo, hi, singular_end(fn, lo), singular_end(fn, hi), abs_tol);
  } catch (const Error& e) {
    if (e.code() == Errc::NumericalFailure) throw;
    fail(Errc::OutsideDomain, std::string("height integrand not evaluable: ") + e.what());
  }
  return s >= s0 ? value : -value;
}

ProfileCurve sample_profile(const RicciParams& p, const DomainInterval& interval, std::size_t n) {
  return sample_profile(resolve_profile(p), interval, n);
}

ProfileCurve sample_profile(const ResolvedProfile& rp, const DomainInterval& interval,
                            std::size_t n) {
  if (n < 2) fail(Errc::BadParameters, "need at least two samples");
  if (std::isinf(interval.lo) || std::isinf(interval.hi))
    fail(Errc::BadParameters, "sampling needs a finite interval");
  double lo = interval.lo, hi = interval.hi;
  if (!(lo < hi)) fail(Errc::BadParameters, "empty interval");
  const double span = hi - lo;
  if (!interval.lo_closed) lo += 1e-9 * span;
  if (!interval.hi_closed) hi -= 1e-9 * span;

  const RicciParams& p = rp.report.params;
  const ProfileFn& fn = rp.eval;

  // Cosine clustering toward both endpoints.
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  std::vector<double> grid(n);
  for (std::size_t j = 0; j < n; ++j)
    grid[j] = mid - half * std::cos(std::numbers::pi * double(j) / double(n - 1));
  grid.front() = lo;
  grid.back() = hi;

  ProfileCurve curve;
  curve.params = p;
  curve.s0_anchor = (lo <= 0.0 && 0.0 <= hi) ? 0.0 : mid;
  curve.samples.resize(n);

  const bool open_lo = singular_end(fn, lo);
  const bool open_hi = singular_end(fn, hi);
  const double seg_tol = 1e-12;

  double g = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = grid[j];
    if (j > 0)
      g += height_between(fn, grid[j - 1], s, open_lo && j == 1, open_hi && j == n - 1, seg_tol);
    const ProfilePoint pt = fn(s);
    ProfileSample ps;
    ps.s = s;
    ps.f = pt.f;
    ps.fp = pt.fp;
    ps.g = g;
    const CurvatureSample cs = curvature_sample(p, s, pt.f);
    ps.K = cs.K;
    ps.residual = cs.residual;
    if (!cs.horizontal) ps.H = cs.H;
    curve.samples[j] = ps;
  }

  // Shift so g vanishes at the anchor.
  const double anchor = curve.s0_anchor;
  const double g_anchor =
      anchor == lo ? 0.0
                   : height_between(fn, lo, anchor, open_lo, open_hi && anchor == hi, seg_tol);
  for (auto& ps : curve.samples) ps.g -= g_anchor;
  return curve;
}

SurfaceMesh build_mesh(const ProfileCurve& curve, std::size_t n_theta) {
  if (n_theta < 3) fail(Errc::BadParameters, "need n_theta >= 3");
  const std::size_t n_s = curve.samples.size();
  if (n_s < 2) fail(Errc::BadParameters, "need at least two profile samples");
  SurfaceMesh mesh;
  mesh.n_s = n_s;
  mesh.n_theta = n_theta;
  mesh.vertices.reserve(n_s * n_theta);
  for (const auto& ps : curve.samples) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double th = 2.0 * std::numbers::pi * double(j) / double(n_theta);
      mesh.vertices.push_back({ps.f * std::cos(th), ps.f * std::sin(th), ps.g});
    }
  }
  mesh.quads.reserve((n_s - 1) * n_theta);
  for (std::size_t i = 0; i + 1 < n_s; ++i) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      const std::uint32_t jn = static_cast<std::uint32_t>((j + 1) % n_theta);
      mesh.quads.push_back({static_cast<std::uint32_t>(i * n_theta + j),
                            static_cast<std::uint32_t>((i + 1) * n_theta + j),
                            static_cast<std::uint32_t>((i + 1) * n_theta + jn),
                            static_cast<std::uint32_t>(i * n_theta + jn)});
    }
  }
  return mesh;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_obj(const SurfaceMesh& mesh, std::ostream& os) {
  for (const auto& v : mesh.vertices)
    os << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2])
       << '\n';
  for (const auto& q : mesh.quads)
    os << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
}

void write_csv(const ProfileCurve& curve, std::ostream& os) {
  os << "s,f,fp,g,K,H,residual\n";
  for (const auto& ps : curve.samples) {
    os << format_double(ps.s) << ',' << format_double(ps.f) << ',' << format_double(ps.fp) << ','
       << format_double(ps.g) << ',' << format_double(ps.K) << ','
       << (ps.H ? format_double(*ps.H) : std::string("inf")) << ',' << format_double(ps.residual)
       << '\n';
  }
}

std::string export_mesh(const SurfaceMesh& mesh, ExportFormat format) {
  if (format != ExportFormat::Obj)
    fail(Errc::UnsupportedFormat, "meshes export to OBJ only");
  std::ostringstream os;
  write_obj(mesh, os);
  return os.str();
}

std::string export_profile(const ProfileCurve& curve, ExportFormat format) {
  if (format == ExportFormat::Csv) {
    std::ostringstream os;
    write_csv(curve, os);
    return os.str();
  }
  if (format == ExportFormat::Json) return profile_to_json(curve).dump(2) + "\n";
  fail(Errc::UnsupportedFormat, "profiles export to CSV or JSON");
}

ProfileCurve read_csv(std::istream& is, const RicciParams& params) {
  ProfileCurve curve;
  curve.params = params;
  std::string line;
  if (!std::getline(is, line)) fail(Errc::BadParameters, "empty CSV");
  if (line != "s,f,fp,g,K,H,residual")
    fail(Errc::BadParameters, "unexpected CSV header: " + line);
  auto parse = [](const std::string& tok) {
    if (tok == "inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    double v;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      fail(Errc::BadParameters, "bad CSV number: " + tok);
    return v;
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string tok;
    std::vector<double> row;
    while (std::getline(ls, tok, ',')) row.push_back(parse(tok));
    if (row.size() != 7) fail(Errc::BadParameters, "expected 7 CSV columns");
    ProfileSample ps;
    ps.s = row[0];
    ps.f = row[1];
    ps.fp = row[2];
    ps.g = row[3];
    ps.K = row[4];
    if (std::isfinite(row[5])) ps.H = row[5];
    ps.residual = row[6];
    curve.samples.push_back(ps);
  }
  if (curve.samples.empty()) fail(Errc::BadParameters, "CSV has no data rows");
  return curve;
}

}  // namespace ricci
