#include "ricci/serialize.hpp"

#include <cmath>

namespace ricci {

Json json_number(double v) {
  if (std::isnan(v)) return Json("nan");
  if (std::isinf(v)) return Json(v > 0 ? "inf" : "-inf");
  return Json(v);
}

Json params_to_json(const RicciParams& p) {
  Json j;
  j["a"] = p.a;
  j["b"] = p.b;
  j["c"] = p.c;
  j["d"] = p.d;
  j["branch"] = branch_name(p.branch);
  return j;
}

Json interval_to_json(const DomainInterval& iv) {
  Json j;
  j["lo"] = json_number(iv.lo);
  j["hi"] = json_number(iv.hi);
  j["lo_kind"] = endpoint_kind_name(iv.lo_kind);
  j["hi_kind"] = endpoint_kind_name(iv.hi_kind);
  j["lo_closed"] = iv.lo_closed;
  j["hi_closed"] = iv.hi_closed;
  return j;
}

Json report_to_json(const ClassificationReport& rep) {
  Json j;
  j["params"] = params_to_json(rep.params);
  j["case"] = case_tag_name(rep.case_tag);
  j["k_sign"] = k_sign_name(rep.k_sign);
  j["interval"] = interval_to_json(rep.interval);
  j["complete"] = rep.complete;
  j["marginal"] = rep.marginal;
  if (rep.case_tag == CaseTag::CatenoidalRicci) j["catenoid"] = rep.params.b == 1.0;
  Json desc = Json::object();
  for (const auto& [key, value] : rep.descriptors) desc[key] = json_number(value);
  j["descriptors"] = desc;
  j["notes"] = rep.notes;
  return j;
}

Json validation_to_json(const ValidationReport& rep) {
  Json j;
  j["max_ode_residual"] = json_number(rep.max_ode_residual);
  j["max_ricci_residual_closed"] = json_number(rep.max_ricci_residual_closed);
  j["max_ricci_residual_fd"] = json_number(rep.max_ricci_residual_fd);
  j["max_arclength_violation"] = json_number(rep.max_arclength_violation);
  j["max_K_fd_error"] = json_number(rep.max_K_fd_error);
  j["sign_constant"] = rep.sign_constant;
  j["pass"] = rep.pass;
  j["notes"] = rep.notes;
  return j;
}

Json freeboundary_to_json(const FreeBoundarySolution& sol) {
  Json j;
  j["b"] = sol.b;
  j["rho"] = sol.rho;
  j["neck_radius"] = sol.neck_radius;
  j["residual_boundary"] = json_number(sol.residual_boundary);
  j["residual_conormal_f"] = json_number(sol.residual_conormal_f);
  j["residual_conormal_g"] = json_number(sol.residual_conormal_g);
  j["geodesic_marker"] = sol.geodesic_marker;
  return j;
}

Json profile_to_json(const ProfileCurve& curve) {
  Json j;
  j["params"] = params_to_json(curve.params);
  j["s0_anchor"] = curve.s0_anchor;
  Json rows = Json::array();
  for (const auto& ps : curve.samples) {
    Json r;
    r["s"] = ps.s;
    r["f"] = ps.f;
    r["fp"] = ps.fp;
    r["g"] = ps.g;
    r["K"] = ps.K;
    r["H"] = ps.H ? json_number(*ps.H) : Json("inf");
    r["residual"] = ps.residual;
    rows.push_back(r);
  }
  j["samples"] = rows;
  return j;
}

}  // namespace ricci
