// Command-line front end: classify / profile / mesh / freeboundary / validate.
// Exit codes: 0 ok, 1 validation failure, 2 inadmissible parameters or bad
// usage, 3 domain or numerical error.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ricci/classify.hpp"
#include "ricci/errors.hpp"
#include "ricci/freeboundary.hpp"
#include "ricci/geometry.hpp"
#include "ricci/jobconfig.hpp"
#include "ricci/oracle.hpp"
#include "ricci/paramgen.hpp"
#include "ricci/profile.hpp"
#include "ricci/serialize.hpp"

namespace {

using ricci::Json;

struct ParamFlags {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  std::string branch = "plus";
  std::optional<double> t0;

  ricci::RicciParams to_params() const {
    ricci::RicciParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    if (branch == "plus")
      p.branch = ricci::Branch::Plus;
    else if (branch == "minus")
      p.branch = ricci::Branch::Minus;
    else
      ricci::fail(ricci::Errc::BadParameters, "branch must be 'plus' or 'minus'");
    return p;
  }
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf, bool require_abc = true) {
  auto* a = cmd->add_option("--a", pf.a, "ODE constant a");
  auto* b = cmd->add_option("--b", pf.b, "ODE constant b");
  auto* c = cmd->add_option("--c", pf.c, "ODE constant c");
  cmd->add_option("--d", pf.d, "integration constant d");
  cmd->add_option("--branch", pf.branch, "sign branch of a f + c for b = 0 (plus|minus)")
      ->check(CLI::IsMember({"plus", "minus"}));
  cmd->add_option_function<double>(
      "--t0", [&pf](double v) { pf.t0 = v; },
      "gauge point of the general-case chart (default: picked deterministically)");
  if (require_abc) {
    a->required();
    b->required();
    c->required();
  }
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) ricci::fail(ricci::Errc::BadParameters, "cannot open output file: " + path);
  out << bytes;
}

// Sampling window: the classified interval with infinite ends clamped.
ricci::DomainInterval sampling_window(const ricci::ClassificationReport& rep, double span,
                                      std::optional<double> smin, std::optional<double> smax,
                                      bool force) {
  ricci::DomainInterval iv = rep.interval;
  double lo = iv.lo, hi = iv.hi;
  if (std::isinf(lo) && std::isinf(hi)) {
    lo = -span;
    hi = span;
  } else if (std::isinf(lo)) {
    lo = hi - 2.0 * span;
  } else if (std::isinf(hi)) {
    hi = lo + 2.0 * span;
  }
  auto slack = [](double v) { return 1e-9 * (1.0 + std::abs(v)); };
  if (smin) {
    if (!force && *smin < iv.lo - slack(iv.lo))
      ricci::fail(ricci::Errc::OutsideDomain,
                  "--smin below the classified bound " + ricci::format_double(iv.lo) +
                      " (use --force to override)");
    lo = *smin;
  }
  if (smax) {
    if (!force && *smax > iv.hi + slack(iv.hi))
      ricci::fail(ricci::Errc::OutsideDomain,
                  "--smax above the classified bound " + ricci::format_double(iv.hi) +
                      " (use --force to override)");
    hi = *smax;
  }
  ricci::DomainInterval out;
  out.lo = lo;
  out.hi = hi;
  out.lo_kind = lo == iv.lo ? iv.lo_kind : ricci::EndpointKind::Infinite;
  out.hi_kind = hi == iv.hi ? iv.hi_kind : ricci::EndpointKind::Infinite;
  out.lo_closed = lo == iv.lo ? iv.lo_closed : true;
  out.hi_closed = hi == iv.hi ? iv.hi_closed : true;
  if (!(out.lo < out.hi))
    ricci::fail(ricci::Errc::BadParameters, "empty sampling interval");
  return out;
}

int cmd_classify(const ParamFlags& pf) {
  const ricci::ClassificationReport rep = ricci::classify(pf.to_params(), pf.t0);
  std::cout << ricci::report_to_json(rep).dump(2) << '\n';
  return 0;
}

int cmd_profile(const ParamFlags& pf, const ricci::JobConfig& cfg, std::optional<double> smin,
                std::optional<double> smax, unsigned n, bool force, const std::string& out,
                bool json) {
  const ricci::ResolvedProfile rp = ricci::resolve_profile(pf.to_params(), pf.t0);
  const ricci::DomainInterval win = sampling_window(rp.report, cfg.span, smin, smax, force);
  const ricci::ProfileCurve curve = ricci::sample_profile(rp, win, n);
  const std::string csv = ricci::export_profile(curve, ricci::ExportFormat::Csv);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_file(out, csv);
    if (json) {
      Json j;
      j["out"] = out;
      j["rows"] = curve.samples.size();
      j["interval"] = ricci::interval_to_json(win);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "wrote " << curve.samples.size() << " samples to " << out << '\n';
    }
  }
  return 0;
}

int cmd_mesh(const ParamFlags& pf, const ricci::JobConfig& cfg, std::optional<double> smin,
             std::optional<double> smax, unsigned n, unsigned ntheta, bool force,
             const std::string& out, bool json) {
  const ricci::ResolvedProfile rp = ricci::resolve_profile(pf.to_params(), pf.t0);
  const ricci::DomainInterval win = sampling_window(rp.report, cfg.span, smin, smax, force);
  const ricci::ProfileCurve curve = ricci::sample_profile(rp, win, n);
  const ricci::SurfaceMesh mesh = ricci::build_mesh(curve, ntheta);
  write_file(out, ricci::export_mesh(mesh, ricci::ExportFormat::Obj));
  if (json) {
    Json j;
    j["out"] = out;
    j["vertices"] = mesh.vertices.size();
    j["faces"] = mesh.quads.size();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "wrote " << mesh.vertices.size() << " vertices, " << mesh.quads.size()
              << " faces to " << out << '\n';
  }
  return 0;
}

std::string sweep_csv(const std::vector<ricci::FreeBoundarySolution>& sols) {
  std::ostringstream os;
  os << "b,rho,neck_radius,residual_boundary,residual_conormal_f,residual_conormal_g,geodesic\n";
  for (const auto& s : sols) {
    os << ricci::format_double(s.b) << ',' << ricci::format_double(s.rho) << ','
       << ricci::format_double(s.neck_radius) << ',' << ricci::format_double(s.residual_boundary)
       << ',' << ricci::format_double(s.residual_conormal_f) << ','
       << ricci::format_double(s.residual_conormal_g) << ',' << (s.geodesic_marker ? 1 : 0)
       << '\n';
  }
  return os.str();
}

int cmd_freeboundary(std::optional<double> b_single, const std::string& sweep_list,
                     const std::string& out, const std::string& mesh_out, unsigned mesh_n,
                     unsigned ntheta, bool audit, unsigned threads) {
  std::vector<double> bs;
  if (b_single) bs.push_back(*b_single);
  if (!sweep_list.empty()) {
    std::stringstream ss(sweep_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) bs.push_back(std::stod(tok));
  }
  if (bs.empty())
    ricci::fail(ricci::Errc::BadParameters, "need --b or --sweep");

  const auto sols = ricci::family_sweep(bs, threads);

  if (!mesh_out.empty()) {
    std::filesystem::create_directories(mesh_out);
    for (const auto& s : sols) {
      if (s.geodesic_marker) continue;
      const ricci::ProfileCurve curve = ricci::freeboundary_profile(s, mesh_n);
      const ricci::SurfaceMesh mesh = ricci::build_mesh(curve, ntheta);
      const std::string path =
          (std::filesystem::path(mesh_out) / ("sigma_b_" + ricci::format_double(s.b) + ".obj"))
              .string();
      write_file(path, ricci::export_mesh(mesh, ricci::ExportFormat::Obj));
    }
  }

  Json j = Json::array();
  for (const auto& s : sols) {
    Json js = ricci::freeboundary_to_json(s);
    if (audit && !s.geodesic_marker) {
      const ricci::GaussBonnetAudit gb = ricci::gauss_bonnet_audit(s);
      Json ja;
      ja["area_integral"] = ricci::json_number(gb.area_integral);
      ja["boundary_length"] = ricci::json_number(gb.boundary_length);
      ja["defect"] = ricci::json_number(gb.area_integral + gb.boundary_length);
      js["gauss_bonnet"] = ja;
    }
    j.push_back(js);
  }
  if (!out.empty()) {
    if (out.size() >= 5 && out.substr(out.size() - 5) == ".json")
      write_file(out, j.dump(2) + "\n");
    else
      write_file(out, sweep_csv(sols));
  }
  std::cout << (j.size() == 1 ? j[0] : j).dump(2) << '\n';
  return 0;
}

int cmd_validate(const CLI::App* cmd, const ParamFlags& pf, const ricci::JobConfig& cfg,
                 const std::string& input, unsigned random_n, std::uint64_t seed, unsigned n,
                 unsigned threads) {
  using namespace ricci;
  if (random_n > 0) {
    // Round-robin over the parameter families, one validation per draw.
    const ParamFamily fams[] = {ParamFamily::A0Negative,     ParamFamily::A0NegativeBounded,
                                ParamFamily::A0Positive,     ParamFamily::B0NegativePlus,
                                ParamFamily::B0NegativeMinus, ParamFamily::B0PositivePlus,
                                ParamFamily::B0PositiveMinus, ParamFamily::General};
    std::vector<RicciParams> draws;
    ParamRng rng(seed);
    for (unsigned i = 0; i < random_n; ++i) draws.push_back(draw_params(fams[i % 8], rng));

    std::vector<Json> results(draws.size());
    std::vector<std::exception_ptr> errors(draws.size());
    std::atomic<std::size_t> next{0};
    auto work = [&](std::size_t i) {
      try {
        const ResolvedProfile rp = resolve_profile(draws[i]);
        const DomainInterval win =
            sampling_window(rp.report, cfg.span, std::nullopt, std::nullopt, false);
        const ProfileCurve curve = sample_profile(rp, win, n);
        const ValidationReport vr = validate_curve(curve);
        Json j;
        j["params"] = params_to_json(draws[i]);
        j["case"] = case_tag_name(rp.report.case_tag);
        j["report"] = validation_to_json(vr);
        results[i] = j;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    const unsigned pool =
        std::min<std::size_t>(threads ? threads : default_thread_count(), draws.size());
    if (pool <= 1) {
      for (std::size_t i = 0; i < draws.size(); ++i) work(i);
    } else {
      std::vector<std::thread> workers;
      for (unsigned w = 0; w < pool; ++w)
        workers.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < draws.size(); i = next.fetch_add(1))
            work(i);
        });
      for (auto& th : workers) th.join();
    }
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
    bool all_pass = true;
    Json out = Json::array();
    for (auto& r : results) {
      all_pass = all_pass && r["report"]["pass"].get<bool>();
      out.push_back(std::move(r));
    }
    Json top;
    top["runs"] = out.size();
    top["pass"] = all_pass;
    top["results"] = out;
    std::cout << top.dump(2) << '\n';
    return all_pass ? 0 : 1;
  }

  ProfileCurve curve;
  Json extra = Json::object();
  bool comparison_ok = true;
  if (!input.empty()) {
    if (cmd->count("--a") == 0 || cmd->count("--b") == 0 || cmd->count("--c") == 0)
      fail(Errc::BadParameters, "--input validation needs --a --b --c (--d) for the curve");
    std::ifstream in(input);
    if (!in) fail(Errc::BadParameters, "cannot open input: " + input);
    curve = read_csv(in, pf.to_params());
    // Direct comparison against the closed forms at the CSV grid. Heights are
    // compared relative to the first row (the anchor is not recorded in CSV).
    const ResolvedProfile rp = resolve_profile(curve.params);
    double max_f_dev = 0.0, max_g_dev = 0.0;
    std::size_t worst_row = 0;
    double s_prev = curve.samples.front().s;
    double g_acc = curve.samples.front().g;
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
      const auto& ps = curve.samples[i];
      const double f_ref = rp.eval(ps.s).f;
      if (std::abs(ps.f - f_ref) > max_f_dev) {
        max_f_dev = std::abs(ps.f - f_ref);
        worst_row = i;
      }
      if (i > 0) {
        g_acc += height_g(rp.eval, s_prev, ps.s, 1e-11);
        max_g_dev = std::max(max_g_dev, std::abs(ps.g - g_acc));
        s_prev = ps.s;
      }
    }
    extra["max_f_deviation"] = json_number(max_f_dev);
    extra["max_g_deviation"] = json_number(max_g_dev);
    if (max_f_dev > 1e-8 * (1.0 + std::abs(curve.samples[worst_row].f))) {
      comparison_ok = false;
      extra["failing_field"] = "f";
      extra["failing_row"] = worst_row;
    } else if (max_g_dev > 1e-6) {
      comparison_ok = false;
      extra["failing_field"] = "g";
    }
  } else {
    const ResolvedProfile rp = resolve_profile(pf.to_params(), pf.t0);
    const DomainInterval win =
        sampling_window(rp.report, cfg.span, std::nullopt, std::nullopt, false);
    curve = sample_profile(rp, win, n);
  }
  const ValidationReport vr = validate_curve(curve);
  Json j = validation_to_json(vr);
  for (auto& [k, v] : extra.items()) j[k] = v;
  const bool pass = vr.pass && comparison_ok;
  j["pass"] = pass;
  std::cout << j.dump(2) << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotational Ricci surfaces: classification, profiles, meshes, free-boundary "
               "family, validation"};
  app.require_subcommand(1);

  std::string config_path;
  unsigned threads = 0;
  app.add_option("--config", config_path, "key = value config file with defaults");
  app.add_option("--threads", threads, "worker pool size (or RICCI_ROT_THREADS)");

  ParamFlags pf_classify, pf_profile, pf_mesh, pf_validate;
  std::optional<double> smin_p, smax_p, smin_m, smax_m, fb_b;
  unsigned n_profile = 0, n_mesh = 0, ntheta_mesh = 0, mesh_n_fb = 129, ntheta_fb = 64;
  unsigned random_n = 0, n_validate = 0;
  std::uint64_t seed = 0;
  bool force_p = false, force_m = false, json_p = false, json_m = false, audit = false;
  std::string out_profile, out_mesh = "mesh.obj", out_fb, mesh_out_fb, input_validate;
  std::string sweep_list;

  CLI::App* c_classify = app.add_subcommand("classify", "classify parameters, report JSON");
  add_param_flags(c_classify, pf_classify);

  CLI::App* c_profile = app.add_subcommand("profile", "sample a generating curve to CSV");
  add_param_flags(c_profile, pf_profile);
  c_profile->add_option_function<double>("--smin", [&](double v) { smin_p = v; }, "window start");
  c_profile->add_option_function<double>("--smax", [&](double v) { smax_p = v; }, "window end");
  c_profile->add_option("--n", n_profile, "sample count (default from config)");
  c_profile->add_option("--out", out_profile, "output CSV path (default stdout)");
  c_profile->add_flag("--force", force_p, "allow windows beyond the classified bound");
  c_profile->add_flag("--json", json_p, "machine-readable summary");

  CLI::App* c_mesh = app.add_subcommand("mesh", "revolve a profile into an OBJ mesh");
  add_param_flags(c_mesh, pf_mesh);
  c_mesh->add_option_function<double>("--smin", [&](double v) { smin_m = v; }, "window start");
  c_mesh->add_option_function<double>("--smax", [&](double v) { smax_m = v; }, "window end");
  c_mesh->add_option("--n", n_mesh, "profile sample count");
  c_mesh->add_option("--ntheta", ntheta_mesh, "angular resolution");
  c_mesh->add_option("--out", out_mesh, "output OBJ path");
  c_mesh->add_flag("--force", force_m, "allow windows beyond the classified bound");
  c_mesh->add_flag("--json", json_m, "machine-readable summary");

  CLI::App* c_fb = app.add_subcommand("freeboundary",
                                      "free-boundary family in the unit ball");
  c_fb->add_option_function<double>("--b", [&](double v) { fb_b = v; }, "single b in (0,1]");
  c_fb->add_option("--sweep", sweep_list, "comma-separated b values in [0,1]");
  c_fb->add_option("--out", out_fb, "write CSV (or .json) sweep results");
  c_fb->add_option("--mesh-out", mesh_out_fb, "directory for per-b OBJ meshes");
  c_fb->add_option("--mesh-n", mesh_n_fb, "profile samples per mesh");
  c_fb->add_option("--ntheta", ntheta_fb, "angular resolution of meshes");
  c_fb->add_flag("--audit", audit, "include the total-curvature audit");

  CLI::App* c_validate = app.add_subcommand("validate", "finite-difference validation battery");
  add_param_flags(c_validate, pf_validate, /*require_abc=*/false);
  c_validate->add_option("--input", input_validate, "profile CSV to validate (needs --a --b --c)");
  c_validate->add_option("--random", random_n, "validate N random parameter sets");
  c_validate->add_option("--seed", seed, "seed for --random");
  c_validate->add_option("--n", n_validate, "samples per curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ricci::JobConfig cfg;
    if (!config_path.empty()) cfg = ricci::JobConfig::from_file(config_path);
    if (threads == 0) threads = cfg.threads;
    if (seed == 0) seed = cfg.seed;
    if (n_profile == 0) n_profile = cfg.n;
    if (n_mesh == 0) n_mesh = cfg.n;
    if (n_validate == 0) n_validate = std::max(cfg.n, 257u);
    if (ntheta_mesh == 0) ntheta_mesh = cfg.ntheta;

    if (c_classify->parsed()) return cmd_classify(pf_classify);
    if (c_profile->parsed())
      return cmd_profile(pf_profile, cfg, smin_p, smax_p, n_profile, force_p, out_profile,
                         json_p);
    if (c_mesh->parsed())
      return cmd_mesh(pf_mesh, cfg, smin_m, smax_m, n_mesh, ntheta_mesh, force_m, out_mesh,
                      json_m);
    if (c_fb->parsed())
      return cmd_freeboundary(fb_b, sweep_list, out_fb, mesh_out_fb, mesh_n_fb, ntheta_fb, audit,
                              threads);
    if (c_validate->parsed())
      return cmd_validate(c_validate, pf_validate, cfg, input_validate, random_n, seed,
                          n_validate, threads);
  } catch (const ricci::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ricci::Errc::Inadmissible ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
