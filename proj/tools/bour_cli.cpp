// Command-line frontend: list the surface catalog, evaluate closed-form
// geometry at a point, verify closed forms against the finite-difference
// oracle, export meshes, and reproduce the published figures.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 I/O failure. stdout carries reports (deterministic for identical
// invocations); diagnostics go to stderr.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bour/bour_maximal.hpp"
#include "bour/catalog.hpp"
#include "bour/detail/closed_forms.hpp"
#include "bour/diffgeo.hpp"
#include "bour/errors.hpp"
#include "bour/meshio.hpp"
#include "bour/patches.hpp"
#include "bour/timelike.hpp"
#include "bour/weierstrass.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string g9(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v + 0.0);
  return buf;
}

std::string vec9(const bour::Vec3& v) {
  return "(" + g9(v.x) + ", " + g9(v.y) + ", " + g9(v.z) + ")";
}

std::string range9(const bour::Interval& iv) {
  return "[" + g9(iv.lo) + ", " + g9(iv.hi) + "]";
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '/' || c == ' ') c = '-';
  return s;
}

int env_threads() {
  const char* v = std::getenv("BOUR_THREADS");
  if (!v) return 0;
  return std::max(0, std::atoi(v));
}

struct Options {
  std::string family = "spacelike";
  double m = 3.0;
  std::string label;
  bool cartesian = false;
  bool conjugate = false;
  bool all = false;
  bool fp64 = false;
  std::string grid = "";
  std::string format = "obj";
  std::string plane = "xy";
  std::string out;
  std::string out_dir = ".";
  double tolerance = 1e-6;
  double step = 1e-5;
};

std::pair<int, int> parse_grid(const std::string& s, int def_ns, int def_nt) {
  if (s.empty()) return {def_ns, def_nt};
  const auto x = s.find('x');
  if (x == std::string::npos)
    throw bour::DomainError(bour::ErrorKind::DomainEdge,
                            "grid must look like 64x64");
  const int ns = std::atoi(s.substr(0, x).c_str());
  const int nt = std::atoi(s.substr(x + 1).c_str());
  if (ns < 2 || nt < 2)
    throw bour::DomainError(bour::ErrorKind::DomainEdge, "grid dims must be >= 2");
  return {ns, nt};
}

bour::Family parse_family(const std::string& f) {
  if (f == "spacelike") return bour::Family::Spacelike;
  if (f == "timelike") return bour::Family::Timelike;
  throw bour::DomainError(bour::ErrorKind::DomainEdge,
                          "family must be spacelike or timelike");
}

// Resolve a catalog entry from --label / --family / --m / --cartesian.
// Falls back to a synthetic entry (default domain) for non-catalog m.
bour::BourParams resolve_entry(const Options& opt) {
  if (!opt.label.empty()) {
    auto e = bour::find_by_label(opt.label);
    if (!e)
      throw bour::DomainError(bour::ErrorKind::DomainEdge,
                              "unknown catalog label '" + opt.label + "'");
    return *e;
  }
  const bour::Family fam = parse_family(opt.family);
  const auto par = opt.cartesian ? bour::Parametrization::Cartesian
                                 : bour::Parametrization::Polar;
  if (auto e = bour::find_by_value(fam, opt.m, par)) return *e;
  if (opt.cartesian && std::abs(opt.m - 3.0) > 1e-12)
    throw bour::DomainError(bour::ErrorKind::DomainEdge,
                            "--cartesian applies to the m = 3 surfaces");
  bour::BourParams e;
  e.label = (fam == bour::Family::Timelike ? "t-b" : "b") + g9(opt.m);
  e.family = fam;
  e.m = opt.m;
  e.r_range = {-1.0, 1.0};
  e.theta_range = opt.cartesian ? bour::Interval{-1.0, 1.0}
                                : bour::Interval{0.0, 3.14159265358979323846};
  e.parametrization = par;
  e.data = "custom";
  return e;
}

void guard_m(double m) {
  bour::detail::guard_family_value(m);  // throws ExcludedExponent
}

// ---------------------------------------------------------------------------
// list

int cmd_list() {
  auto row = [](const std::string& a, const std::string& b, const std::string& c,
                const std::string& d, const std::string& e, const std::string& f,
                const std::string& g) {
    std::printf("%-14s %-10s %-10s %-22s %-26s %-26s %s\n", a.c_str(), b.c_str(),
                c.c_str(), d.c_str(), e.c_str(), f.c_str(), g.c_str());
  };
  row("label", "family", "m", "data", "r-range", "theta-range", "figures");
  for (const auto& e : bour::full_catalog()) {
    std::string figs;
    for (std::size_t i = 0; i < e.figures.size(); ++i)
      figs += (i ? "," : "") + std::to_string(e.figures[i]);
    const char* rname = e.parametrization == bour::Parametrization::Cartesian
                            ? "u-range " : "";
    row(e.label, bour::to_string(e.family), g9(e.m), e.data,
        std::string(rname) + range9(e.r_range), range9(e.theta_range), figs);
  }
  std::printf("total: %zu surfaces\n", bour::full_catalog().size());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct ClosedPoint {
  bour::Vec3 position;
  double E, F, G, L, M, N;
  bour::Vec3 gauss;
  double K, H;
  std::optional<double> k_alt;
};

ClosedPoint eval_closed(const bour::BourParams& e, double s, double t) {
  ClosedPoint out{};
  if (e.family == bour::Family::Spacelike) {
    if (e.parametrization == bour::Parametrization::Cartesian) {
      const double u = s, v = t, r2 = u * u + v * v;
      const double q = r2 - 1.0;
      out.position = bour::b3_cartesian(u, v);
      out.E = out.G = r2 * q * q;
      out.F = 0.0;
      out.L = 2.0 * u, out.M = -2.0 * v, out.N = -2.0 * u;
      out.gauss = {2.0 * u / q, 2.0 * v / q, (r2 + 1.0) / q};
      out.K = 4.0 / (r2 * q * q * q * q);
      out.H = 0.0;
    } else {
      out.position = bour::bour_closed_form(e.m, {s, t});
      const auto ff = bour::first_form(e.m, s);
      const auto sf = bour::second_form(e.m, s, t);
      out.E = ff.E, out.F = ff.F, out.G = ff.G;
      out.L = sf.L, out.M = sf.M, out.N = sf.N;
      out.gauss = bour::gauss_map(s, t);
      const auto kc = bour::curvatures(e.m, s);
      out.K = kc.K, out.H = kc.H;
    }
  } else {
    if (e.parametrization == bour::Parametrization::Cartesian) {
      const double u = s, v = t;
      const auto data = bour::NullData::bour(e.m);
      out.position = bour::magid_immersion(data, {u, v});
      const double uv = u * v, w = 1.0 + uv;
      out.E = 0.0, out.G = 0.0;
      out.F = 2.0 * bour::detail::real_pow(uv, e.m - 2.0) * w * w;
      out.L = -2.0 * bour::detail::real_pow(u, e.m - 2.0);
      out.M = 0.0;
      out.N = -2.0 * bour::detail::real_pow(v, e.m - 2.0);
      out.gauss = {(u - v) / w, (u + v) / w, (uv - 1.0) / w};
      out.K = -bour::detail::real_pow(uv, 2.0 - e.m) / (w * w * w * w);
      out.H = 0.0;
    } else {
      const auto data = bour::NullData::bour(e.m);
      out.position = bour::magid_immersion(data, bour::to_null({s, t}));
      const auto ff = bour::timelike_first_form(e.m, {s, t});
      const auto sf = bour::timelike_second_form(e.m, {s, t});
      out.E = ff.E, out.F = ff.F, out.G = ff.G;
      out.L = sf.L, out.M = sf.M, out.N = sf.N;
      out.gauss = bour::timelike_gauss_map(s, t);
      const auto kc = bour::timelike_curvatures(e.m, {s, t});
      out.K = kc.K, out.H = kc.H;
      out.k_alt = kc.K_polar_formula;
    }
  }
  return out;
}

int cmd_eval(const Options& opt, double s, double t) {
  const auto e = resolve_entry(opt);
  guard_m(e.m);
  const auto p = eval_closed(e, s, t);
  std::printf("surface: %s (%s, m = %s, %s parameters)\n", e.label.c_str(),
              bour::to_string(e.family), g9(e.m).c_str(),
              e.parametrization == bour::Parametrization::Cartesian ? "cartesian"
                                                                    : "polar");
  std::printf("point: (%s, %s)\n", g9(s).c_str(), g9(t).c_str());
  std::printf("position: %s\n", vec9(p.position).c_str());
  std::printf("E: %s\nF: %s\nG: %s\n", g9(p.E).c_str(), g9(p.F).c_str(),
              g9(p.G).c_str());
  std::printf("L: %s\nM: %s\nN: %s\n", g9(p.L).c_str(), g9(p.M).c_str(),
              g9(p.N).c_str());
  std::printf("gauss: %s\n", vec9(p.gauss).c_str());
  std::printf("K: %s\n", g9(p.K).c_str());
  if (p.k_alt)
    std::printf("K-polar-print: %s\n", g9(*p.k_alt).c_str());
  std::printf("H: %s\n", g9(p.H).c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyContext {
  bour::OracleConfig cfg;
  int ns, nt;
  bour::Precision precision;
  std::map<std::string, bour::ScanReport> reports;

  const bour::ScanReport& scan_entry(const bour::BourParams& e) {
    auto it = reports.find(e.label);
    if (it != reports.end()) return it->second;
    auto patch = bour::make_patch(e);
    auto rep = bour::scan(patch, ns, nt, cfg, precision);
    return reports.emplace(e.label, std::move(rep)).first->second;
  }
};

bool surface_pass(const bour::ScanReport& r, double tol) {
  const bool k_ok = r.max_k_rel < 100.0 * tol;
  return r.h_pass(tol) && r.det_sign_uniform() && k_ok;
}

void print_report_row(const bour::BourParams& e, const bour::ScanReport& r,
                      double tol) {
  const char* det = r.det_pos > 0 && r.det_neg == 0   ? "+"
                    : r.det_neg > 0 && r.det_pos == 0 ? "-"
                                                      : "mixed";
  std::printf("%-14s %-10s %-6s %6d %6d %6d  %-5s %-12s %-12s %-12s %s\n",
              e.label.c_str(), bour::to_string(e.family), g9(e.m).c_str(),
              r.nodes_total, r.nodes_ok, r.nodes_h_certified, det,
              g9(r.max_abs_h).c_str(), g9(r.max_k_rel).c_str(),
              g9(r.max_gauss_component).c_str(),
              surface_pass(r, tol) ? "pass" : "FAIL");
}

void print_adjudications(VerifyContext& ctx) {
  const auto b3c = *bour::find_by_label("b3-cartesian");
  const auto b3 = *bour::find_by_label("b3");
  const auto tb3 = *bour::find_by_label("t-b3");
  const auto& rc = ctx.scan_entry(b3c);
  const auto& rp = ctx.scan_entry(b3);
  const auto& rt = ctx.scan_entry(tb3);

  std::printf("\nadjudications\n");
  std::printf(
      "[A] spacelike m=3 Cartesian curvature denominator:\n"
      "    oracle K matches 4/((u^2+v^2)(u^2+v^2-1)^4), the polar form "
      "4/(r^2(1-r^2)^4): max rel residual %s (cartesian patch), %s (polar patch)\n"
      "    printed alternative 4/((u^2+v^2)(1+u^2+v^2)^4) REJECTED: best rel "
      "residual %s\n",
      g9(rc.max_k_rel).c_str(), g9(rp.max_k_rel).c_str(),
      g9(rc.min_k_alt_rel).c_str());
  std::printf(
      "[B] timelike polar curvature sign:\n"
      "    oracle K matches -(uv)^(2-m)/(1+uv)^4 with uv = r^2 sin cos (the "
      "Cartesian print; negative where uv > 0): max rel residual %s\n"
      "    printed polar form +(sin cos)^(2-m) (r^(2-m)/(1+r^2 sin cos)^2)^2 "
      "REJECTED (opposite sign): best rel residual %s\n"
      "    consistency note: the printed L, M, N give L*N - M^2 = +4 r^(2m-2) "
      "(sin cos)^(m-2); a det II printed with the opposite sign contradicts "
      "its own coefficients.\n",
      g9(rt.max_k_rel).c_str(), g9(rt.min_k_alt_rel).c_str());
}

int cmd_verify(const Options& opt) {
  VerifyContext ctx;
  ctx.cfg.threads = env_threads();
  ctx.cfg.step = opt.step;
  ctx.cfg.h_tol = opt.tolerance;
  auto [ns, nt] = parse_grid(opt.grid, 64, 64);
  ctx.ns = ns;
  ctx.nt = nt;
  ctx.precision = opt.fp64 ? bour::Precision::Fp64 : bour::Precision::Auto;

  std::vector<bour::BourParams> targets;
  if (opt.all) {
    targets = bour::full_catalog();
  } else {
    auto e = resolve_entry(opt);
    guard_m(e.m);
    targets.push_back(e);
  }

  std::printf("verification report (grid %dx%d, tolerance %s)\n", ns, nt,
              g9(opt.tolerance).c_str());
  std::printf("%-14s %-10s %-6s %6s %6s %6s  %-5s %-12s %-12s %-12s %s\n",
              "label", "family", "m", "nodes", "ok", "certH", "detI", "max|H|",
              "K_rel", "gauss", "result");
  bool all_pass = true;
  for (const auto& e : targets) {
    const auto& rep = ctx.scan_entry(e);
    print_report_row(e, rep, opt.tolerance);
    all_pass = all_pass && surface_pass(rep, opt.tolerance);
  }

  if (opt.conjugate) {
    for (const auto& e : targets) {
      if (e.family != bour::Family::Timelike) continue;
      auto patch = bour::make_conjugate_patch(e);
      auto rep = bour::scan(patch, ns, nt, ctx.cfg, ctx.precision);
      bour::BourParams ce = e;
      ce.label = e.label + "-conj";
      print_report_row(ce, rep, opt.tolerance);
      all_pass = all_pass && rep.h_pass(opt.tolerance) && rep.det_sign_uniform();
    }
  }

  print_adjudications(ctx);
  std::printf("\nresult: %s\n", all_pass ? "pass" : "FAIL");
  return all_pass ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// mesh

int cmd_mesh(const Options& opt) {
  const auto e = resolve_entry(opt);
  guard_m(e.m);
  auto [ns, nt] = parse_grid(opt.grid, 128, 256);
  const auto mesh = bour::sample(e, ns, nt);

  fs::path out = opt.out.empty()
                     ? fs::path(sanitize(e.label) + "." + opt.format)
                     : fs::path(opt.out);
  if (opt.format == "obj") {
    bour::export_obj(mesh, out);
  } else if (opt.format == "csv") {
    bour::export_csv(mesh, out);
  } else if (opt.format == "svg") {
    bour::ProjectionPlane plane = bour::ProjectionPlane::XY;
    if (opt.plane == "xz") plane = bour::ProjectionPlane::XZ;
    else if (opt.plane == "yz") plane = bour::ProjectionPlane::YZ;
    else if (opt.plane != "xy")
      throw bour::DomainError(bour::ErrorKind::DomainEdge,
                              "plane must be xy, xz or yz");
    bour::export_svg_projection(mesh, plane, out);
  } else {
    throw bour::DomainError(bour::ErrorKind::DomainEdge,
                            "format must be obj, csv or svg");
  }

  double kmin = std::numeric_limits<double>::infinity(), kmax = -kmin;
  int defined = 0;
  for (std::size_t i = 0; i < mesh.k_field.size(); ++i) {
    if (!std::isfinite(mesh.k_field[i])) continue;
    if (mesh.vertex_flags[i] != bour::CellFlag::Ok) continue;
    kmin = std::min(kmin, mesh.k_field[i]);
    kmax = std::max(kmax, mesh.k_field[i]);
    ++defined;
  }
  std::printf("mesh: %s\n", e.label.c_str());
  std::printf("vertices: %d\n", mesh.ns * mesh.nt);
  std::printf("cells: %d (flagged %d)\n",
              (mesh.ns - 1) * (mesh.nt - 1), mesh.flagged_cells());
  if (defined > 0)
    std::printf("K range (ok cells): [%s, %s]\n", g9(kmin).c_str(), g9(kmax).c_str());
  if (mesh.clipped) std::printf("clipped: %s\n", mesh.clip_note.c_str());
  std::printf("wrote: %s\n", out.string().c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// figure

int cmd_figure(int fig, const Options& opt) {
  auto e = bour::figure_entry(fig);
  if (!e)
    throw bour::DomainError(bour::ErrorKind::DomainEdge,
                            "unknown figure number " + std::to_string(fig));
  auto [ns, nt] = parse_grid(opt.grid, 128, 256);
  const auto mesh = bour::sample(*e, ns, nt);

  fs::path dir(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  char prefix[32];
  std::snprintf(prefix, sizeof prefix, "fig%02d_", fig);
  const std::string stem = prefix + sanitize(e->label);

  std::vector<std::string> outputs;
  const fs::path obj = dir / (stem + ".obj");
  bour::export_obj(mesh, obj);
  outputs.push_back(obj.filename().string());

  // The two "with its shadows" figures also get the three coordinate-plane
  // projections.
  if (fig == 2 || fig == 4) {
    for (auto plane : {bour::ProjectionPlane::XY, bour::ProjectionPlane::XZ,
                       bour::ProjectionPlane::YZ}) {
      const fs::path svg = dir / (stem + "_" + bour::to_string(plane) + ".svg");
      bour::export_svg_projection(mesh, plane, svg);
      outputs.push_back(svg.filename().string());
    }
  }

  ordered_json manifest;
  manifest["figure"] = fig;
  manifest["label"] = e->label;
  manifest["family"] = bour::to_string(e->family);
  manifest["m"] = e->m;
  manifest["parametrization"] =
      e->parametrization == bour::Parametrization::Cartesian ? "cartesian" : "polar";
  manifest["s_range"] = {e->r_range.lo, e->r_range.hi};
  manifest["t_range"] = {e->theta_range.lo, e->theta_range.hi};
  manifest["grid"] = {ns, nt};
  manifest["clipped"] = mesh.clipped;
  if (mesh.clipped) manifest["clip_note"] = mesh.clip_note;
  manifest["outputs"] = outputs;

  const fs::path mpath = dir / (stem + ".manifest.json");
  std::ofstream mf(mpath, std::ios::binary);
  if (!mf || !(mf << manifest.dump(2) << "\n"))
    throw bour::IoError("cannot write " + mpath.string());

  std::printf("figure %d: %s (%s, m = %s)\n", fig, e->label.c_str(),
              bour::to_string(e->family), g9(e->m).c_str());
  for (const auto& o : outputs) std::printf("wrote: %s\n", (dir / o).string().c_str());
  std::printf("wrote: %s\n", mpath.string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bour-family zero-mean-curvature surfaces in Minkowski 3-space"};
  app.require_subcommand(1);
  Options opt;

  auto* list = app.add_subcommand("list", "print the surface catalog");

  auto* eval = app.add_subcommand("eval", "closed-form geometry at one point");
  double ev_s = 0.0, ev_t = 0.0;
  eval->add_option("--family", opt.family, "spacelike | timelike");
  eval->add_option("--m", opt.m, "family value");
  eval->add_option("--label", opt.label, "catalog label (overrides --family/--m)");
  eval->add_flag("--cartesian", opt.cartesian, "use the Cartesian m = 3 parametrization");
  eval->add_option("s", ev_s, "first parameter (r or u)")->required();
  eval->add_option("t", ev_t, "second parameter (theta or v)")->required();

  auto* verify = app.add_subcommand("verify", "oracle verification report");
  verify->add_option("--family", opt.family);
  verify->add_option("--m", opt.m);
  verify->add_option("--label", opt.label);
  verify->add_flag("--all", opt.all, "verify the whole catalog");
  verify->add_flag("--conjugate", opt.conjugate, "also verify conjugate surfaces");
  verify->add_flag("--fp64", opt.fp64, "force the double-precision oracle");
  verify->add_option("--grid", opt.grid, "scan grid, e.g. 64x64");
  verify->add_option("--tolerance", opt.tolerance, "mean-curvature tolerance");
  verify->add_option("--step", opt.step, "finite-difference step");

  auto* mesh = app.add_subcommand("mesh", "sample a surface and export it");
  mesh->add_option("--family", opt.family);
  mesh->add_option("--m", opt.m);
  mesh->add_option("--label", opt.label);
  mesh->add_flag("--cartesian", opt.cartesian);
  mesh->add_option("--grid", opt.grid, "sample grid, e.g. 128x256");
  mesh->add_option("--format", opt.format, "obj | csv | svg");
  mesh->add_option("--plane", opt.plane, "projection plane for svg");
  mesh->add_option("--out", opt.out, "output path");

  auto* figure = app.add_subcommand("figure", "reproduce a published figure");
  int fig_number = 0;
  figure->add_option("number", fig_number, "figure number, 1..20")->required();
  figure->add_option("--out-dir", opt.out_dir, "output directory");
  figure->add_option("--grid", opt.grid, "sample grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list();
    if (eval->parsed()) return cmd_eval(opt, ev_s, ev_t);
    if (verify->parsed()) return cmd_verify(opt);
    if (mesh->parsed()) return cmd_mesh(opt);
    if (figure->parsed()) return cmd_figure(fig_number, opt);
  } catch (const bour::IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const bour::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
