#include "bour/meshio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"
#include "bour/patches.hpp"

namespace bour {
namespace {

const double kPi = 3.14159265358979323846;

std::string fixed9(double v) {
  char buf[48];
  // Fixed 9 decimals; below its resolution (the microscopic m = 5 surface
  // lives at ~1e-11) switch to 9 significant digits in scientific notation
  // so the geometry survives the round trip.
  if (v != 0.0 && std::abs(v) < 1e-9)
    std::snprintf(buf, sizeof buf, "%.8e", v);
  else
    std::snprintf(buf, sizeof buf, "%.9f", v + 0.0);  // +0.0 folds -0 into 0
  return buf;
}

std::string sig9(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v + 0.0);
  return buf;
}

bool straddles(double a, double b, double c) {
  return (a - c) * (b - c) < 0.0;
}

struct GridPlan {
  std::vector<double> s, t;
  bool clipped = false;
  std::string note;
};

// Uniform parameter grid over the entry's domain, clipped to the realizable
// sub-domain for fractional family values: r runs over (0, hi] via the
// half-open rule r_i = hi (i+1)/ns, and for timelike entries theta stays in
// the open positive quadrant.
GridPlan build_grid(const BourParams& e, Interval sr, Interval tr, int ns, int nt) {
  GridPlan g;
  const bool frac = !detail::is_integer_exponent(e.m) &&
                    e.parametrization == Parametrization::Polar;
  if (frac) {
    if (sr.hi <= 0.0)
      throw DomainError(ErrorKind::EmptyRealizableDomain,
                        "fractional family value with no r > 0 in range");
    if (sr.lo <= 0.0) {
      g.clipped = true;
      g.note = "r clipped to (0, " + sig9(sr.hi) + "]";
      for (int i = 0; i < ns; ++i) g.s.push_back(sr.hi * (i + 1) / ns);
    }
    if (e.family == Family::Timelike) {
      const double lo = std::max(tr.lo, 0.0), hi = std::min(tr.hi, kPi / 2.0);
      if (lo >= hi)
        throw DomainError(ErrorKind::EmptyRealizableDomain,
                          "fractional family value with no theta in (0, pi/2)");
      if (lo != tr.lo || hi != tr.hi || lo == 0.0 || hi == kPi / 2.0) {
        g.clipped = true;
        if (!g.note.empty()) g.note += "; ";
        g.note += "theta clipped to the open positive quadrant";
        for (int j = 0; j < nt; ++j)
          g.t.push_back(lo + (hi - lo) * (j + 1) / (nt + 1));
      }
    }
  }
  if (g.s.empty())
    for (int i = 0; i < ns; ++i)
      g.s.push_back(ns == 1 ? sr.lo : sr.lo + (sr.hi - sr.lo) * i / (ns - 1));
  if (g.t.empty())
    for (int j = 0; j < nt; ++j)
      g.t.push_back(nt == 1 ? tr.lo : tr.lo + (tr.hi - tr.lo) * j / (nt - 1));
  return g;
}

void flag_cells(const BourParams& e, MeshGrid& m) {
  const bool polar = e.parametrization == Parametrization::Polar;
  for (int i = 0; i + 1 < m.ns; ++i) {
    for (int j = 0; j + 1 < m.nt; ++j) {
      CellFlag flag = CellFlag::Ok;
      const int corners[4] = {m.vertex_index(i, j), m.vertex_index(i + 1, j),
                              m.vertex_index(i + 1, j + 1), m.vertex_index(i, j + 1)};
      for (int c : corners)
        if (m.vertex_flags[c] != CellFlag::Ok) flag = CellFlag::Singular;

      const double s0 = m.params[corners[0]].first, s1 = m.params[corners[1]].first;
      const double t0 = m.params[corners[0]].second, t1 = m.params[corners[2]].second;
      if (flag == CellFlag::Ok) {
        if (e.family == Family::Spacelike && polar) {
          for (double c : {-1.0, 0.0, 1.0})
            if (straddles(s0, s1, c)) flag = CellFlag::Singular;
        } else if (e.family == Family::Spacelike) {  // Cartesian: unit circle / origin
          auto rho = [](double u, double v) { return std::sqrt(u * u + v * v); };
          const double r00 = rho(s0, t0), r11 = rho(s1, t1), r01 = rho(s0, t1),
                       r10 = rho(s1, t0);
          const double rmin = std::min({r00, r01, r10, r11});
          const double rmax = std::max({r00, r01, r10, r11});
          if (rmin < 1.0 && rmax > 1.0) flag = CellFlag::Singular;
          if (straddles(s0, s1, 0.0) && straddles(t0, t1, 0.0))
            flag = CellFlag::Singular;
        } else if (polar) {  // timelike polar
          if (straddles(s0, s1, 0.0)) flag = CellFlag::Singular;
          if (std::floor(t0 / (kPi / 2.0)) != std::floor(t1 / (kPi / 2.0)))
            flag = CellFlag::Singular;
          auto w = [](double r, double t) {
            return 1.0 + r * r * std::sin(t) * std::cos(t);
          };
          const double w00 = w(s0, t0), w10 = w(s1, t0), w11 = w(s1, t1), w01 = w(s0, t1);
          if (std::min({w00, w10, w11, w01}) < 0.0 &&
              std::max({w00, w10, w11, w01}) > 0.0)
            flag = CellFlag::Singular;
        } else {  // timelike Cartesian
          if (straddles(s0, s1, 0.0) || straddles(t0, t1, 0.0))
            flag = CellFlag::Singular;
          const double w00 = 1.0 + s0 * t0, w10 = 1.0 + s1 * t0,
                       w11 = 1.0 + s1 * t1, w01 = 1.0 + s0 * t1;
          if (std::min({w00, w10, w11, w01}) < 0.0 &&
              std::max({w00, w10, w11, w01}) > 0.0)
            flag = CellFlag::Singular;
        }
      }
      m.cell_flags[m.cell_index(i, j)] = flag;
    }
  }
}

}  // namespace

int MeshGrid::ok_cells() const {
  return static_cast<int>(
      std::count(cell_flags.begin(), cell_flags.end(), CellFlag::Ok));
}

int MeshGrid::flagged_cells() const {
  return static_cast<int>(cell_flags.size()) - ok_cells();
}

MeshGrid sample_range(const BourParams& entry, Interval s_range, Interval t_range,
                      int ns, int nt, const OracleConfig&) {
  if (ns < 2 || nt < 2)
    throw DomainError(ErrorKind::DomainEdge, "mesh grid must be at least 2x2");

  const GridPlan g = build_grid(entry, s_range, t_range, ns, nt);
  const auto eval = closed_immersion(entry);
  const auto k_of = closed_curvature(entry);

  MeshGrid m;
  m.name = entry.label;
  m.ns = ns;
  m.nt = nt;
  m.clipped = g.clipped;
  m.clip_note = g.note;
  m.vertices.resize(static_cast<std::size_t>(ns) * nt);
  m.params.resize(m.vertices.size());
  m.k_field.resize(m.vertices.size());
  m.vertex_flags.assign(m.vertices.size(), CellFlag::Ok);
  m.cell_flags.assign(static_cast<std::size_t>(ns - 1) * (nt - 1), CellFlag::Ok);

  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      const int id = m.vertex_index(i, j);
      const double s = g.s[i], t = g.t[j];
      m.params[id] = {s, t};
      const Vec3 p = eval(s, t);
      if (!is_finite(p))
        throw DomainError(ErrorKind::SingularPoint,
                          "immersion not finite inside the sampled domain");
      m.vertices[id] = p;
      double k = std::numeric_limits<double>::quiet_NaN();
      try {
        k = k_of(s, t);
      } catch (const DomainError&) {
        // curvature undefined here; vertex stays, cell gets flagged
      }
      if (!std::isfinite(k)) {
        k = std::numeric_limits<double>::quiet_NaN();
        m.vertex_flags[id] = CellFlag::Singular;
      }
      m.k_field[id] = k;
    }
  }
  flag_cells(entry, m);
  return m;
}

MeshGrid sample(const BourParams& entry, int ns, int nt, const OracleConfig& cfg) {
  return sample_range(entry, entry.r_range, entry.theta_range, ns, nt, cfg);
}

void export_obj(const MeshGrid& mesh, const std::filesystem::path& path) {
  if (mesh.vertices.empty())
    throw DomainError(ErrorKind::EmptyRealizableDomain, "mesh has no vertices");
  std::ostringstream out;
  out << "# " << mesh.name << " " << mesh.ns << "x" << mesh.nt << "\n";
  for (const Vec3& v : mesh.vertices)
    out << "v " << fixed9(v.x) << " " << fixed9(v.y) << " " << fixed9(v.z) << "\n";
  for (int i = 0; i + 1 < mesh.ns; ++i) {
    for (int j = 0; j + 1 < mesh.nt; ++j) {
      if (mesh.cell_flags[mesh.cell_index(i, j)] != CellFlag::Ok) continue;
      out << "f " << mesh.vertex_index(i, j) + 1 << " "
          << mesh.vertex_index(i + 1, j) + 1 << " "
          << mesh.vertex_index(i + 1, j + 1) + 1 << " "
          << mesh.vertex_index(i, j + 1) + 1 << "\n";
    }
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << out.str()) || !f.flush())
    throw IoError("cannot write " + path.string());
}

void export_csv(const MeshGrid& mesh, const std::filesystem::path& path) {
  if (mesh.vertices.empty())
    throw DomainError(ErrorKind::EmptyRealizableDomain, "mesh has no vertices");
  std::ostringstream out;
  out << "s,t,x,y,z,K,flag\n";
  for (std::size_t id = 0; id < mesh.vertices.size(); ++id) {
    const auto& [s, t] = mesh.params[id];
    const Vec3& v = mesh.vertices[id];
    out << sig9(s) << "," << sig9(t) << "," << fixed9(v.x) << "," << fixed9(v.y)
        << "," << fixed9(v.z) << "," << sig9(mesh.k_field[id]) << ","
        << to_string(mesh.vertex_flags[id]) << "\n";
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << out.str()) || !f.flush())
    throw IoError("cannot write " + path.string());
}

void export_svg_projection(const MeshGrid& mesh, ProjectionPlane plane,
                           const std::filesystem::path& path) {
  if (mesh.vertices.empty())
    throw DomainError(ErrorKind::EmptyRealizableDomain, "mesh has no vertices");

  auto project = [plane](const Vec3& v) -> std::pair<double, double> {
    switch (plane) {
      case ProjectionPlane::XY: return {v.x, v.y};
      case ProjectionPlane::XZ: return {v.x, v.z};
      case ProjectionPlane::YZ: return {v.y, v.z};
    }
    return {v.x, v.y};
  };

  double minx = std::numeric_limits<double>::infinity(), maxx = -minx;
  double miny = minx, maxy = -minx;
  for (const Vec3& v : mesh.vertices) {
    const auto [px, py] = project(v);
    minx = std::min(minx, px), maxx = std::max(maxx, px);
    miny = std::min(miny, py), maxy = std::max(maxy, py);
  }
  double w = maxx - minx, h = maxy - miny;
  if (w <= 0.0) w = 1.0;
  if (h <= 0.0) h = 1.0;
  minx -= 0.05 * w, maxx += 0.05 * w;
  miny -= 0.05 * h, maxy += 0.05 * h;
  w = maxx - minx, h = maxy - miny;

  const double W = 1000.0, H = W * h / w;
  auto map = [&](const Vec3& v) {
    const auto [px, py] = project(v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", (px - minx) / w * W,
                  H - (py - miny) / h * H);
    return std::string(buf);
  };

  std::ostringstream out;
  char head[160];
  std::snprintf(head, sizeof head,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                "height=\"%.0f\" viewBox=\"0 0 %.3f %.3f\">\n",
                W, H, W, H);
  out << head;
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"0.6\">\n";
  auto polyline = [&](auto&& next, int count) {
    if (count < 2) return;
    out << "<polyline points=\"";
    for (int k = 0; k < count; ++k) {
      if (k) out << " ";
      out << map(mesh.vertices[next(k)]);
    }
    out << "\"/>\n";
  };
  for (int i = 0; i < mesh.ns; ++i)
    polyline([&](int j) { return mesh.vertex_index(i, j); }, mesh.nt > 1 ? mesh.nt : 0);
  for (int j = 0; j < mesh.nt; ++j)
    polyline([&](int i) { return mesh.vertex_index(i, j); }, mesh.ns > 1 ? mesh.ns : 0);
  out << "</g>\n</svg>\n";

  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << out.str()) || !f.flush())
    throw IoError("cannot write " + path.string());
}

}  // namespace bour
