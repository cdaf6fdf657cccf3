#include "bour/patches.hpp"

#include <cmath>

#include "bour/detail/closed_forms.hpp"
#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"
#include "bour/timelike.hpp"

namespace bour {
namespace {

const double kPi = 3.14159265358979323846;

bool fractional(double m) { return !detail::is_integer_exponent(m); }

// Closed-form Gaussian curvature, as confirmed by the oracle:
//   spacelike polar:      K =  4 r^{2(2-m)} / (1-r^2)^4
//   spacelike Cartesian:  K =  4 / (rho^2 (rho^2-1)^4),     rho^2 = u^2+v^2
//   timelike (uv coords): K = -(uv)^{2-m} / (1+uv)^4
double k_spacelike(double m, double r) {
  const double q = 1.0 - r * r;
  const double root = 2.0 * detail::real_pow(r, 2.0 - m) / (q * q);
  return root * root;
}

double k_timelike_uv(double m, double u, double v) {
  const double uv = u * v;
  const double w = 1.0 + uv;
  return -detail::real_pow(uv, 2.0 - m) / (w * w * w * w);
}

// Band margins for scan grids. Conditioning-based certification inside the
// oracle does the fine-grained work; these just cut out the loci themselves.
SingularBand radial_band(double center, double margin) {
  return {"r near " + std::to_string(center),
          [center, margin](double s, double) { return std::abs(s - center) < margin; }};
}

void spacelike_polar_bands(const BourParams& e, SurfacePatch& p) {
  const double scale = std::max(std::abs(e.r_range.lo), std::abs(e.r_range.hi));
  p.singular_loci.push_back(radial_band(0.0, 0.05 * std::max(1.0, scale)));
  for (double c : {-1.0, 1.0})
    if (c >= e.r_range.lo - 0.05 && c <= e.r_range.hi + 0.05)
      p.singular_loci.push_back(radial_band(c, 0.05));
}

void spacelike_cartesian_bands(SurfacePatch& p) {
  p.singular_loci.push_back(
      {"rho near 0", [](double u, double v) { return u * u + v * v < 0.05 * 0.05; }});
  p.singular_loci.push_back({"rho near 1", [](double u, double v) {
                               const double rho = std::sqrt(u * u + v * v);
                               return std::abs(rho - 1.0) < 0.05;
                             }});
}

void timelike_polar_bands(const BourParams& e, SurfacePatch& p) {
  const double scale = std::max(std::abs(e.r_range.lo), std::abs(e.r_range.hi));
  p.singular_loci.push_back(radial_band(0.0, 0.05 * scale));
  p.singular_loci.push_back({"theta on a coordinate axis", [](double, double t) {
                               const double q = t / (kPi / 2.0);
                               return std::abs(q - std::nearbyint(q)) < 0.02;
                             }});
  // Margin grows with r^2: the locus sweeps through a grid cell that fast.
  p.singular_loci.push_back({"1 + r^2 sin cos near 0", [](double r, double t) {
                               const double sc = std::sin(t) * std::cos(t);
                               return std::abs(1.0 + r * r * sc) <
                                      0.05 * (1.0 + 0.5 * r * r);
                             }});
}

void timelike_cartesian_bands(SurfacePatch& p) {
  p.singular_loci.push_back({"u near 0", [](double u, double) { return std::abs(u) < 0.05; }});
  p.singular_loci.push_back({"v near 0", [](double, double v) { return std::abs(v) < 0.05; }});
  p.singular_loci.push_back(
      {"1 + uv near 0", [](double u, double v) { return std::abs(1.0 + u * v) < 0.05; }});
}

template <typename T>
std::function<Vec3T<T>(T, T)> immersion(const BourParams& e) {
  const double m = e.m;
  if (e.family == Family::Spacelike) {
    if (e.parametrization == Parametrization::Cartesian)
      return [](T u, T v) { return detail::b3_cartesian_eval<T>(u, v); };
    return [m](T r, T t) { return detail::bour_eval<T>(m, r, t); };
  }
  if (e.parametrization == Parametrization::Cartesian)
    return [m](T u, T v) { return detail::magid_eval<T>(m, u, v); };
  return [m](T r, T t) {
    return detail::magid_eval<T>(m, r * detail::fp_cos(t), r * detail::fp_sin(t));
  };
}

SurfacePatch base_patch(const BourParams& e, Interval s_range, Interval t_range) {
  SurfacePatch p;
  p.name = e.label;
  p.s_range = s_range;
  p.t_range = t_range;
  p.sig = e.family == Family::Spacelike ? Signature::PPM : Signature::MPP;
  p.eval = immersion<double>(e);
#ifdef BOUR_HAVE_FLOAT128
  p.eval_q = immersion<__float128>(e);
#endif

  const double m = e.m;
  if (e.family == Family::Spacelike) {
    if (e.parametrization == Parametrization::Cartesian) {
      p.k_closed = [](double u, double v) {
        const double r2 = u * u + v * v;
        const double q = r2 - 1.0;
        return 4.0 / (r2 * q * q * q * q);
      };
      // The other printed form of the same curvature; the report shows which
      // one the oracle confirms.
      p.k_alt = [](double u, double v) {
        const double r2 = u * u + v * v;
        const double q = r2 + 1.0;
        return 4.0 / (r2 * q * q * q * q);
      };
      p.gauss_closed = [](double u, double v) {
        const double d = u * u + v * v - 1.0;
        return Vec3{2.0 * u / d, 2.0 * v / d, (u * u + v * v + 1.0) / d};
      };
      spacelike_cartesian_bands(p);
    } else {
      p.k_closed = [m](double r, double) { return k_spacelike(m, r); };
      p.gauss_closed = [](double r, double t) { return gauss_map(r, t); };
      spacelike_polar_bands(e, p);
    }
  } else {
    if (e.parametrization == Parametrization::Cartesian) {
      p.k_closed = [m](double u, double v) { return k_timelike_uv(m, u, v); };
      p.k_alt = [m](double u, double v) { return -k_timelike_uv(m, u, v); };
      p.gauss_closed = [](double u, double v) {
        const double w = 1.0 + u * v;
        return Vec3{(u - v) / w, (u + v) / w, (u * v - 1.0) / w};
      };
      timelike_cartesian_bands(p);
    } else {
      p.k_closed = [m](double r, double t) {
        return k_timelike_uv(m, r * std::cos(t), r * std::sin(t));
      };
      // The printed polar formula; sign opposite to the uv form.
      p.k_alt = [m](double r, double t) {
        return timelike_curvatures(m, {r, t}).K_polar_formula;
      };
      p.gauss_closed = [](double r, double t) { return timelike_gauss_map(r, t); };
      timelike_polar_bands(e, p);
    }
  }
  return p;
}

}  // namespace

bool realizable_domain(const BourParams& e, Interval& s_range, Interval& t_range,
                       std::string& note) {
  s_range = e.r_range;
  t_range = e.theta_range;
  note.clear();
  if (e.parametrization == Parametrization::Cartesian || !fractional(e.m))
    return true;

  // Fractional m: real powers need r > 0 (and, for timelike entries, both
  // null coordinates positive, i.e. theta inside (0, pi/2)).
  if (s_range.hi <= 0.0) return false;
  if (s_range.lo <= 0.0) {
    s_range.lo = s_range.hi * 1e-9;
    note = "r clipped to (0, " + std::to_string(s_range.hi) + "] for fractional m";
  }
  if (e.family == Family::Timelike) {
    const Interval quad{1e-9, kPi / 2.0 - 1e-9};
    const Interval t0 = t_range;
    t_range.lo = std::max(t_range.lo, quad.lo);
    t_range.hi = std::min(t_range.hi, quad.hi);
    if (t_range.lo >= t_range.hi) return false;
    if (t_range.lo != t0.lo || t_range.hi != t0.hi) {
      if (!note.empty()) note += "; ";
      note += "theta clipped to the positive quadrant for fractional m";
    }
  }
  return true;
}

std::function<Vec3(double, double)> closed_immersion(const BourParams& entry) {
  return immersion<double>(entry);
}

std::function<double(double, double)> closed_curvature(const BourParams& entry) {
  const double m = entry.m;
  if (entry.family == Family::Spacelike) {
    if (entry.parametrization == Parametrization::Cartesian)
      return [](double u, double v) {
        const double r2 = u * u + v * v;
        const double q = r2 - 1.0;
        return 4.0 / (r2 * q * q * q * q);
      };
    return [m](double r, double) { return k_spacelike(m, r); };
  }
  if (entry.parametrization == Parametrization::Cartesian)
    return [m](double u, double v) { return k_timelike_uv(m, u, v); };
  return [m](double r, double t) {
    return k_timelike_uv(m, r * std::cos(t), r * std::sin(t));
  };
}

SurfacePatch make_patch(const BourParams& entry) {
  Interval s, t;
  std::string note;
  if (!realizable_domain(entry, s, t, note))
    throw DomainError(ErrorKind::EmptyRealizableDomain,
                      "no real-valued samples in the requested domain");
  return base_patch(entry, s, t);
}

SurfacePatch make_patch_range(const BourParams& entry, Interval s_range,
                              Interval t_range) {
  return base_patch(entry, s_range, t_range);
}

SurfacePatch make_conjugate_patch(const BourParams& entry) {
  SurfacePatch p;
  const BourParams e = entry;
  p.name = e.label + "-conjugate";
  p.s_range = e.r_range;
  p.t_range = e.theta_range;
  p.sig = Signature::MPP;
  const double m = e.m;
  p.eval = [m](double r, double t) {
    return detail::conjugate_eval<double>(m, r * std::cos(t), r * std::sin(t));
  };
#ifdef BOUR_HAVE_FLOAT128
  p.eval_q = [m](__float128 r, __float128 t) {
    return detail::conjugate_eval<__float128>(m, r * detail::fp_cos(t),
                                              r * detail::fp_sin(t));
  };
#endif
  timelike_polar_bands(e, p);
  return p;
}

SurfacePatch hyperbolic_plane_patch() {
  SurfacePatch p;
  p.name = "hyperbolic-plane";
  p.s_range = {0.2, 1.5};
  p.t_range = {0.0, kPi};
  p.sig = Signature::PPM;
  p.eval = [](double u, double t) {
    return Vec3{std::sinh(u) * std::cos(t), std::sinh(u) * std::sin(t), std::cosh(u)};
  };
  p.k_closed = [](double, double) { return -1.0; };
  return p;
}

SurfacePatch de_sitter_patch() {
  SurfacePatch p;
  p.name = "de-sitter";
  p.s_range = {-1.0, 1.0};
  p.t_range = {0.0, kPi};
  p.sig = Signature::MPP;
  p.eval = [](double u, double t) {
    return Vec3{std::sinh(u), std::cosh(u) * std::cos(t), std::cosh(u) * std::sin(t)};
  };
  p.k_closed = [](double, double) { return 1.0; };
  return p;
}

SurfacePatch sphere_cap_patch() {
  SurfacePatch p;
  p.name = "sphere-cap";
  p.s_range = {0.1, kPi / 4.0 - 0.1};  // spacelike cap: cos(2 phi) > 0
  p.t_range = {0.0, kPi};
  p.sig = Signature::PPM;
  p.eval = [](double phi, double t) {
    return Vec3{std::sin(phi) * std::cos(t), std::sin(phi) * std::sin(t), std::cos(phi)};
  };
  p.k_closed = [](double phi, double) {
    const double c = std::cos(2.0 * phi);
    return -1.0 / (c * c);
  };
  return p;
}

}  // namespace bour
