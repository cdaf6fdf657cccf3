#pragma once

// Timelike zero-mean-curvature surfaces under diag(-,+,+), built from two
// real monomial null-curve legs in null coordinates (u, v):
// x(u,v) = omega(u) + psi(v), conjugate x*(u,v) = omega(u) - psi(v).
// Polar parameters substitute u = r cos(theta), v = r sin(theta).

#include "bour/bour_maximal.hpp"  // FirstForm / SecondForm
#include "bour/lorentz.hpp"

namespace bour {

/// Monomial legs (f, g)(u) = (u^{f_exp}, u) and (fr_f, fr_g)(v) =
/// (v^{frak_f_exp}, v). The family of value m has both exponents m - 2.
struct NullData {
  double f_exp{0.0};
  double frak_f_exp{0.0};

  static NullData bour(double m) { return {m - 2.0, m - 2.0}; }
  double family_value() const { return f_exp + 2.0; }
};

struct NullCoords {
  double u{0.0};
  double v{0.0};
};

struct TimelikePolar {
  double r{0.0};
  double theta{0.0};
};

inline NullCoords to_null(const TimelikePolar& p) {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

/// x(u,v) = omega(u) + psi(v):
///   x = -(u^{m-1}-v^{m-1})/(m-1) - (u^{m+1}-v^{m+1})/(m+1)
///   y =  (u^{m-1}+v^{m-1})/(m-1) - (u^{m+1}+v^{m+1})/(m+1)
///   z =  2 (u^m + v^m)/m
/// Throws ExcludedExponent / BranchDomain like the spacelike evaluator.
Vec3 magid_immersion(const NullData& data, const NullCoords& p);

/// The conjugate surface omega(u) - psi(v).
Vec3 conjugate_immersion(const NullData& data, const NullCoords& p);

/// Individual legs, exposed so callers can verify x +- x* = 2 omega / 2 psi.
Vec3 omega_leg(const NullData& data, double u);
Vec3 psi_leg(const NullData& data, double v);

/// <phi, phi> under MPP where phi(u) = (-f(1+g^2), f(1-g^2), 2fg) is the
/// u-leg velocity. Identically zero: the legs are null curves.
double null_residual(const NullData& data, double u);
/// Same for the v-leg mu(v) = (f(1+g^2), f(1-g^2), 2fg).
double null_residual_v(const NullData& data, double v);

/// First fundamental form in polar parameters, s = sin(theta) c = cos(theta):
///   E =  4 r^{2m-4} (sc)^{m-1} (1 + r^2 sc)^2
///   F =  2 r^{2m-3} (sc)^{m-2} (1 + r^2 sc)^2 cos(2 theta)
///   G = -4 r^{2m-2} (sc)^{m-1} (1 + r^2 sc)^2
/// det I = E G - F^2 <= 0; singular on the axes, at r = 0 and where
/// 1 + r^2 sc = 0.
FirstForm timelike_first_form(double m, const TimelikePolar& p);

/// (r(c - s), r(c + s), r^2 cs - 1) / (1 + r^2 cs); unit spacelike under
/// MPP. Throws SingularPoint where 1 + r^2 cs = 0.
Vec3 timelike_gauss_map(double r, double theta);

/// L = -2 r^{m-2} (s^m + c^m)
/// M =  2 r^{m-1} (s c^{m-1} - c s^{m-1})
/// N = -2 r^m (s^2 c^{m-2} + c^2 s^{m-2})
/// Note: L N - M^2 evaluates to +4 r^{2m-2} (sc)^{m-2}.
SecondForm timelike_second_form(double m, const TimelikePolar& p);

struct TimelikeCurvatures {
  double K{};             // det II / det I (shape-operator convention)
  double H{};             // identically zero
  double K_polar_formula{};// the alternative printed polar form, opposite sign
  bool formulas_agree{};  // whether the two K routes agree in sign
};

/// K = det II / det I with det I < 0 (timelike convention); also evaluates
/// the alternative polar formula (sc)^{2-m} (r^{2-m}/(1+r^2 sc)^2)^2, which
/// differs from the convention value by a global sign. The numeric oracle
/// adjudicates; see the verification report.
TimelikeCurvatures timelike_curvatures(double m, const TimelikePolar& p);

}  // namespace bour
