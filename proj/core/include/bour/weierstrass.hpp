#pragma once

// Spacelike zero-mean-curvature surfaces from holomorphic monomial data
// (F, G) = (C zeta^p, zeta), generated two independent ways: the closed-form
// antiderivative of the representation integrand, and numerical contour
// integration of the same integrand. The two routes cross-check each other.

#include <array>
#include <complex>

#include "bour/lorentz.hpp"

namespace bour {

/// Monomial data F(zeta) = C zeta^p with G(zeta) = zeta. The family of
/// value m corresponds to p = m - 2; C must not vanish.
struct WeierstrassData {
  std::complex<double> coeff{1.0, 0.0};
  double exponent{0.0};

  static WeierstrassData bour(double m) { return {{1.0, 0.0}, m - 2.0}; }
};

/// A point of the parameter plane in polar form, zeta = r e^{i theta}.
/// Theta is a winding parameter (not reduced mod 2*pi), which keeps
/// fractional powers single-valued along sweeps beyond one turn.
struct ComplexParam {
  double r{0.0};
  double theta{0.0};
};

/// The representation integrand (F(1+G^2), i F(1-G^2), 2 F G) at zeta.
/// Throws BranchDomain at zeta = 0 when p < 0 (or fractional p at 0).
std::array<std::complex<double>, 3> integrand(const WeierstrassData& data,
                                              const ComplexParam& zeta);

/// Termwise antiderivative of the integrand for data (zeta^{m-2}, zeta),
/// real part taken; the family surface of value m at (r, theta).
/// Throws ExcludedExponent for m in {-1,0,1}; BranchDomain when r <= 0 with
/// fractional m.
Vec3 bour_closed_form(double m, const ComplexParam& zeta);

/// Composite Gauss-Legendre (8 nodes per panel, `steps` panels per leg)
/// along the two-leg path base -> (zeta.r, base.theta) -> zeta: a radial
/// segment followed by a circular arc. Returns the real part of the path
/// integral, i.e. the immersion relative to the anchor `base`.
Vec3 integrate_numeric(const WeierstrassData& data, const ComplexParam& zeta,
                       const ComplexParam& base, int steps);

/// Default anchor for the constant of integration: near the origin for
/// p > -1, on the unit circle otherwise.
ComplexParam default_base(double exponent);

/// The m = 3 surface in Cartesian parameters,
/// (u^4/4 + v^4/4 - 3/2 u^2 v^2 + u^2/2 - v^2/2, u^3 v - u v^3 - u v,
///  2/3 u^3 - 2 u v^2).
Vec3 b3_cartesian(double u, double v);

}  // namespace bour
