#include "bour/weierstrass.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "bour/detail/closed_forms.hpp"
#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"

namespace bour {
namespace {

// Powers of zeta = rho e^{i phi} evaluated in polar form. Keeping the
// winding angle explicit (rather than using the principal complex power)
// makes zeta^p single-valued along the contour even past |phi| = pi.
std::complex<double> polar_pow(double rho, double phi, double p) {
  const double mag = std::pow(rho, p);
  return {mag * std::cos(p * phi), mag * std::sin(p * phi)};
}

std::array<std::complex<double>, 3> integrand_at(const WeierstrassData& data,
                                                 double rho, double phi) {
  const std::complex<double> g{rho * std::cos(phi), rho * std::sin(phi)};
  const std::complex<double> f = data.coeff * polar_pow(rho, phi, data.exponent);
  const std::complex<double> g2 = g * g;
  const std::complex<double> i{0.0, 1.0};
  return {f * (1.0 + g2), i * f * (1.0 - g2), 2.0 * f * g};
}

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlNode[4] = {
    0.1834346424956498049394761,
    0.5255324099163289858177390,
    0.7966664774136267395915539,
    0.9602898564975362316835609,
};
constexpr double kGlWeight[4] = {
    0.3626837833783619829651504,
    0.3137066458778872873379622,
    0.2223810344533744705443560,
    0.1012285362903762591525314,
};

}  // namespace

namespace {

void guard_data(const WeierstrassData& data, double r) {
  if (data.coeff == std::complex<double>(0.0, 0.0))
    throw DomainError(ErrorKind::BranchDomain, "coefficient C must not vanish");
  if (r < 0.0)
    throw DomainError(ErrorKind::BranchDomain,
                      "polar radius must be nonnegative; fold the sign into theta");
}

}  // namespace

std::array<std::complex<double>, 3> integrand(const WeierstrassData& data,
                                              const ComplexParam& zeta) {
  guard_data(data, zeta.r);
  if (zeta.r == 0.0 && data.exponent < 0.0)
    throw DomainError(ErrorKind::BranchDomain,
                      "zeta = 0 is a pole/branch point for negative exponent");
  return integrand_at(data, zeta.r, zeta.theta);
}

Vec3 bour_closed_form(double m, const ComplexParam& zeta) {
  detail::guard_family_value(m);
  if (!detail::is_integer_exponent(m) && zeta.r <= 0.0)
    throw DomainError(ErrorKind::BranchDomain,
                      "fractional family value needs r > 0");
  return detail::bour_eval<double>(m, zeta.r, zeta.theta);
}

ComplexParam default_base(double exponent) {
  return exponent > -1.0 ? ComplexParam{1e-6, 0.0} : ComplexParam{1.0, 0.0};
}

Vec3 integrate_numeric(const WeierstrassData& data, const ComplexParam& zeta,
                       const ComplexParam& base, int steps) {
  guard_data(data, std::min(zeta.r, base.r));
  if (steps < 8)
    throw DomainError(ErrorKind::DomainEdge, "quadrature needs steps >= 8");
  if (zeta.r == base.r && zeta.theta == base.theta) return {0.0, 0.0, 0.0};
  if (data.exponent < 0.0 && std::min(base.r, zeta.r) <= 1e-9)
    throw DomainError(ErrorKind::PathThroughSingularity,
                      "path reaches zeta = 0 with a negative exponent");

  std::array<std::complex<double>, 3> acc{};

  // Leg 1: radial, rho in [base.r, zeta.r] at phi = base.theta.
  // d zeta = e^{i phi} d rho.
  {
    const std::complex<double> dir{std::cos(base.theta), std::sin(base.theta)};
    const double a = base.r, b = zeta.r;
    const double panel = (b - a) / steps;
    if (panel != 0.0) {
      for (int p = 0; p < steps; ++p) {
        const double mid = a + (p + 0.5) * panel;
        const double half = 0.5 * panel;
        for (int k = 0; k < 4; ++k) {
          for (double sgn : {-1.0, 1.0}) {
            const double rho = mid + sgn * half * kGlNode[k];
            const auto f = integrand_at(data, rho, base.theta);
            const double w = kGlWeight[k] * half;
            for (int c = 0; c < 3; ++c) acc[c] += w * f[c] * dir;
          }
        }
      }
    }
  }

  // Leg 2: arc, phi in [base.theta, zeta.theta] at rho = zeta.r.
  // d zeta = i rho e^{i phi} d phi.
  {
    const double a = base.theta, b = zeta.theta;
    const double panel = (b - a) / steps;
    if (panel != 0.0 && zeta.r != 0.0) {
      const std::complex<double> i{0.0, 1.0};
      for (int p = 0; p < steps; ++p) {
        const double mid = a + (p + 0.5) * panel;
        const double half = 0.5 * panel;
        for (int k = 0; k < 4; ++k) {
          for (double sgn : {-1.0, 1.0}) {
            const double phi = mid + sgn * half * kGlNode[k];
            const auto f = integrand_at(data, zeta.r, phi);
            const std::complex<double> dz =
                i * zeta.r * std::complex<double>{std::cos(phi), std::sin(phi)};
            const double w = kGlWeight[k] * half;
            for (int c = 0; c < 3; ++c) acc[c] += w * f[c] * dz;
          }
        }
      }
    }
  }

  return {acc[0].real(), acc[1].real(), acc[2].real()};
}

Vec3 b3_cartesian(double u, double v) {
  return detail::b3_cartesian_eval<double>(u, v);
}

}  // namespace bour
