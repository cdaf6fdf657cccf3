#include "bour/timelike.hpp"

#include <array>
#include <cmath>

#include "bour/detail/closed_forms.hpp"
#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"

namespace bour {

using detail::real_pow;

namespace {

void guard(const NullData& data) {
  detail::guard_family_value(data.f_exp + 2.0);
  detail::guard_family_value(data.frak_f_exp + 2.0);
}

// u-leg velocity phi(u) = (-f(1+g^2), f(1-g^2), 2fg) with f = u^{p}, g = u.
std::array<double, 3> phi_velocity(double p, double u) {
  const double f = real_pow(u, p);
  const double g = u;
  return {-f * (1.0 + g * g), f * (1.0 - g * g), 2.0 * f * g};
}

}  // namespace

Vec3 magid_immersion(const NullData& data, const NullCoords& p) {
  guard(data);
  return detail::omega_eval<double>(data.f_exp + 2.0, p.u) +
         detail::psi_eval<double>(data.frak_f_exp + 2.0, p.v);
}

Vec3 conjugate_immersion(const NullData& data, const NullCoords& p) {
  guard(data);
  return detail::omega_eval<double>(data.f_exp + 2.0, p.u) -
         detail::psi_eval<double>(data.frak_f_exp + 2.0, p.v);
}

Vec3 omega_leg(const NullData& data, double u) {
  guard(data);
  return detail::omega_eval<double>(data.f_exp + 2.0, u);
}

Vec3 psi_leg(const NullData& data, double v) {
  guard(data);
  return detail::psi_eval<double>(data.frak_f_exp + 2.0, v);
}

double null_residual(const NullData& data, double u) {
  const auto c = phi_velocity(data.f_exp, u);
  return -c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
}

double null_residual_v(const NullData& data, double v) {
  // mu(v) = (f(1+g^2), f(1-g^2), 2fg): first component sign differs from phi.
  const auto c = phi_velocity(data.frak_f_exp, v);
  return -c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
}

FirstForm timelike_first_form(double m, const TimelikePolar& p) {
  detail::guard_family_value(m);
  const double s = std::sin(p.theta), c = std::cos(p.theta);
  const double sc = s * c;
  const double w = 1.0 + p.r * p.r * sc;
  const double w2 = w * w;
  FirstForm f;
  f.E = 4.0 * real_pow(p.r, 2.0 * m - 4.0) * real_pow(sc, m - 1.0) * w2;
  f.F = 2.0 * real_pow(p.r, 2.0 * m - 3.0) * real_pow(sc, m - 2.0) * w2 *
        std::cos(2.0 * p.theta);
  f.G = -4.0 * real_pow(p.r, 2.0 * m - 2.0) * real_pow(sc, m - 1.0) * w2;
  const double det = f.E * f.G - f.F * f.F;
  f.singular = !(std::isfinite(det)) || det == 0.0;
  return f;
}

Vec3 timelike_gauss_map(double r, double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double w = 1.0 + r * r * s * c;
  if (w == 0.0)
    throw DomainError(ErrorKind::SingularPoint,
                      "Gauss map undefined where 1 + r^2 sin cos = 0");
  return {r * (c - s) / w, r * (c + s) / w, (r * r * c * s - 1.0) / w};
}

SecondForm timelike_second_form(double m, const TimelikePolar& p) {
  detail::guard_family_value(m);
  const double s = std::sin(p.theta), c = std::cos(p.theta);
  SecondForm out;
  out.L = -2.0 * real_pow(p.r, m - 2.0) *
          (real_pow(s, m) + real_pow(c, m));
  out.M = 2.0 * real_pow(p.r, m - 1.0) *
          (s * real_pow(c, m - 1.0) - c * real_pow(s, m - 1.0));
  out.N = -2.0 * real_pow(p.r, m) *
          (s * s * real_pow(c, m - 2.0) + c * c * real_pow(s, m - 2.0));
  out.singular = !(std::isfinite(out.L) && std::isfinite(out.M) &&
                   std::isfinite(out.N));
  return out;
}

TimelikeCurvatures timelike_curvatures(double m, const TimelikePolar& p) {
  const FirstForm f = timelike_first_form(m, p);
  const SecondForm s = timelike_second_form(m, p);
  const double det_i = first_form_det(f);
  if (f.singular || s.singular || det_i == 0.0)
    throw DomainError(ErrorKind::SingularPoint, "curvature undefined here");

  TimelikeCurvatures out;
  out.K = second_form_det(s) / det_i;
  out.H = 0.0;

  const double sc = std::sin(p.theta) * std::cos(p.theta);
  const double w = 1.0 + p.r * p.r * sc;
  const double root = real_pow(p.r, 2.0 - m) / (w * w);
  out.K_polar_formula = real_pow(sc, 2.0 - m) * root * root;
  out.formulas_agree = std::signbit(out.K) == std::signbit(out.K_polar_formula);
  return out;
}

}  // namespace bour
