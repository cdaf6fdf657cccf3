#pragma once

// Closed-form immersions of the Bour family, templated on the scalar so the
// verification oracle can sample them in binary128 where double runs out of
// mantissa. All branch handling funnels through detail::real_pow.

#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"
#include "bour/lorentz.hpp"

namespace bour::detail {

/// m = -1, 0, 1 produce logarithmic antiderivatives and are excluded from
/// the family.
inline void guard_family_value(double m) {
  for (double k : {-1.0, 0.0, 1.0}) {
    if (std::abs(m - k) < 1e-12)
      throw DomainError(ErrorKind::ExcludedExponent,
                        "family value m must avoid {-1, 0, 1}");
  }
}

/// Spacelike family of value m, polar parameters (r, theta):
///   x =  r^{m-1}/(m-1) cos((m-1)t) + r^{m+1}/(m+1) cos((m+1)t)
///   y = -r^{m-1}/(m-1) sin((m-1)t) + r^{m+1}/(m+1) sin((m+1)t)
///   z =  2 r^m / m cos(m t)
template <typename T>
Vec3T<T> bour_eval(double m, T r, T theta) {
  const T a = real_pow(r, m - 1.0) / T(m - 1.0);
  const T b = real_pow(r, m + 1.0) / T(m + 1.0);
  const T c = T(2.0 / m) * real_pow(r, m);
  const T lo = T(m - 1.0) * theta;
  const T hi = T(m + 1.0) * theta;
  return {a * fp_cos(lo) + b * fp_cos(hi),
          -a * fp_sin(lo) + b * fp_sin(hi),
          c * fp_cos(T(m) * theta)};
}

/// The m = 3 spacelike surface in Cartesian parameters (zeta = u + iv).
template <typename T>
Vec3T<T> b3_cartesian_eval(T u, T v) {
  const T u2 = u * u, v2 = v * v;
  return {u2 * u2 / T(4) + v2 * v2 / T(4) - T(1.5) * u2 * v2 + u2 / T(2) - v2 / T(2),
          u2 * u * v - u * v * v2 - u * v,
          T(2.0 / 3.0) * u2 * u - T(2) * u * v2};
}

/// Null-curve legs of the timelike family: x(u,v) = omega(u) + psi(v).
template <typename T>
Vec3T<T> omega_eval(double m, T u) {
  const T a = real_pow(u, m - 1.0) / T(m - 1.0);
  const T b = real_pow(u, m + 1.0) / T(m + 1.0);
  const T c = T(2.0 / m) * real_pow(u, m);
  return {-a - b, a - b, c};
}

template <typename T>
Vec3T<T> psi_eval(double m, T v) {
  const T a = real_pow(v, m - 1.0) / T(m - 1.0);
  const T b = real_pow(v, m + 1.0) / T(m + 1.0);
  const T c = T(2.0 / m) * real_pow(v, m);
  return {a + b, a - b, c};
}

template <typename T>
Vec3T<T> magid_eval(double m, T u, T v) {
  return omega_eval(m, u) + psi_eval(m, v);
}

template <typename T>
Vec3T<T> conjugate_eval(double m, T u, T v) {
  return omega_eval(m, u) - psi_eval(m, v);
}

}  // namespace bour::detail
