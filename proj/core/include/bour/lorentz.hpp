#pragma once

// Vector algebra of Minkowski 3-space under the two metric signatures in
// use here: PPM = diag(+1,+1,-1) (metric dx^2+dy^2-dz^2) and
// MPP = diag(-1,+1,+1) (metric -dx^2+dy^2+dz^2). Both have det = -1.
//
// Everything is a pure function on immutable values; thread-safe by
// construction.

#include <cmath>

#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"

namespace bour {

enum class Signature { PPM, MPP };

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

inline const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike:  return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "unknown";
}

template <typename T>
struct Vec3T {
  T x{}, y{}, z{};

  friend Vec3T operator+(Vec3T a, Vec3T b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3T operator-(Vec3T a, Vec3T b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3T operator*(T s, Vec3T v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Vec3T operator*(Vec3T v, T s) { return s * v; }
  friend Vec3T operator/(Vec3T v, T s) { return {v.x / s, v.y / s, v.z / s}; }
  friend Vec3T operator-(Vec3T v) { return {-v.x, -v.y, -v.z}; }
};

using Vec3 = Vec3T<double>;
#ifdef BOUR_HAVE_FLOAT128
using Vec3Q = Vec3T<__float128>;
#endif

template <typename T>
bool is_finite(const Vec3T<T>& v) {
  return detail::fp_finite(v.x) && detail::fp_finite(v.y) && detail::fp_finite(v.z);
}

template <typename T>
bool is_zero(const Vec3T<T>& v) {
  return v.x == T(0) && v.y == T(0) && v.z == T(0);
}

/// Indefinite inner product: +-x1*x2 + y1*y2 +- z1*z2 with signs from `sig`.
template <typename T>
T inner(const Vec3T<T>& a, const Vec3T<T>& b, Signature sig) {
  return sig == Signature::PPM ? a.x * b.x + a.y * b.y - a.z * b.z
                               : -a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Euclidean |v|^2, used only as a scale reference for tolerances.
template <typename T>
T euclidean_norm2(const Vec3T<T>& v) {
  return v.x * v.x + v.y * v.y + v.z * v.z;
}

/// Lorentzian cross product: the bilinear product orthogonal (in the chosen
/// metric) to both arguments. Relative to the Euclidean cross product the
/// component on the flipped axis changes sign:
///   PPM: ( a2*b3 - a3*b2,  a3*b1 - a1*b3, -(a1*b2 - a2*b1) )
///   MPP: (-(a2*b3 - a3*b2), a3*b1 - a1*b3,  a1*b2 - a2*b1  )
template <typename T>
Vec3T<T> lorentz_cross(const Vec3T<T>& a, const Vec3T<T>& b, Signature sig) {
  const T cx = a.y * b.z - a.z * b.y;
  const T cy = a.z * b.x - a.x * b.z;
  const T cz = a.x * b.y - a.y * b.x;
  return sig == Signature::PPM ? Vec3T<T>{cx, cy, -cz} : Vec3T<T>{-cx, cy, cz};
}

/// v / sqrt(|<v,v>|). Throws DegenerateNormal when v is lightlike or zero;
/// the lightlike test is relative to the Euclidean scale of v so that
/// microscopic but well-conditioned normals still normalize.
template <typename T>
Vec3T<T> normalize(const Vec3T<T>& v, Signature sig, double tol = 1e-12) {
  const T q = inner(v, v, sig);
  const T scale = euclidean_norm2(v);
  if (detail::fp_abs(q) <= T(tol) * scale || scale == T(0))
    throw DomainError(ErrorKind::DegenerateNormal,
                      "lightlike or vanishing vector cannot be normalized");
  return v / detail::fp_sqrt(detail::fp_abs(q));
}

/// Causal classification by the sign of <v,v>. The zero vector counts as
/// spacelike; `tol` is an absolute band on the quadratic form around zero.
template <typename T>
CausalCharacter causal_character(const Vec3T<T>& v, Signature sig, double tol = 1e-12) {
  if (is_zero(v)) return CausalCharacter::Spacelike;
  const T q = inner(v, v, sig);
  if (q > T(tol)) return CausalCharacter::Spacelike;
  if (q < -T(tol)) return CausalCharacter::Timelike;
  return CausalCharacter::Lightlike;
}

}  // namespace bour
