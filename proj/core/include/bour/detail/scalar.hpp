#pragma once

// Scalar shims so the closed-form evaluators and the finite-difference
// oracle can run in double or, when available, binary128. Everything here
// is overload-resolved; no <cmath> macros leak into user code.

#include <cmath>
#include <cstdint>
#include <limits>

#include "bour/errors.hpp"

#ifdef BOUR_HAVE_FLOAT128
#include <quadmath.h>
#endif

namespace bour::detail {

inline double fp_cos(double x) { return std::cos(x); }
inline double fp_sin(double x) { return std::sin(x); }
inline double fp_sqrt(double x) { return std::sqrt(x); }
inline double fp_pow(double x, double y) { return std::pow(x, y); }
inline double fp_abs(double x) { return std::fabs(x); }
inline bool fp_finite(double x) { return std::isfinite(x); }

inline long double fp_cos(long double x) { return std::cos(x); }
inline long double fp_sin(long double x) { return std::sin(x); }
inline long double fp_sqrt(long double x) { return std::sqrt(x); }
inline long double fp_pow(long double x, long double y) { return std::pow(x, y); }
inline long double fp_abs(long double x) { return std::fabs(x); }
inline bool fp_finite(long double x) { return std::isfinite(x); }

#ifdef BOUR_HAVE_FLOAT128
inline __float128 fp_cos(__float128 x) { return ::cosq(x); }
inline __float128 fp_sin(__float128 x) { return ::sinq(x); }
inline __float128 fp_sqrt(__float128 x) { return ::sqrtq(x); }
inline __float128 fp_pow(__float128 x, __float128 y) { return ::powq(x, y); }
inline __float128 fp_abs(__float128 x) { return ::fabsq(x); }
inline bool fp_finite(__float128 x) { return ::isinfq(x) == 0 && ::isnanq(x) == 0; }
#endif

template <typename T>
constexpr T fp_epsilon() {
  return std::numeric_limits<T>::epsilon();
}
#ifdef BOUR_HAVE_FLOAT128
template <>
constexpr __float128 fp_epsilon<__float128>() {
  return 0x1p-112;  // 113-bit significand
}
#endif

/// True when `e` is an integer (up to addressable parity range).
inline bool is_integer_exponent(double e) {
  return std::abs(e) < 9.0e15 && e == std::nearbyint(e);
}

/// Real power r^e with the sign rules used throughout:
///   r > 0             -> pow(r, e)
///   r = 0, e > 0      -> 0;  e = 0 -> 1;  e < 0 -> BranchDomain
///   r < 0, integer e  -> sign(parity) * pow(-r, e)
///   r < 0, else       -> BranchDomain (never a silent NaN)
template <typename T>
T real_pow(T r, double e) {
  if (r > T(0)) return fp_pow(r, T(e));
  if (r == T(0)) {
    if (e > 0.0) return T(0);
    if (e == 0.0) return T(1);
    throw DomainError(ErrorKind::BranchDomain, "negative power of zero radius");
  }
  if (!is_integer_exponent(e))
    throw DomainError(ErrorKind::BranchDomain,
                      "fractional power of a negative argument");
  const T mag = fp_pow(-r, T(e));
  const bool odd = (static_cast<std::int64_t>(std::llround(e)) & 1) != 0;
  return odd ? -mag : mag;
}

}  // namespace bour::detail
