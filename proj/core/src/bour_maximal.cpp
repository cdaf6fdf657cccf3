#include "bour/bour_maximal.hpp"

#include <cmath>

#include "bour/detail/closed_forms.hpp"
#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"

namespace bour {

using detail::real_pow;

FirstForm first_form(double m, double r) {
  detail::guard_family_value(m);
  // The doubled exponents 2m-4, 2m-2 can be integers for half-integer m,
  // but the immersion itself is only real for r > 0 there.
  if (r < 0.0 && !detail::is_integer_exponent(m))
    throw DomainError(ErrorKind::BranchDomain,
                      "fractional family value needs r > 0");
  if (r == 0.0 && 2.0 * m - 4.0 < 0.0)
    throw DomainError(ErrorKind::SingularPoint,
                      "first form diverges at r = 0 for m < 2");
  const double q = 1.0 - r * r;
  FirstForm f;
  f.E = real_pow(r, 2.0 * m - 4.0) * q * q;
  f.F = 0.0;
  f.G = real_pow(r, 2.0 * m - 2.0) * q * q;
  f.singular = !(std::isfinite(f.E) && std::isfinite(f.G)) || f.E * f.G == 0.0;
  return f;
}

Vec3 gauss_map(double r, double theta) {
  const double d = r * r - 1.0;
  if (d == 0.0)
    throw DomainError(ErrorKind::SingularPoint, "Gauss map undefined at r = +-1");
  return {2.0 * r * std::cos(theta) / d, 2.0 * r * std::sin(theta) / d,
          (r * r + 1.0) / d};
}

SecondForm second_form(double m, double r, double theta) {
  detail::guard_family_value(m);
  if (r == 0.0 && m < 2.0)
    throw DomainError(ErrorKind::SingularPoint,
                      "second form diverges at r = 0 for m < 2");
  SecondForm s;
  s.L = 2.0 * real_pow(r, m - 2.0) * std::cos(m * theta);
  s.M = -2.0 * real_pow(r, m - 1.0) * std::sin(m * theta);
  s.N = -2.0 * real_pow(r, m) * std::cos(m * theta);
  const FirstForm f = first_form(m, r);
  s.singular = f.singular || !(std::isfinite(s.L) && std::isfinite(s.M) &&
                               std::isfinite(s.N));
  return s;
}

Curvatures curvatures(double m, double r) {
  detail::guard_family_value(m);
  const double q = 1.0 - r * r;
  if (q == 0.0)
    throw DomainError(ErrorKind::SingularPoint, "curvature blows up at r = +-1");
  if (r == 0.0 && m > 2.0)
    throw DomainError(ErrorKind::SingularPoint, "curvature blows up at r = 0");
  const double root = 2.0 * real_pow(r, 2.0 - m) / (q * q);
  const double k = root * root;
  if (!std::isfinite(k))
    throw DomainError(ErrorKind::SingularPoint, "curvature not finite here");
  return {k, 0.0};
}

}  // namespace bour
