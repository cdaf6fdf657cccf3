#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "bour/catalog.hpp"
#include "bour/diffgeo.hpp"
#include "bour/patches.hpp"
#include "bour/weierstrass.hpp"

using namespace bour;

namespace {
const double kPi = 3.14159265358979323846;

void check_vec(const Vec3& got, const Vec3& want, double tol) {
  CHECK(std::abs(got.x - want.x) <= tol);
  CHECK(std::abs(got.y - want.y) <= tol);
  CHECK(std::abs(got.z - want.z) <= tol);
}
}  // namespace

TEST_SUITE_BEGIN("weierstrass");

TEST_CASE("integrand at pinned points") {
  // p = 1, zeta = 1: (F(1+G^2), iF(1-G^2), 2FG) = (2, 0, 2)
  auto v1 = integrand(WeierstrassData{{1, 0}, 1.0}, {1.0, 0.0});
  CHECK(std::abs(v1[0] - std::complex<double>(2, 0)) < 1e-15);
  CHECK(std::abs(v1[1]) < 1e-15);
  CHECK(std::abs(v1[2] - std::complex<double>(2, 0)) < 1e-15);

  // p = 0, zeta = i: (0, 2i, 2i)
  auto v2 = integrand(WeierstrassData{{1, 0}, 0.0}, {1.0, kPi / 2});
  CHECK(std::abs(v2[0]) < 1e-15);
  CHECK(std::abs(v2[1] - std::complex<double>(0, 2)) < 1e-15);
  CHECK(std::abs(v2[2] - std::complex<double>(0, 2)) < 1e-15);

  // p = 1, zeta = 0.5: (0.625, 0.375i, 0.5)
  auto v3 = integrand(WeierstrassData{{1, 0}, 1.0}, {0.5, 0.0});
  CHECK(std::abs(v3[0] - std::complex<double>(0.625, 0)) < 1e-15);
  CHECK(std::abs(v3[1] - std::complex<double>(0, 0.375)) < 1e-15);
  CHECK(std::abs(v3[2] - std::complex<double>(0.5, 0)) < 1e-15);

  CHECK_THROWS_AS(integrand(WeierstrassData{{1, 0}, -1.5}, {0.0, 0.0}), DomainError);
}

TEST_CASE("closed form at pinned points") {
  check_vec(bour_closed_form(3.0, {1.0, 0.0}), {0.75, 0.0, 2.0 / 3.0}, 1e-15);
  check_vec(bour_closed_form(3.0, {0.0, 1.234}), {0, 0, 0}, 0.0);
  // m = 2 at (1, pi/2): (0, -4/3, -1)
  check_vec(bour_closed_form(2.0, {1.0, kPi / 2}), {0.0, -4.0 / 3.0, -1.0}, 1e-14);
}

TEST_CASE("excluded family values and branch domain") {
  for (double m : {-1.0, 0.0, 1.0})
    CHECK_THROWS_AS(bour_closed_form(m, {0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(bour_closed_form(0.5, {-0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(bour_closed_form(0.5, {0.0, 0.0}), DomainError);
  CHECK_NOTHROW(bour_closed_form(2.0, {-0.5, 0.0}));  // integer m, negative r fine
}

TEST_CASE("cartesian m=3 surface at pinned points") {
  check_vec(b3_cartesian(0, 0), {0, 0, 0}, 0.0);
  check_vec(b3_cartesian(1, 0), {0.75, 0, 2.0 / 3.0}, 1e-15);
  check_vec(b3_cartesian(1, 1), {-1.0, -1.0, -4.0 / 3.0}, 1e-15);
}

TEST_CASE("cartesian parameters are zeta = u + iv exactly") {
  // The polar and Cartesian forms must agree verbatim under
  // u = r cos(theta), v = r sin(theta); no extra sign anywhere.
  auto rng = std::mt19937(20240811);
  std::uniform_real_distribution<double> rd(0.0, 1.5), td(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double r = rd(rng), t = td(rng);
    const Vec3 p = bour_closed_form(3.0, {r, t});
    const Vec3 c = b3_cartesian(r * std::cos(t), r * std::sin(t));
    worst = std::max({worst, std::abs(p.x - c.x), std::abs(p.y - c.y),
                      std::abs(p.z - c.z)});
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("cartesian coordinates are harmonic") {
  // Fourth-order second-difference per axis; the second-order stencil's own
  // truncation for the first coordinate is exactly h^2, which would sit on
  // the bound instead of testing the surface.
  const double h = 1e-3;
  auto d2 = [h](auto f) {
    return (-f(2.0) + 16.0 * f(1.0) - 30.0 * f(0.0) + 16.0 * f(-1.0) - f(-2.0)) /
           (12.0 * h * h);
  };
  auto rng = std::mt19937(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double u = d(rng), v = d(rng);
    const Vec3 lap = d2([&](double k) { return b3_cartesian(u + k * h, v); }) +
                     d2([&](double k) { return b3_cartesian(u, v + k * h); });
    CHECK(std::abs(lap.x) < 1e-6);
    CHECK(std::abs(lap.y) < 1e-6);
    CHECK(std::abs(lap.z) < 1e-6);
  }
}

TEST_CASE("conformality of the cartesian patch away from singular loci") {
  auto entry = *find_by_label("b3-cartesian");
  auto patch = make_patch_range(entry, {-1.3, 1.3}, {-1.3, 1.3});
  auto rng = std::mt19937(99);
  std::uniform_real_distribution<double> d(-1.1, 1.1);
  int tested = 0;
  while (tested < 60) {
    const double u = d(rng), v = d(rng);
    const double rho = std::hypot(u, v);
    if (rho < 0.2 || std::abs(rho - 1.0) < 0.2) continue;
    const FormSample fs = fundamental_forms(patch, u, v);
    CHECK(std::abs(fs.E - fs.G) < 1e-8 * std::abs(fs.E));
    CHECK(std::abs(fs.F) < 1e-8 * std::abs(fs.E));
    // E = G = rho^2 (rho^2 - 1)^2 in these parameters
    const double rho2 = u * u + v * v;
    const double want = rho2 * (rho2 - 1.0) * (rho2 - 1.0);
    CHECK(std::abs(fs.E - want) < 1e-5 * want);
    ++tested;
  }
}

TEST_CASE("quadrature reproduces the closed form") {
  const ComplexParam base = default_base(1.0);
  // anchored at the default base near the origin
  const Vec3 v = integrate_numeric(WeierstrassData::bour(3.0), {1.0, 0.0}, base, 512);
  check_vec(v, {0.75, 0.0, 2.0 / 3.0}, 1e-8);

  auto rng = std::mt19937(424242);
  std::uniform_real_distribution<double> rd(0.05, 0.95), td(-kPi, kPi);
  for (double m : {2.0, 3.0, 4.0}) {
    const WeierstrassData data = WeierstrassData::bour(m);
    const ComplexParam b = default_base(data.exponent);
    const Vec3 anchor = bour_closed_form(m, b);
    for (int i = 0; i < 50; ++i) {
      const ComplexParam z{rd(rng), td(rng)};
      const Vec3 num = integrate_numeric(data, z, b, 512);
      const Vec3 want = bour_closed_form(m, z) - anchor;
      CHECK(std::abs(num.x - want.x) < 1e-7);
      CHECK(std::abs(num.y - want.y) < 1e-7);
      CHECK(std::abs(num.z - want.z) < 1e-7);
    }
  }
}

TEST_CASE("quadrature edge cases") {
  const WeierstrassData data = WeierstrassData::bour(3.0);
  const Vec3 zero = integrate_numeric(data, {0.7, 0.3}, {0.7, 0.3}, 64);
  CHECK(is_zero(zero));

  CHECK_THROWS_AS(integrate_numeric(data, {1.0, 0.0}, {0.5, 0.0}, 4), DomainError);
  // negative exponent with a path through the origin
  const WeierstrassData neg = WeierstrassData::bour(0.5);
  CHECK_THROWS_AS(integrate_numeric(neg, {0.0, 0.0}, {1.0, 0.0}, 64), DomainError);
  CHECK_NOTHROW(integrate_numeric(neg, {0.5, 1.0}, {1.0, 0.0}, 64));
}

TEST_CASE("vanishing coefficient and negative radius are rejected") {
  const WeierstrassData bad{{0.0, 0.0}, 1.0};
  CHECK_THROWS_AS(integrand(bad, {0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(integrate_numeric(bad, {0.5, 0.0}, {1.0, 0.0}, 64), DomainError);

  const WeierstrassData ok = WeierstrassData::bour(3.0);
  CHECK_THROWS_AS(integrand(ok, {-0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(integrate_numeric(ok, {-0.5, 0.0}, {1.0, 0.0}, 64), DomainError);
}

TEST_CASE("quadrature winding stays on the branch") {
  // Fractional exponent, |theta| beyond pi: the polar-power evaluation must
  // follow the sweep, matching the closed form's winding convention.
  const WeierstrassData data = WeierstrassData::bour(2.5);
  const ComplexParam b{1.0, 0.0};
  const Vec3 anchor = bour_closed_form(2.5, b);
  for (double theta : {2.0, 4.0, -5.0}) {
    const ComplexParam z{0.8, theta};
    const Vec3 num = integrate_numeric(data, z, b, 512);
    const Vec3 want = bour_closed_form(2.5, z) - anchor;
    CHECK(std::abs(num.x - want.x) < 1e-8);
    CHECK(std::abs(num.y - want.y) < 1e-8);
    CHECK(std::abs(num.z - want.z) < 1e-8);
  }
}

TEST_SUITE_END();
