#include <doctest.h>

#include <cmath>
#include <random>

#include "bour/bour_maximal.hpp"
#include "bour/catalog.hpp"
#include "bour/diffgeo.hpp"
#include "bour/patches.hpp"

using namespace bour;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_SUITE_BEGIN("bour_maximal");

TEST_CASE("first fundamental form") {
  const FirstForm f = first_form(3.0, 0.5);
  CHECK(f.E == doctest::Approx(0.140625).epsilon(1e-14));
  CHECK(f.F == 0.0);
  CHECK(f.G == doctest::Approx(0.03515625).epsilon(1e-14));
  CHECK_FALSE(f.singular);

  const FirstForm g = first_form(3.0, 1.0);
  CHECK(g.E == 0.0);
  CHECK(g.singular);

  CHECK(first_form(2.0, 0.5).E == doctest::Approx(0.5625).epsilon(1e-14));
  CHECK(first_form(2.0, -0.5).E == doctest::Approx(0.5625).epsilon(1e-14));
  CHECK_THROWS_AS(first_form(1.5, -0.25), DomainError);  // fractional m, r < 0
}

TEST_CASE("gauss map") {
  const Vec3 center = gauss_map(0.0, 1.7);
  CHECK(center.x == 0.0);
  CHECK(center.y == 0.0);
  CHECK(center.z == -1.0);

  const Vec3 e = gauss_map(0.5, 0.0);
  CHECK(e.x == doctest::Approx(-4.0 / 3.0).epsilon(1e-14));
  CHECK(e.y == 0.0);
  CHECK(e.z == doctest::Approx(-5.0 / 3.0).epsilon(1e-14));
  CHECK(inner(e, e, Signature::PPM) == doctest::Approx(-1.0).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_map(1.0, 0.3), DomainError);

  auto rng = std::mt19937(31);
  std::uniform_real_distribution<double> rd(-0.95, 0.95), td(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    const Vec3 n = gauss_map(rd(rng), td(rng));
    CHECK(std::abs(inner(n, n, Signature::PPM) + 1.0) < 1e-9);
  }
}

TEST_CASE("second fundamental form") {
  const SecondForm a = second_form(3.0, 0.5, 0.0);
  CHECK(a.L == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a.M == 0.0);
  CHECK(a.N == doctest::Approx(-0.25).epsilon(1e-14));

  const SecondForm b = second_form(3.0, 0.5, kPi / 6.0);
  CHECK(std::abs(b.L) < 1e-15);
  CHECK(b.M == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(b.N) < 1e-15);
}

TEST_CASE("second form determinant identity") {
  auto rng = std::mt19937(78);
  std::uniform_real_distribution<double> rd(0.05, 0.95), td(-2 * kPi, 2 * kPi);
  for (double m : {2.0, 3.0, 4.0, 2.5, 1.5}) {
    for (int i = 0; i < 60; ++i) {
      const double r = rd(rng), t = td(rng);
      const SecondForm s = second_form(m, r, t);
      const double want = -4.0 * std::pow(r, 2.0 * m - 2.0);
      CHECK(second_form_det(s) == doctest::Approx(want).epsilon(1e-11));
    }
  }
}

TEST_CASE("curvatures") {
  const Curvatures c3 = curvatures(3.0, 0.5);
  CHECK(c3.K == doctest::Approx(50.5679012).epsilon(1e-6));
  CHECK(c3.K == doctest::Approx(4.0 / (0.25 * std::pow(0.75, 4))).epsilon(1e-13));
  CHECK(c3.H == 0.0);

  const Curvatures c2 = curvatures(2.0, 0.5);
  CHECK(c2.K == doctest::Approx(std::pow(2.0 / 0.5625, 2)).epsilon(1e-13));

  CHECK_THROWS_AS(curvatures(3.0, 1.0), DomainError);
  CHECK_THROWS_AS(curvatures(3.0, 0.0), DomainError);
  CHECK(curvatures(2.0, 0.0).K == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("catalog contents") {
  const auto cat = spacelike_catalog();
  REQUIRE(cat.size() == 11);

  auto enneper = find_by_label("enneper");
  REQUIRE(enneper);
  CHECK(enneper->m == 2.0);
  CHECK(enneper->data == "(1, ζ)");
  CHECK(enneper->r_range.lo == -1.0);
  CHECK(enneper->theta_range.hi == doctest::Approx(kPi));

  auto half = find_by_label("b1/2");
  REQUIRE(half);
  CHECK(half->m == 0.5);
  CHECK(half->data == "(ζ^-3/2, ζ)");
  CHECK(half->theta_range.lo == doctest::Approx(-2 * kPi));

  auto b4 = find_by_label("b4");
  REQUIRE(b4);
  CHECK(b4->m == 4.0);
  CHECK(b4->data == "(ζ^2, ζ)");
  CHECK(b4->theta_range.hi == doctest::Approx(2 * kPi));

  auto wide = find_by_label("b4/3");
  REQUIRE(wide);
  CHECK(wide->r_range.hi == 2.0);
  CHECK(wide->theta_range.hi == doctest::Approx(3 * kPi));

  int cartesian = 0;
  for (const auto& e : cat)
    if (e.parametrization == Parametrization::Cartesian) ++cartesian;
  CHECK(cartesian == 1);
}

TEST_CASE("oracle equivalence across the spacelike catalog") {
  // Closed forms against the finite-difference oracle at quasi-random
  // interior points, orientation-aware for the second form.
  auto rng = std::mt19937(1234);
  for (const auto& entry : spacelike_catalog()) {
    if (entry.parametrization == Parametrization::Cartesian) continue;
    const SurfacePatch patch = make_patch(entry);
    std::uniform_real_distribution<double> rd(patch.s_range.lo, patch.s_range.hi);
    std::uniform_real_distribution<double> td(patch.t_range.lo, patch.t_range.hi);
    int tested = 0;
    while (tested < 100) {
      const double r = rd(rng), t = td(rng);
      if (patch.in_band(r, t)) continue;
      if (std::abs(r) < 0.05 || std::abs(std::abs(r) - 1.0) < 0.05) continue;
      const FormSample o = fundamental_forms(patch, r, t);
      const FirstForm fc = first_form(entry.m, r);
      const SecondForm sc = second_form(entry.m, r, t);
      const Vec3 ec = gauss_map(r, t);

      const double fscale = std::max({std::abs(fc.E), std::abs(fc.G), 1e-12});
      CHECK(std::abs(o.E - fc.E) < 1e-5 * fscale);
      CHECK(std::abs(o.F - fc.F) < 1e-5 * fscale);
      CHECK(std::abs(o.G - fc.G) < 1e-5 * fscale);

      const double sign =
          (o.gauss.x * ec.x + o.gauss.y * ec.y + o.gauss.z * ec.z) >= 0 ? 1.0 : -1.0;
      const double sscale =
          std::max({std::abs(sc.L), std::abs(sc.M), std::abs(sc.N), 1e-12});
      CHECK(std::abs(o.L - sign * sc.L) < 1e-5 * sscale);
      CHECK(std::abs(o.M - sign * sc.M) < 1e-5 * sscale);
      CHECK(std::abs(o.N - sign * sc.N) < 1e-5 * sscale);

      // spacelike certificate, maximality, K agreement
      CHECK(o.det_i > 0.0);
      const Curvatures kc = curvatures(entry.m, r);
      CHECK(kc.K > 0.0);
      CHECK(std::abs(o.K - kc.K) < 1e-4 * kc.K);
      CHECK(std::abs(o.H) < 1e-6 * (1.0 + std::sqrt(kc.K)));
      ++tested;
    }
  }
}

TEST_SUITE_END();
