#include <doctest.h>

#include <cmath>
#include <random>

#include "bour/lorentz.hpp"

using namespace bour;

namespace {

std::mt19937 rng_for(const char* tag) {
  std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
  return std::mt19937(seq);
}

Vec3 random_vec(std::mt19937& rng, double span = 5.0) {
  std::uniform_real_distribution<double> d(-span, span);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_SUITE_BEGIN("lorentz");

TEST_CASE("inner products under both signatures") {
  CHECK(inner<double>({1, 0, 0}, {1, 0, 0}, Signature::PPM) == 1.0);
  CHECK(inner<double>({0, 0, 1}, {0, 0, 1}, Signature::PPM) == -1.0);
  CHECK(inner<double>({1, 0, 0}, {1, 0, 0}, Signature::MPP) == -1.0);
  CHECK(inner<double>({0, 0, 1}, {0, 0, 1}, Signature::MPP) == 1.0);
}

TEST_CASE("inner product is symmetric and bilinear") {
  auto rng = rng_for("inner-bilinear");
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
    const double al = coeff(rng), be = coeff(rng);
    for (auto sig : {Signature::PPM, Signature::MPP}) {
      CHECK(inner(a, b, sig) == doctest::Approx(inner(b, a, sig)).epsilon(1e-14));
      const double lhs = inner(al * a + be * b, c, sig);
      const double rhs = al * inner(a, c, sig) + be * inner(b, c, sig);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("causal classification") {
  CHECK(causal_character<double>({1, 0, 1}, Signature::PPM) == CausalCharacter::Lightlike);
  CHECK(causal_character<double>({0, 0, 1}, Signature::PPM) == CausalCharacter::Timelike);
  CHECK(causal_character<double>({0, 0, 0}, Signature::PPM) == CausalCharacter::Spacelike);
  CHECK(causal_character<double>({1, 0, 0}, Signature::MPP) == CausalCharacter::Timelike);
}

TEST_CASE("causal character is invariant under positive scaling") {
  auto rng = rng_for("causal-scale");
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const Vec3 v = random_vec(rng);
    const double s = scale(rng);
    for (auto sig : {Signature::PPM, Signature::MPP}) {
      const auto c = causal_character(v, sig);
      if (c == CausalCharacter::Lightlike) continue;  // tolerance band scales
      CHECK(causal_character(s * v, sig) == c);
    }
  }
}

TEST_CASE("cross product pinned values") {
  const Vec3 c1 = lorentz_cross<double>({1, 0, 0}, {0, 1, 0}, Signature::PPM);
  CHECK(c1.x == 0.0);
  CHECK(c1.y == 0.0);
  CHECK(c1.z == -1.0);

  const Vec3 c2 = lorentz_cross<double>({0, 1, 0}, {0, 0, 1}, Signature::MPP);
  CHECK(c2.x == -1.0);
  CHECK(c2.y == 0.0);
  CHECK(c2.z == 0.0);

  const Vec3 a{0.3, -1.2, 2.1};
  const Vec3 self = lorentz_cross(a, a, Signature::PPM);
  CHECK(is_zero(self));
}

TEST_CASE("cross product is orthogonal to both factors") {
  auto rng = rng_for("cross-orth");
  for (int i = 0; i < 500; ++i) {
    const Vec3 a = random_vec(rng), b = random_vec(rng);
    for (auto sig : {Signature::PPM, Signature::MPP}) {
      const Vec3 n = lorentz_cross(a, b, sig);
      const double scale = std::sqrt(euclidean_norm2(a) * euclidean_norm2(b)) + 1.0;
      CHECK(std::abs(inner(n, a, sig)) < 1e-12 * scale * scale);
      CHECK(std::abs(inner(n, b, sig)) < 1e-12 * scale * scale);
      // antisymmetry
      const Vec3 m = lorentz_cross(b, a, sig);
      CHECK(is_zero(Vec3{n.x + m.x, n.y + m.y, n.z + m.z}));
    }
  }
}

TEST_CASE("cross squared norm equals F^2 - EG") {
  auto rng = rng_for("cross-gram");
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = random_vec(rng), b = random_vec(rng);
    for (auto sig : {Signature::PPM, Signature::MPP}) {
      const Vec3 n = lorentz_cross(a, b, sig);
      const double lhs = inner(n, n, sig);
      const double rhs = inner(a, b, sig) * inner(a, b, sig) -
                         inner(a, a, sig) * inner(b, b, sig);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
  }
}

TEST_CASE("normalize") {
  const Vec3 u = normalize<double>({0, 0, 2}, Signature::PPM);
  CHECK(u.x == 0.0);
  CHECK(u.y == 0.0);
  CHECK(u.z == 1.0);
  CHECK(inner(u, u, Signature::PPM) == -1.0);

  const Vec3 v = normalize<double>({2, 0, 0}, Signature::MPP);
  CHECK(v.x == 1.0);
  CHECK(inner(v, v, Signature::MPP) == -1.0);

  CHECK_THROWS_AS(normalize<double>({1, 0, 1}, Signature::PPM), DomainError);
  CHECK_THROWS_AS(normalize<double>({0, 0, 0}, Signature::PPM), DomainError);

  // scale invariance of the lightlike rejection
  CHECK_THROWS_AS(normalize<double>({1e-8, 0, 1e-8}, Signature::PPM), DomainError);
}

TEST_SUITE_END();
