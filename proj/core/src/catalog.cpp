#include "bour/catalog.hpp"

#include <cmath>

namespace bour {

namespace {

const double kPi = 3.14159265358979323846;

BourParams entry(std::string label, Family fam, double m, Interval r,
                 Interval t, std::string data, std::vector<int> figs,
                 Parametrization par = Parametrization::Polar) {
  BourParams e;
  e.label = std::move(label);
  e.family = fam;
  e.m = m;
  e.r_range = r;
  e.theta_range = t;
  e.parametrization = par;
  e.data = std::move(data);
  e.figures = std::move(figs);
  return e;
}

}  // namespace

std::vector<BourParams> spacelike_catalog() {
  const Family S = Family::Spacelike;
  return {
      entry("b3", S, 3.0, {-1, 1}, {0, kPi}, "(ζ, ζ)", {1, 2}),
      entry("b3-cartesian", S, 3.0, {-1, 1}, {-1, 1}, "(ζ, ζ)", {3, 4},
            Parametrization::Cartesian),
      entry("enneper", S, 2.0, {-1, 1}, {0, kPi}, "(1, ζ)", {5}),
      entry("enneper-wide", S, 2.0, {-3, 3}, {0, kPi}, "(1, ζ)", {6}),
      entry("b1/2", S, 0.5, {-1, 1}, {-2 * kPi, 2 * kPi}, "(ζ^-3/2, ζ)", {7}),
      entry("b3/2-wide", S, 1.5, {-3, 3}, {-2 * kPi, 2 * kPi}, "(ζ^-1/2, ζ)", {8}),
      entry("b3/2", S, 1.5, {-1, 1}, {-2 * kPi, 2 * kPi}, "(ζ^-1/2, ζ)", {9}),
      entry("b2/3", S, 2.0 / 3.0, {-1, 1}, {-3 * kPi, 3 * kPi}, "(ζ^-4/3, ζ)", {10}),
      entry("b4/3", S, 4.0 / 3.0, {-2, 2}, {-3 * kPi, 3 * kPi}, "(ζ^-2/3, ζ)", {11}),
      entry("b5/2", S, 2.5, {-1, 1}, {-2 * kPi, 2 * kPi}, "(ζ^1/2, ζ)", {12}),
      entry("b4", S, 4.0, {-1, 1}, {0, 2 * kPi}, "(ζ^2, ζ)", {13}),
  };
}

std::vector<BourParams> timelike_catalog() {
  const Family T = Family::Timelike;
  return {
      entry("t-b3", T, 3.0, {-1, 1}, {0, kPi}, "(u, u), (v, v)", {14, 15}),
      entry("t-b2", T, 2.0, {-2, 2}, {-kPi / 2, kPi / 2}, "(1, u), (1, v)", {16}),
      entry("t-b2-wide", T, 2.0, {-3, 3}, {-kPi / 2, kPi / 2}, "(1, u), (1, v)", {17}),
      entry("t-b4", T, 4.0, {-1, 1}, {0, kPi}, "(u^2, u), (v^2, v)", {18}),
      entry("t-b4-wide", T, 4.0, {-2, 2}, {0, kPi / 2}, "(u^2, u), (v^2, v)", {19}),
      entry("t-b5", T, 5.0, {-0.003, 0.003}, {0, kPi}, "(u^3, u), (v^3, v)", {20}),
  };
}

std::vector<BourParams> full_catalog() {
  auto all = spacelike_catalog();
  auto t = timelike_catalog();
  all.insert(all.end(), t.begin(), t.end());
  return all;
}

std::optional<BourParams> find_by_label(const std::string& label) {
  for (auto& e : full_catalog())
    if (e.label == label) return e;
  return std::nullopt;
}

std::optional<BourParams> find_by_value(Family family, double m,
                                        Parametrization parametrization) {
  for (auto& e : full_catalog())
    if (e.family == family && std::abs(e.m - m) < 1e-12 &&
        e.parametrization == parametrization)
      return e;
  return std::nullopt;
}

std::optional<BourParams> figure_entry(int figure) {
  if (figure == 15) {
    // Cartesian view of the timelike m = 3 surface on [-1,1]^2.
    auto e = *find_by_label("t-b3");
    e.label = "t-b3-cartesian";
    e.parametrization = Parametrization::Cartesian;
    e.r_range = {-1, 1};
    e.theta_range = {-1, 1};
    e.figures = {15};
    return e;
  }
  for (auto& e : full_catalog())
    for (int f : e.figures)
      if (f == figure) return e;
  return std::nullopt;
}

}  // namespace bour
