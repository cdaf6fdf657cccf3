#pragma once

// Closed-form geometry of the spacelike family under diag(+,+,-):
// fundamental forms, Gauss map and curvatures, all functions of m and the
// polar parameters. det I > 0 away from r in {0, +-1}; H vanishes
// identically, K > 0.

#include "bour/lorentz.hpp"

namespace bour {

struct FirstForm {
  double E{}, F{}, G{};
  bool singular{false};  // det I collapsed (r at 0 or +-1); values are as computed
};

struct SecondForm {
  double L{}, M{}, N{};
  bool singular{false};
};

struct Curvatures {
  double K{};
  double H{};  // identically zero for every family member
};

/// E = r^{2m-4}(1-r^2)^2, F = 0, G = r^{2m-2}(1-r^2)^2.
FirstForm first_form(double m, double r);

/// (2r cos t, 2r sin t, r^2+1) / (r^2-1); unit timelike under PPM.
/// Throws SingularPoint at r = +-1.
Vec3 gauss_map(double r, double theta);

/// L = 2 r^{m-2} cos(mt), M = -2 r^{m-1} sin(mt), N = -2 r^m cos(mt);
/// det II = L N - M^2 = -4 r^{2m-2}.
SecondForm second_form(double m, double r, double theta);

/// K = (2 r^{2-m} / (1-r^2)^2)^2, H = 0. Throws SingularPoint where the
/// value is not finite (r at 0 with m > 2, or r at +-1).
Curvatures curvatures(double m, double r);

inline double first_form_det(const FirstForm& f) { return f.E * f.G - f.F * f.F; }
inline double second_form_det(const SecondForm& s) { return s.L * s.N - s.M * s.M; }

}  // namespace bour
