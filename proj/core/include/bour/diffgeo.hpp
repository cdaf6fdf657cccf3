#pragma once

// The independent numeric oracle. Given nothing but an opaque parametric
// map (s,t) -> R^3 and a metric signature, it recovers the fundamental
// forms, Gauss map and curvatures by central finite differences, and scans
// whole parameter grids to certify claims made by closed-form evaluators.
//
// Numerical notes that shape the API:
//  * First and second derivatives use separate steps; the second-derivative
//    step is re-evaluated at h and h/2 and Richardson-extrapolated, and the
//    spread between the two estimates yields a per-point noise bound for H.
//    A point only enters the mean-curvature certificate when that bound is
//    comfortably below the requested tolerance.
//  * Degeneracy of det I is judged relative to |E||G| + F^2, not on an
//    absolute scale, so microscopic but well-conditioned surfaces (the
//    timelike m = 5 example lives at coordinate scale ~1e-11) still verify.
//  * When built with binary128 support a patch can carry a quad-precision
//    evaluator; scans then run the stencils in binary128, which is what
//    makes |H| < 1e-6 checkable on the microscopic domains.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bour/catalog.hpp"
#include "bour/lorentz.hpp"

namespace bour {

struct OracleConfig {
  double step = 1e-5;           // first-derivative step, scaled per direction
  double step2 = 2.5e-4;        // second-derivative step (double precision path)
  double degeneracy_tol = 1e-10;// relative floor on |det I| vs |E||G| + F^2
  double h_tol = 1e-6;          // mean-curvature certificate target
  int threads = 0;              // scan parallelism; 0 = hardware concurrency
};

enum class Precision { Auto, Fp64, Fp128 };

struct SingularBand {
  std::string description;
  std::function<bool(double, double)> contains;
};

/// An opaque parametric patch plus the metadata the oracle needs. The
/// closed-form callbacks are optional references used only for residual
/// reporting; the oracle's own derivatives never touch them.
struct SurfacePatch {
  std::string name;
  std::function<Vec3(double, double)> eval;
  Interval s_range, t_range;
  Signature sig{Signature::PPM};
  std::vector<SingularBand> singular_loci;

  std::function<double(double, double)> k_closed;    // optional
  std::function<double(double, double)> k_alt;       // optional alternative formula
  std::function<Vec3(double, double)> gauss_closed;  // optional
#ifdef BOUR_HAVE_FLOAT128
  std::function<Vec3Q(__float128, __float128)> eval_q;  // optional quad path
#endif

  bool in_band(double s, double t) const {
    for (const auto& b : singular_loci)
      if (b.contains(s, t)) return true;
    return false;
  }
};

/// One fully assembled sample of the surface geometry at a parameter point.
struct FormSample {
  double E{}, F{}, G{};
  double L{}, M{}, N{};
  Vec3 gauss{};
  double K{}, H{};
  CausalCharacter character{CausalCharacter::Spacelike};
  double det_i{}, det_ii{};
};

/// Central-difference first derivatives (x_s, x_t); O(h^2).
/// Throws DomainEdge when the stencil leaves the patch domain.
std::pair<Vec3, Vec3> jacobian(const SurfacePatch& patch, double s, double t,
                               const OracleConfig& cfg = {});

/// Full form sample at one point: E,F,G from first derivatives, normalized
/// Lorentzian cross-product normal, L,M,N from second differences, K and H
/// by the convention below. Throws DegenerateNormal / DomainEdge.
FormSample fundamental_forms(const SurfacePatch& patch, double s, double t,
                             const OracleConfig& cfg = {});

/// Curvatures from an assembled sample:
///   det I > 0 (spacelike, normal timelike, eps = -1):
///       K = -det II / det I,  H = -(EN - 2FM + GL) / (2 det I)
///   det I < 0 (timelike, normal spacelike):
///       K =  det II / det I,  H =  (EN - 2FM + GL) / (2 det I)
std::pair<double, double> curvatures_numeric(const FormSample& sample, Signature sig);

/// Aggregate verdict of a grid scan. Nodes are classified as banded
/// (inside declared singular bands), degenerate (relative det-I floor), or
/// ok; ok nodes additionally pass or fail the H noise gate.
struct ScanReport {
  std::string surface;
  Signature sig{Signature::PPM};
  int ns{}, nt{};
  Precision used{Precision::Fp64};

  int nodes_total{};
  int nodes_banded{};
  int nodes_degenerate{};
  int nodes_ok{};
  int nodes_h_certified{};

  int det_pos{}, det_neg{}, det_zero{};

  double max_abs_h = 0.0;        // over H-certified nodes
  double max_h_noise = 0.0;      // worst accepted noise bound
  double min_h_noise = -1.0;     // best noise bound over all ok nodes
  double max_k_rel = 0.0;        // vs k_closed, over H-certified nodes
  double max_k_alt_rel = 0.0;    // vs k_alt
  double min_k_alt_rel = -1.0;   // best agreement the alternative ever reaches
  double max_gauss_component = 0.0;  // |e_oracle - s * e_closed|_inf
  double max_gauss_norm = 0.0;       // closed-form unit-normal residual

  bool orientation_coherent = true;  // no sign flip between adjacent ok nodes
  std::vector<int> component_signs;  // per connected component of ok nodes

  double sample_k_oracle = 0.0;  // oracle K at the first certified node
  double sample_k_closed = 0.0;

  bool h_pass(double tol) const {
    return nodes_h_certified > 0 && max_abs_h < tol;
  }
  bool det_sign_uniform() const {
    return nodes_ok > 0 && det_zero == 0 && (det_pos == 0 || det_neg == 0);
  }
};

/// Evaluate the oracle over an ns x nt grid spanning the patch domain
/// (inset so every stencil stays inside), skipping singular bands.
/// Deterministic for fixed inputs regardless of thread count.
ScanReport scan(const SurfacePatch& patch, int ns, int nt,
                const OracleConfig& cfg = {}, Precision precision = Precision::Auto);

}  // namespace bour
