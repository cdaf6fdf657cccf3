#pragma once

// Glue between the catalog and the oracle: builds a SurfacePatch (evaluator,
// singular bands, closed-form references) for any catalog entry, plus the
// conjugate of a timelike entry and a handful of reference patches with
// known constant curvature used as oracle self-tests.

#include "bour/catalog.hpp"
#include "bour/diffgeo.hpp"

namespace bour {

/// Patch for a catalog entry on its (branch-clipped) catalog domain.
/// The patch carries closed-form K and Gauss-map callbacks and, when built
/// with binary128 support, a quad evaluator for the same immersion.
SurfacePatch make_patch(const BourParams& entry);

/// Same immersion family, custom parameter ranges.
SurfacePatch make_patch_range(const BourParams& entry, Interval s_range,
                              Interval t_range);

/// Conjugate of a timelike entry: omega(u) - psi(v) in the entry's polar
/// parameters. No closed-form curvature references are attached.
SurfacePatch make_conjugate_patch(const BourParams& entry);

/// Clip an entry's domain to where the closed forms are real-valued.
/// Returns false (and sets a note) when nothing remains.
bool realizable_domain(const BourParams& entry, Interval& s_range,
                       Interval& t_range, std::string& note);

/// The entry's immersion and closed-form Gaussian curvature as plain
/// callables (shared by the mesh sampler).
std::function<Vec3(double, double)> closed_immersion(const BourParams& entry);
std::function<double(double, double)> closed_curvature(const BourParams& entry);

/// Oracle self-test anchors, independent of the family:
/// hyperbolic plane x^2+y^2-z^2 = -1 under PPM (K = -1, H = -1) ...
SurfacePatch hyperbolic_plane_patch();
/// ... de Sitter plane -x^2+y^2+z^2 = +1 under MPP (K = +1, H = +1) ...
SurfacePatch de_sitter_patch();
/// ... and the Euclidean unit sphere under PPM restricted to a spacelike
/// cap, where the induced curvature is K = -1/cos^2(2 phi) (not constant).
SurfacePatch sphere_cap_patch();

}  // namespace bour
