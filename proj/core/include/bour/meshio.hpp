#pragma once

// Grid sampling of catalog surfaces and export to OBJ / CSV / SVG.
// Exports are deterministic byte-for-byte for identical inputs.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bour/catalog.hpp"
#include "bour/diffgeo.hpp"
#include "bour/lorentz.hpp"

namespace bour {

enum class CellFlag : std::uint8_t { Ok, Singular, OutOfBranch };

inline const char* to_string(CellFlag f) {
  switch (f) {
    case CellFlag::Ok:          return "ok";
    case CellFlag::Singular:    return "singular";
    case CellFlag::OutOfBranch: return "out_of_branch";
  }
  return "unknown";
}

/// Row-major ns x nt vertex grid with implicit quad connectivity.
/// Vertices are always finite; curvature may be NaN at flagged vertices and
/// flagged cells are excluded from faces and statistics.
struct MeshGrid {
  std::string name;
  int ns{0}, nt{0};
  std::vector<Vec3> vertices;                   // ns*nt, row-major (s major)
  std::vector<std::pair<double, double>> params;
  std::vector<double> k_field;                  // NaN = undefined
  std::vector<CellFlag> vertex_flags;           // ns*nt
  std::vector<CellFlag> cell_flags;             // (ns-1)*(nt-1)
  bool clipped{false};
  std::string clip_note;

  int vertex_index(int i, int j) const { return i * nt + j; }
  int cell_index(int i, int j) const { return i * (nt - 1) + j; }
  int ok_cells() const;
  int flagged_cells() const;
};

/// Sample a catalog entry on a uniform ns x nt parameter grid over its
/// domain, clipped to the realizable sub-domain for fractional m (recorded
/// in clip_note). Vertices come from the closed-form evaluator, k_field
/// from the closed-form Gaussian curvature with singular points flagged.
/// Throws EmptyRealizableDomain when clipping empties the grid.
MeshGrid sample(const BourParams& entry, int ns, int nt,
                const OracleConfig& cfg = {});

/// Same, but over caller-supplied parameter ranges instead of the entry's.
MeshGrid sample_range(const BourParams& entry, Interval s_range, Interval t_range,
                      int ns, int nt, const OracleConfig& cfg = {});

/// ASCII OBJ: "v x y z" per vertex (fixed 9 decimals, row-major), quad
/// faces "f a b c d" with 1-based indices, flagged cells omitted.
void export_obj(const MeshGrid& mesh, const std::filesystem::path& path);

/// CSV with header "s,t,x,y,z,K,flag", one row per vertex, row-major.
void export_csv(const MeshGrid& mesh, const std::filesystem::path& path);

enum class ProjectionPlane { XY, XZ, YZ };

inline const char* to_string(ProjectionPlane p) {
  switch (p) {
    case ProjectionPlane::XY: return "xy";
    case ProjectionPlane::XZ: return "xz";
    case ProjectionPlane::YZ: return "yz";
  }
  return "?";
}

/// SVG 1.1 wireframe of the grid projected orthographically onto a
/// coordinate plane: one polyline per grid row and per grid column,
/// auto-scaled with a 5% margin.
void export_svg_projection(const MeshGrid& mesh, ProjectionPlane plane,
                           const std::filesystem::path& path);

}  // namespace bour
