#pragma once

// The named surfaces this project reproduces, with their published
// parameter domains and figure numbers. Eleven spacelike entries (the m = 3
// surface appears in both polar and Cartesian parametrizations) and six
// timelike entries, seventeen in all.

#include <optional>
#include <string>
#include <vector>

namespace bour {

enum class Family { Spacelike, Timelike };

enum class Parametrization { Polar, Cartesian };

struct Interval {
  double lo{0.0}, hi{0.0};
  double width() const { return hi - lo; }
};

struct BourParams {
  std::string label;
  Family family{Family::Spacelike};
  double m{0.0};
  Interval r_range;      // u-range when parametrization is Cartesian
  Interval theta_range;  // v-range when parametrization is Cartesian
  Parametrization parametrization{Parametrization::Polar};
  std::string data;      // generating monomial data, for listings
  std::vector<int> figures;
};

inline const char* to_string(Family f) {
  return f == Family::Spacelike ? "spacelike" : "timelike";
}

/// The eleven spacelike entries in catalog order.
std::vector<BourParams> spacelike_catalog();

/// The six timelike entries in catalog order.
std::vector<BourParams> timelike_catalog();

/// Spacelike followed by timelike; 17 entries.
std::vector<BourParams> full_catalog();

/// Lookup by label (exact) across the full catalog.
std::optional<BourParams> find_by_label(const std::string& label);

/// First catalog entry of the family with the given value m (if any).
std::optional<BourParams> find_by_value(Family family, double m,
                                        Parametrization parametrization = Parametrization::Polar);

/// Entry reproducing a given figure number (1..20). Figure 15 resolves to
/// the timelike m = 3 entry switched to Cartesian parameters on [-1,1]^2.
std::optional<BourParams> figure_entry(int figure);

}  // namespace bour
