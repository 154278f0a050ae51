#pragma once

#include "mwt/geom.hpp"

namespace fx {

inline mwt::Polygon square() { return mwt::Polygon::from_points({{0, 0}, {4, 0}, {4, 4}, {0, 4}}); }

inline mwt::Polygon unotch() {
  return mwt::Polygon::from_points({{0, 0}, {8, 0}, {8, 6}, {5, 6}, {4, 2}, {3, 6}, {0, 6}});
}

// Reflex vertices: 2 = (6,4), 7 = (2,2).
inline mwt::Polygon dbl() {
  return mwt::Polygon::from_points(
      {{0, 0}, {5, 0}, {6, 4}, {7, 0}, {8, 0}, {8, 6}, {3, 6}, {2, 2}, {1, 6}, {0, 6}});
}

inline constexpr double kValidityDeg = 75.96375653207352;  // atan(4)

}  // namespace fx
