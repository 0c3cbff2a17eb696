#pragma once

#include <utility>
#include <vector>

#include "polyrecon/model.hpp"

namespace polyrecon::fixtures {

inline Polygon tri() { return Polygon{{{0, 0}, {1, 0}, {0, 1}}}; }

inline Polygon square() { return Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

// L-shaped hexagon; v3 is the reflex corner.
inline Polygon hexl() { return Polygon{{{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}}}; }

inline std::vector<std::pair<int, int>> hexl_edges() {
  return {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
          {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
}

// Vertices and radians computed independently (mpmath, 30 digits).
inline constexpr double kAtanThird = 0.321750554396642193401404614359;  // atan(1/3)
inline constexpr double kAtanHalf = 0.463647609000806116214256231461;   // atan(1/2)
inline constexpr double kAtanTwo = 1.10714871779409050301706546018;     // atan(2)

}  // namespace polyrecon::fixtures
