#pragma once

#include "gelfem/types.hpp"

#include <array>
#include <utility>

namespace gelfem::voigt {

// Ordering (11, 22, 33, 23, 13, 12). Strain-like vectors carry engineering
// shears; stress-like vectors carry the tensor components.
inline constexpr std::array<std::pair<int, int>, 6> kIndex{
    {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};

inline Vec6 from_stress(const Mat3& s) {
  Vec6 v;
  for (int a = 0; a < 6; ++a) v(a) = s(kIndex[a].first, kIndex[a].second);
  return v;
}

inline Mat3 to_matrix(const Vec6& v) {
  Mat3 s;
  s << v(0), v(5), v(4),
       v(5), v(1), v(3),
       v(4), v(3), v(2);
  return s;
}

inline Vec6 from_strain(const Mat3& e) {
  Vec6 v;
  for (int a = 0; a < 6; ++a) {
    const auto [i, j] = kIndex[a];
    v(a) = (i == j) ? e(i, j) : 2.0 * e(i, j);
  }
  return v;
}

}  // namespace gelfem::voigt
