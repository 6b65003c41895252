#pragma once

#include <vector>

#include "mtkit/frame.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/space.hpp"

namespace mtkit::test {

// Sierpinski space on {0,1}: the open point is 1.
inline FinSpace sierp() { return validate_space(2, {0x0, 0x2, 0x3}); }
inline FinSpace disc2() { return discrete_space(2); }
inline FinSpace triv2() { return indiscrete_space(2); }
inline FinSpace disc3() { return discrete_space(3); }
inline FinSpace empty_space() { return validate_space(0, {0x0}); }

// 3-chain 0 < 1 < 2 as a frame.
inline FiniteFrame chainfrm3() {
  return validate_frame(validate_lattice_from_pairs(
      3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}));
}

// Boolean 4: 0 at the bottom, atoms 1 and 2, top 3.
inline FiniteFrame boolean4() {
  return validate_frame(validate_lattice_from_pairs(
      4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}));
}

inline FiniteFrame frame2() {
  return validate_frame(validate_lattice_from_pairs(2, {{0, 0}, {0, 1}, {1, 1}}));
}

inline FiniteFrame frame1() {
  return validate_frame(validate_lattice_from_pairs(1, {{0, 0}}));
}

// All labeled topologies on up to `max_n` points, concatenated.
std::vector<FinSpace> small_census(int max_n);

}  // namespace mtkit::test
