#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mtkit {

/// A subset of the points {0..n-1}, one bit per point. Carriers are capped
/// at kMaxPoints so every element of a powerset algebra fits one word.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 24;

constexpr Mask full_mask(int n) {
  return n == 0 ? Mask{0} : (Mask{1} << n) - 1u;
}

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int bit_count(Mask a) { return std::popcount(a); }

constexpr bool has_point(Mask a, int p) { return (a >> p) & 1u; }

constexpr Mask point_mask(int p) { return Mask{1} << p; }

inline std::vector<int> mask_points(Mask a) {
  std::vector<int> out;
  while (a != 0) {
    int p = std::countr_zero(a);
    out.push_back(p);
    a &= a - 1;
  }
  return out;
}

}  // namespace mtkit
