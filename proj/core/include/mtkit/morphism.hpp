#pragma once

#include <vector>

#include "mtkit/space.hpp"

namespace mtkit {

/// An MT-morphism between powerset algebras: the complete Boolean
/// homomorphism P(source) -> P(target) induced as the preimage of a
/// continuous point map target -> source.
struct MtMorphism {
  FinSpace source;
  FinSpace target;
  std::vector<int> pointmap;  // target point -> source point

  /// The Boolean homomorphism itself: h(a) = pointmap^{-1}(a).
  Mask preimage(Mask a) const {
    Mask out = 0;
    for (int x = 0; x < target.points(); ++x)
      if (has_point(a, pointmap[static_cast<std::size_t>(x)])) out |= point_mask(x);
    return out;
  }

  bool operator==(const MtMorphism& other) const {
    return source == other.source && target == other.target && pointmap == other.pointmap;
  }
};

/// Validates the point map: total on target points, continuous, and the
/// induced preimage map satisfies h(box a) <= box h(a) on every element
/// (verified exhaustively). Throws NotContinuous with a witness open.
MtMorphism check_mt_morphism(const FinSpace& source, const FinSpace& target,
                             std::vector<int> pointmap);

}  // namespace mtkit
