#include "mtkit/morphism.hpp"

namespace mtkit {

MtMorphism check_mt_morphism(const FinSpace& source, const FinSpace& target,
                             std::vector<int> pointmap) {
  if (static_cast<int>(pointmap.size()) != target.points())
    throw PreconditionViolated("point map must be total on the target points");
  for (int p : pointmap)
    if (p < 0 || p >= source.points())
      throw PreconditionViolated("point map value out of range");

  MtMorphism h{source, target, std::move(pointmap)};

  for (Mask u : source.opens())
    if (!target.is_open(h.preimage(u))) throw NotContinuous(u);

  // h(box a) <= box h(a), checked on the whole carrier.
  const Mask full = source.full();
  for (Mask a = 0;; ++a) {
    if (!subset_of(h.preimage(source.interior(a)), target.interior(h.preimage(a))))
      throw std::logic_error("preimage of a continuous map is not an MT-morphism");
    if (a == full) break;
  }
  return h;
}

}  // namespace mtkit
