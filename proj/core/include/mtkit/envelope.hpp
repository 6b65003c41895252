#pragma once

#include <utility>
#include <vector>

#include "mtkit/frame.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/space.hpp"

namespace mtkit {

/// The Boolean envelope of a finite frame L, realized on the powerset of
/// its join-irreducibles: carrier = P(J(L)), embedding e(a) = the
/// join-irreducibles below a, and the interior operator whose fixpoints are
/// exactly e[L] (the right adjoint of e).
struct Envelope {
  FiniteFrame frame;          // the completed input
  FinSpace carrier;           // powerset of J(L), opens = e[L]
  std::vector<int> irreducibles;  // point i of the carrier is this element of L
  std::vector<Mask> embed;    // e, indexed by frame element

  Mask box(Mask x) const { return carrier.interior(x); }
};

/// Builds the envelope and verifies its structural contract: e is a bounded
/// lattice embedding and the fixpoints of box are exactly e[L].
Envelope boolean_envelope(const FiniteFrame& frame);

/// The MT-algebra realizing the frame as its opens: the carrier space of the
/// envelope. Verifies that the opens of the result are order-isomorphic to
/// the input (via e) and that the locally closed elements join-generate the
/// result.
FinSpace mt_from_frame(const FiniteFrame& frame);

/// Same algebra built along the generic route: Boolean subalgebra generated
/// by the embedded frame inside the powerset of the join-irreducibles, then
/// the MacNeille completion of that subalgebra with the lower extension of
/// the interior operator. Exists to cross-check the shortcut; quadratic in
/// the subalgebra size, so keep the frame small.
FinSpace mt_from_frame_generic(const FiniteFrame& frame);

/// The lower extension of an interior operator given on a Boolean
/// subalgebra of P({0..n-1}): box_low(x) = union of box(a) over subalgebra
/// elements a below x. Validates that the input is a Boolean subalgebra,
/// that box satisfies the interior laws on it, and that the extension
/// satisfies them on the whole powerset (exhaustively for small n).
class LowerExtension {
 public:
  LowerExtension(int n, std::vector<std::pair<Mask, Mask>> box_on_subalgebra);

  Mask operator()(Mask x) const;
  int points() const { return n_; }
  const std::vector<std::pair<Mask, Mask>>& subalgebra_box() const { return sub_; }

 private:
  int n_ = 0;
  std::vector<std::pair<Mask, Mask>> sub_;  // (element, box value), sorted by element
};

}  // namespace mtkit
