#pragma once

#include <string>
#include <vector>

#include "mtkit/frame.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/morphism.hpp"
#include "mtkit/space.hpp"

namespace mtkit {

/// The powerset MT-algebra of a space. A deliberate wrapper: at this scale
/// the representation is the space itself, and the tag keeps the algebra
/// side and the space side of the pipeline from collapsing silently.
struct MtAlgebra {
  FinSpace space;

  int points() const { return space.points(); }
  Mask full() const { return space.full(); }
  Mask box(Mask a) const { return space.interior(a); }
  Mask diamond(Mask a) const { return space.closure(a); }
};

MtAlgebra functor_P(const FinSpace& x);

/// The algebra morphism of a continuous map f: domain -> codomain is the
/// preimage P(codomain) -> P(domain). Throws NotContinuous.
MtMorphism functor_P_hom(const FinSpace& domain, const FinSpace& codomain,
                         std::vector<int> f);

/// The frame of open elements, with the element table elem[i] giving the
/// open mask of frame element i (sorted ascending).
struct OpenFrame {
  FiniteFrame frame;
  std::vector<Mask> elem;

  int index_of(Mask open) const;
};

/// O(M): the open elements computed as fixpoints of box, ordered by the
/// inherited order.
OpenFrame functor_O(const MtAlgebra& m);

/// Omega(X): the frame of opens read off the space directly. Composing
/// functor_O after functor_P must reproduce this on the nose.
OpenFrame omega(const FinSpace& x);

/// Restriction of an MT-morphism to open elements; verifies that the
/// restriction lands in the opens and that h(box a) = box h(a) throughout.
FrameHom functor_O_hom(const MtMorphism& h);

/// The space of atoms with the image topology eta[O(M)].
struct AtSpace {
  FinSpace space;
  std::vector<Mask> atoms;  // atom index -> the atom, as a carrier mask
};

AtSpace functor_at(const MtAlgebra& m);

/// eta(a) = the set of atoms below a, as a mask over atom indices.
Mask eta(const AtSpace& at, Mask a);

/// at of a morphism: the left adjoint restricted to atoms, computed from
/// its adjunction property. Returns the point map at(target) -> at(source);
/// continuity is verified.
std::vector<int> functor_at_hom(const MtMorphism& h);

/// epsilon: X -> at(P(X)), point -> atom index. A homeomorphism.
std::vector<int> epsilon(const FinSpace& x, const AtSpace& at);

/// The unit and comparison maps for one space X (equivalently its powerset
/// algebra M = P(X)): eta, epsilon, vartheta, delta, zeta.
struct UnitMaps {
  AtSpace at;                // at(M)
  OpenFrame open_frame;      // O(M) = Omega(X)
  PtSpace pt;                // pt(O(M))
  std::vector<int> epsilon;  // point of X -> atom index
  std::vector<int> vartheta; // atom index -> point index of pt(O(M))
  std::vector<int> delta;    // point of X -> point index of pt(Omega(X))
  Mask eta(Mask a) const { return mtkit::eta(at, a); }
  const std::vector<Mask>& zeta() const { return pt.zeta; }
};

UnitMaps unit_maps(const FinSpace& x);

/// vartheta: at(M) -> pt(O(M)), x -> (up-set of x) meet O(M). The verdicts
/// are computed directly on the map; callers cross-check them against the
/// axiom checkers.
struct VarthetaAnalysis {
  bool injective = false;
  bool surjective = false;
  bool homeomorphism = false;
  std::vector<int> map;  // atom index -> point index
  std::string witness;   // human-readable failure witness, empty when all hold
};

VarthetaAnalysis vartheta_analysis(const MtAlgebra& m);

/// pt(Omega(X)): always sober (verified by the irreducible-closed-set test).
FinSpace soberify(const FinSpace& x);

/// Omega(pt(L)) with the witnessing element bijection; finite frames are
/// spatial, so this is an isomorphism onto the result.
struct Spatialization {
  OpenFrame frame;
  std::vector<int> iso;  // element of L -> element of the spatialization
};

Spatialization spatialize(const FiniteFrame& l);

/// Two distinct endomorphisms of the indiscrete two-point algebra whose
/// restrictions to the opens coincide: the identity and the atom swap.
std::pair<MtMorphism, MtMorphism> o_not_faithful_witness();

}  // namespace mtkit
