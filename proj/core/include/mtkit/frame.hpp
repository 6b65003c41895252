#pragma once

#include <vector>

#include "mtkit/lattice.hpp"
#include "mtkit/space.hpp"

namespace mtkit {

/// A point of a frame: a completely prime filter, stored as the sorted list
/// of its member element ids.
struct FramePoint {
  std::vector<int> filter;
  bool operator==(const FramePoint& other) const { return filter == other.filter; }
  bool operator<(const FramePoint& other) const { return filter < other.filter; }
};

/// All points, computed from the meet-irreducible elements: m yields the
/// filter { a | a not<= m }. Sorted by filter contents.
std::vector<FramePoint> points(const FiniteFrame& frame);

/// Oracle route: enumerate all subsets of the carrier and keep the
/// completely prime filters. Exponential; callers keep size() small.
std::vector<FramePoint> points_by_filter_enumeration(const FiniteFrame& frame);

bool is_completely_prime_filter(const FiniteFrame& frame, const std::vector<int>& filter);

/// The space of points. zeta[a] is the set of points containing a, as a
/// mask over the point indices; the opens are exactly zeta of the carrier.
struct PtSpace {
  FinSpace space;
  std::vector<FramePoint> pts;
  std::vector<Mask> zeta;
};

PtSpace pt_space(const FiniteFrame& frame);

/// a* = join of { b | b meet a = bot }.
int pseudocomplement(const FiniteFrame& frame, int a);

/// b is rather below a: b* join a = top.
bool rather_below(const FiniteFrame& frame, int b, int a);

/// The full rather-below relation as an m*m matrix (row = lower element).
std::vector<std::uint8_t> rather_below_matrix(const FiniteFrame& frame);

/// Completely below: the largest interpolative subrelation of rather-below,
/// by fixpoint refinement.
bool completely_below(const FiniteFrame& frame, int b, int a);
std::vector<std::uint8_t> completely_below_matrix(const FiniteFrame& frame);

/// Oracle route for completely-below: pairs joined by a rather-below chain
/// with 2^depth links, computed by iterated relation composition.
std::vector<std::uint8_t> completely_below_by_chains(const FiniteFrame& frame, int depth);

enum class FrameAxiom { Subfit, Fit, Hausdorff, Regular, CompletelyRegular, Normal, Spatial };

/// Verdict by direct quantifier evaluation over the carrier.
bool frame_axiom(const FiniteFrame& frame, FrameAxiom axiom);

struct FrameProfile {
  bool subfit, fit, hausdorff, regular, completely_regular, normal, spatial;
  bool operator==(const FrameProfile&) const = default;
};

FrameProfile frame_profile(const FiniteFrame& frame);

/// A frame homomorphism: preserves finite meets and arbitrary joins (at this
/// scale: bottom, top, binary meets and binary joins).
struct FrameHom {
  FiniteFrame source;
  FiniteFrame target;
  std::vector<int> map;
};

FrameHom check_frame_hom(FiniteFrame source, FiniteFrame target, std::vector<int> map);

/// pt of a homomorphism: point q of the target maps to the preimage filter
/// h^{-1}[q], returned as indices into points(source) for each index into
/// points(target). Continuity against the zeta-opens is verified.
std::vector<int> apply_pt(const FrameHom& hom);

}  // namespace mtkit
