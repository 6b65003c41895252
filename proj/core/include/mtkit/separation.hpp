#pragma once

#include <array>
#include <vector>

#include "mtkit/space.hpp"

namespace mtkit {

/// a is rather below b on the Boolean carrier: diamond(a) <= box(b).
bool mt_rather(const FinSpace& m, Mask a, Mask b);

/// The full rather-below relation over the carrier, row-major by the lower
/// element: rel[a * 2^n + b]. Bounded because the carrier is 4^n pairs.
std::vector<std::uint8_t> mt_rather_matrix(const FinSpace& m);

/// Completely below: the largest interpolative subrelation of rather-below,
/// computed by fixpoint refinement over the whole carrier.
bool mt_completely(const FinSpace& m, Mask a, Mask b);
std::vector<std::uint8_t> mt_completely_matrix(const FinSpace& m);

/// Oracle route: pairs joined by rather-below chains with 2^depth links,
/// by iterated relation composition (a dyadic family of the given depth in
/// between, endpoints included).
std::vector<std::uint8_t> mt_completely_by_chains(const FinSpace& m, int depth);

enum class MtAxiom { T0, THalf, T1, WeaklySober, Sober, T2, T3, T3Half, T4 };
inline constexpr int kMtAxiomCount = 9;

const char* mt_axiom_name(MtAxiom axiom);

/// Verdict plus a concrete failure witness: the canonically least element
/// that is not generated, the least join-irreducible closed element with no
/// atom, or the least unseparated closed pair.
struct AxiomVerdict {
  bool holds = false;
  std::vector<Mask> witness;  // empty when the axiom holds
};

AxiomVerdict mt_axiom(const FinSpace& m, MtAxiom axiom);

/// The dual formulation of each axiom (meet-generation by the dual family,
/// or the dual separation property). Agrees with mt_axiom on every finite
/// algebra; the two are computed independently.
bool dual_axiom_check(const FinSpace& m, MtAxiom axiom);

/// Join-irreducible elements of the co-frame of closed elements.
std::vector<Mask> closed_join_irreducibles(const FinSpace& m);

/// For a normal algebra and a rather-below b: the first open u in canonical
/// element order with a rather-below u rather-below b. Throws NotNormal /
/// NotRatherBelow.
Mask interpolate(const FinSpace& m, Mask a, Mask b);

/// Opens indexed by the dyadic rationals k/2^depth: members[k] is the
/// element at k/2^depth, so members.size() == 2^depth + 1.
struct UrysohnFamily {
  int depth = 0;
  std::vector<Mask> members;
};

/// Builds the dyadic family between a closed c and an open a with c <= a in
/// a normal algebra, by repeated interpolation between dyadic neighbours.
/// Guarantees c <= u_0, u_1 <= a and u_p rather-below u_q for p < q.
UrysohnFamily urysohn_family(const FinSpace& m, Mask closed_c, Mask open_a, int depth = 4);

struct SeparationProfile {
  bool t0 = false, t_half = false, t1 = false;
  bool weakly_sober = false, sober = false;
  bool t2 = false, t3 = false, t3half = false, t4 = false;
  std::array<std::vector<Mask>, kMtAxiomCount> witnesses;  // indexed by MtAxiom

  bool holds(MtAxiom axiom) const;
  bool operator==(const SeparationProfile& other) const;
};

/// The full profile. Throws logic_error if the implication ladder
/// t4 => t3half => t3 => t2 => t1 => t_half => t0 or t2 => sober =>
/// weakly_sober is violated; a violation is a bug, not data.
SeparationProfile classify(const FinSpace& m);

}  // namespace mtkit
