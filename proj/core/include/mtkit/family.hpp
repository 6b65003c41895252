#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mtkit/space.hpp"

namespace mtkit {

/// The distinguished element families of a finite powerset MT-algebra.
/// S = saturated (meets of opens), CS = co-saturated (joins of closeds),
/// LC = meet of an open and a closed, LO = join of a closed and an open,
/// WLC = meet of a saturated and a closed, WLO = join of a co-saturated
/// and an open, RO/RC = regular elements, GO/GC = elements approximated
/// from below by RO resp. from above by RC.
enum class FamilyKind {
  Open,
  Closed,
  Saturated,
  CoSaturated,
  LC,
  LO,
  WLC,
  WLO,
  RO,
  RC,
  GO,
  GC,
};

struct ElementFamily {
  FamilyKind kind;
  std::vector<Mask> members;  // deduplicated, sorted ascending
};

/// Computes the family straight from its defining formula. GO/GC evaluate
/// the defining join/meet per element with the quantified element ranging
/// over the whole carrier; no shortcut formulas.
ElementFamily family(const FinSpace& space, FamilyKind kind);

const char* family_kind_name(FamilyKind kind);

/// True iff every carrier element is the union of the members of s below it.
bool join_generates(std::span<const Mask> s, const FinSpace& space);
/// Least carrier element that is not such a union, if any.
std::optional<Mask> join_generation_witness(std::span<const Mask> s, const FinSpace& space);

/// Dual of join_generates.
bool meet_generates(std::span<const Mask> s, const FinSpace& space);
std::optional<Mask> meet_generation_witness(std::span<const Mask> s, const FinSpace& space);

/// Heyting implication on the opens: box(-a or b). Throws NotOpen.
Mask heyting_impl(const FinSpace& space, Mask a, Mask b);
/// Co-Heyting difference on the closeds: diamond(b and -a). Throws NotClosed.
Mask coheyting_diff(const FinSpace& space, Mask a, Mask b);

/// Closure of s under complement and arbitrary union, iterated to fixpoint.
/// Always contains the empty join, so 0 and 1 are present.
std::vector<Mask> generated_complete_boolean(std::span<const Mask> s, const FinSpace& space);
/// Closure of s under arbitrary union and arbitrary intersection, including
/// the empty join (0) and the empty meet (1).
std::vector<Mask> generated_complete_lattice(std::span<const Mask> s, const FinSpace& space);

}  // namespace mtkit
