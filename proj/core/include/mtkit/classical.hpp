#pragma once

#include <vector>

#include "mtkit/space.hpp"

namespace mtkit {

/// Point-set implementations of the classical separation axioms, written
/// directly against points and open sets. These deliberately avoid the
/// algebraic checkers (families, join-generation, the box/diamond relation
/// machinery) so they can serve as independent oracles.

bool classical_t0(const FinSpace& x);
/// Every singleton is the intersection of an open and a closed set.
bool classical_td(const FinSpace& x);
bool classical_t1(const FinSpace& x);
bool classical_t2(const FinSpace& x);
bool classical_t3(const FinSpace& x);
bool classical_t3half(const FinSpace& x);
bool classical_t4(const FinSpace& x);

/// Nonempty closed sets that are not the union of two strictly smaller
/// closed sets.
std::vector<Mask> irreducible_closed_sets(const FinSpace& x);

/// Every irreducible closed set is the closure of a unique point.
bool classical_sober(const FinSpace& x);

}  // namespace mtkit
