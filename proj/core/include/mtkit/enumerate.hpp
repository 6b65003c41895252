#pragma once

#include <cstdint>
#include <vector>

#include "mtkit/space.hpp"

namespace mtkit {

/// The enumeration bound: MTKIT_MAX_POINTS when set, otherwise 4.
int enumeration_bound();

/// All labeled topologies on n points, each exactly once, via the bijection
/// with preorders: every reflexive-transitive relation yields the space of
/// its up-sets. Deterministic order. Throws BoundExceeded past the bound.
std::vector<FinSpace> enumerate_topologies(int n);

/// Oracle route: filter every family of proper nonempty subsets for closure
/// under union and intersection. Exponential in 2^n; n <= 4 only.
std::vector<FinSpace> enumerate_topologies_by_families(int n);

/// Deterministic pseudorandom sample of topologies on n points (preorders
/// from seeded random relations, transitively closed). May repeat spaces.
std::vector<FinSpace> sample_topologies(int n, int count, std::uint64_t seed);

}  // namespace mtkit
