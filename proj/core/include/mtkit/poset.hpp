#pragma once

#include <utility>
#include <vector>

#include "mtkit/lattice.hpp"

namespace mtkit {

/// A finite poset: element count plus a reflexive, antisymmetric,
/// transitive relation.
struct FinPoset {
  int m = 0;
  std::vector<std::uint8_t> leq;  // m*m

  bool le(int a, int b) const {
    return leq[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + b] != 0;
  }
};

/// Throws NotAPoset with a witness pair.
FinPoset validate_poset(int m, const std::vector<std::uint8_t>& leq);
FinPoset validate_poset_from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);

/// The Dedekind-MacNeille completion: the lattice of cuts A = lower(upper(A))
/// ordered by inclusion, with the embedding x -> down-set of x. The embedding
/// preserves every meet and join that already exists in the poset (verified
/// for small inputs).
struct Completion {
  FiniteLattice lattice;
  std::vector<int> embed;                  // poset element -> cut id
  std::vector<std::vector<int>> cuts;      // cut id -> sorted members
};

Completion macneille(const FinPoset& poset);

}  // namespace mtkit
