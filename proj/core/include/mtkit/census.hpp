#pragma once

#include <string>
#include <vector>

#include "mtkit/frame.hpp"
#include "mtkit/separation.hpp"
#include "mtkit/space.hpp"

namespace mtkit {

/// One classified space: canonical id, its separation profile, and the
/// frame-side profile of its opens.
struct CensusRow {
  int n = 0;
  std::string space_id;
  SeparationProfile profile;
  FrameProfile frame;
};

/// One row per labeled topology on n points, in enumeration order.
/// Classification of distinct spaces runs in parallel; assembly is by
/// enumeration index, so identical runs are identical.
std::vector<CensusRow> census(int n);

/// Fixed-width table plus per-axiom aggregate counts. Byte-deterministic.
std::string render_census(int n, const std::vector<CensusRow>& rows);

}  // namespace mtkit
