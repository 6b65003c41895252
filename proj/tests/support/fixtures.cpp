#include "support/fixtures.hpp"

#include "mtkit/enumerate.hpp"

namespace mtkit::test {

std::vector<FinSpace> small_census(int max_n) {
  std::vector<FinSpace> out;
  for (int n = 0; n <= max_n; ++n) {
    auto batch = enumerate_topologies(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace mtkit::test
