#include "mtkit/enumerate.hpp"

#include <cstdlib>
#include <random>

namespace mtkit {

int enumeration_bound() {
  if (const char* env = std::getenv("MTKIT_MAX_POINTS")) {
    const int v = std::atoi(env);
    if (v >= 0) return v;
  }
  return 4;
}

std::vector<FinSpace> enumerate_topologies(int n) {
  const int bound = enumeration_bound();
  if (n < 0 || n > bound) throw BoundExceeded(n, bound);

  std::vector<FinSpace> out;
  if (n == 0) {
    out.push_back(validate_space(0, {0}));
    return out;
  }

  // Iterate over the off-diagonal bits of a reflexive relation and keep the
  // transitive ones.
  const int offdiag = n * n - n;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag); ++bits) {
    std::uint64_t rest = bits;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) {
          leq[static_cast<std::size_t>(x) * n + y] = 1;
        } else {
          leq[static_cast<std::size_t>(x) * n + y] = rest & 1u;
          rest >>= 1;
        }
      }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y) {
        if (!leq[static_cast<std::size_t>(x) * n + y]) continue;
        for (int z = 0; z < n; ++z)
          if (leq[static_cast<std::size_t>(y) * n + z] &&
              !leq[static_cast<std::size_t>(x) * n + z]) {
            transitive = false;
            break;
          }
      }
    if (transitive) out.push_back(space_from_preorder(n, leq));
  }
  return out;
}

std::vector<FinSpace> enumerate_topologies_by_families(int n) {
  if (n < 0 || n > 4) throw BoundExceeded(n, 4);
  std::vector<FinSpace> out;
  if (n == 0) {
    out.push_back(validate_space(0, {0}));
    return out;
  }
  const Mask full = full_mask(n);

  // Proper nonempty subsets, in ascending mask order.
  std::vector<Mask> proper;
  for (Mask a = 1; a < full; ++a) proper.push_back(a);
  const int k = static_cast<int>(proper.size());

  for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
    std::vector<Mask> fam{0, full};
    std::uint32_t present = (1u << 0) | (1u << full);
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1u) {
        fam.push_back(proper[static_cast<std::size_t>(i)]);
        present |= 1u << proper[static_cast<std::size_t>(i)];
      }
    bool closed = true;
    for (std::size_t i = 0; i < fam.size() && closed; ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        if (!((present >> (fam[i] | fam[j])) & 1u) ||
            !((present >> (fam[i] & fam[j])) & 1u)) {
          closed = false;
          break;
        }
    if (closed) out.push_back(validate_space(n, fam));
  }
  return out;
}

std::vector<FinSpace> sample_topologies(int n, int count, std::uint64_t seed) {
  if (n < 0 || n > kMaxPoints) throw BoundExceeded(n, kMaxPoints);
  std::mt19937_64 rng(seed);
  std::vector<FinSpace> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        rel[static_cast<std::size_t>(x) * n + y] = (x == y || (rng() & 3u) == 0) ? 1 : 0;
    // transitive closure
    for (int z = 0; z < n; ++z)
      for (int x = 0; x < n; ++x) {
        if (!rel[static_cast<std::size_t>(x) * n + z]) continue;
        for (int y = 0; y < n; ++y)
          if (rel[static_cast<std::size_t>(z) * n + y]) rel[static_cast<std::size_t>(x) * n + y] = 1;
      }
    out.push_back(space_from_preorder(n, rel));
  }
  return out;
}

}  // namespace mtkit
