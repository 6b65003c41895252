#include "mtkit/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace mtkit {

FiniteLattice validate_lattice(int m, const std::vector<std::uint8_t>& leq) {
  if (m <= 0) throw NotALattice("empty carrier", 0, 0);
  if (leq.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
    throw NotALattice("order matrix has wrong shape", 0, 0);

  auto le = [&](int a, int b) {
    return leq[static_cast<std::size_t>(a) * m + b] != 0;
  };

  for (int a = 0; a < m; ++a)
    if (!le(a, a)) throw NotALattice("order is not reflexive", a, a);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && le(a, b) && le(b, a))
        throw NotALattice("order is not antisymmetric", a, b);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < m; ++c)
        if (le(b, c) && !le(a, c)) throw NotALattice("order is not transitive", a, b);
    }

  FiniteLattice lat;
  lat.m_ = m;
  lat.leq_ = leq;
  lat.meet_.assign(static_cast<std::size_t>(m) * m, -1);
  lat.join_.assign(static_cast<std::size_t>(m) * m, -1);

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int glb = -1;
      for (int c = 0; c < m; ++c) {
        if (!le(c, a) || !le(c, b)) continue;
        if (glb == -1 || le(glb, c)) glb = c;
      }
      // glb is the greatest lower bound only if it dominates every lower bound
      if (glb != -1)
        for (int c = 0; c < m; ++c)
          if (le(c, a) && le(c, b) && !le(c, glb)) glb = -1;
      if (glb == -1) throw NotALattice("pair has no meet", a, b);
      lat.meet_[lat.idx(a, b)] = glb;

      int lub = -1;
      for (int c = 0; c < m; ++c) {
        if (!le(a, c) || !le(b, c)) continue;
        if (lub == -1 || le(c, lub)) lub = c;
      }
      if (lub != -1)
        for (int c = 0; c < m; ++c)
          if (le(a, c) && le(b, c) && !le(lub, c)) lub = -1;
      if (lub == -1) throw NotALattice("pair has no join", a, b);
      lat.join_[lat.idx(a, b)] = lub;
    }

  // A finite lattice is bounded: fold meets and joins over the carrier.
  int bot = 0, top = 0;
  for (int a = 1; a < m; ++a) {
    bot = lat.meet(bot, a);
    top = lat.join(top, a);
  }
  lat.bot_ = bot;
  lat.top_ = top;
  return lat;
}

FiniteLattice validate_lattice_from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
  if (m <= 0) throw NotALattice("empty carrier", 0, 0);
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw NotALattice("pair index out of range", a, b);
    leq[static_cast<std::size_t>(a) * m + b] = 1;
  }
  return validate_lattice(m, leq);
}

FiniteFrame validate_frame(FiniteLattice lattice) {
  const int m = lattice.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (lattice.meet(a, lattice.join(b, c)) !=
            lattice.join(lattice.meet(a, b), lattice.meet(a, c)))
          throw NotDistributive(a, b, c);
  FiniteFrame f;
  f.base_ = std::move(lattice);
  return f;
}

int heyting(const FiniteLattice& lat, int a, int b) {
  int acc = lat.bot();
  for (int c = 0; c < lat.size(); ++c)
    if (lat.le(lat.meet(c, a), b)) acc = lat.join(acc, c);
  return acc;
}

std::vector<int> join_irreducibles(const FiniteLattice& lat) {
  std::vector<int> out;
  for (int a = 0; a < lat.size(); ++a) {
    if (a == lat.bot()) continue;
    bool reducible = false;
    for (int b = 0; b < lat.size() && !reducible; ++b) {
      if (!lat.le(b, a) || b == a) continue;
      for (int c = 0; c < lat.size(); ++c)
        if (c != a && lat.le(c, a) && lat.join(b, c) == a) {
          reducible = true;
          break;
        }
    }
    if (!reducible) out.push_back(a);
  }
  return out;
}

std::vector<int> meet_irreducibles(const FiniteLattice& lat) {
  std::vector<int> out;
  for (int a = 0; a < lat.size(); ++a) {
    if (a == lat.top()) continue;
    bool reducible = false;
    for (int b = 0; b < lat.size() && !reducible; ++b) {
      if (!lat.le(a, b) || b == a) continue;
      for (int c = 0; c < lat.size(); ++c)
        if (c != a && lat.le(a, c) && lat.meet(b, c) == a) {
          reducible = true;
          break;
        }
    }
    if (!reducible) out.push_back(a);
  }
  return out;
}

namespace {

bool extend_iso(const FiniteLattice& a, const FiniteLattice& b, std::vector<int>& map,
                std::vector<bool>& used, int next) {
  const int m = a.size();
  if (next == m) return true;
  for (int cand = 0; cand < m; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      ok = a.le(prev, next) == b.le(map[static_cast<std::size_t>(prev)], cand) &&
           a.le(next, prev) == b.le(cand, map[static_cast<std::size_t>(prev)]);
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = true;
    if (extend_iso(a, b, map, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = false;
  }
  return false;
}

}  // namespace

std::vector<int> find_lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return {};
  std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(a.size()), false);
  if (!extend_iso(a, b, map, used, 0)) return {};
  return map;
}

}  // namespace mtkit
