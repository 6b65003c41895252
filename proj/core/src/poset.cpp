#include "mtkit/poset.hpp"

#include <algorithm>
#include <set>

namespace mtkit {

FinPoset validate_poset(int m, const std::vector<std::uint8_t>& leq) {
  if (m < 0) throw NotAPoset("negative element count", m, m);
  if (leq.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
    throw NotAPoset("order matrix has wrong shape", 0, 0);
  auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a) * m + b] != 0; };
  for (int a = 0; a < m; ++a)
    if (!le(a, a)) throw NotAPoset("order is not reflexive", a, a);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && le(a, b) && le(b, a)) throw NotAPoset("order is not antisymmetric", a, b);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < m; ++c)
        if (le(b, c) && !le(a, c)) throw NotAPoset("order is not transitive", a, b);
    }
  return FinPoset{m, leq};
}

FinPoset validate_poset_from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw NotAPoset("pair index out of range", a, b);
    leq[static_cast<std::size_t>(a) * m + b] = 1;
  }
  return validate_poset(m, leq);
}

namespace {

using CutSet = std::vector<bool>;

CutSet lower_of_upper(const FinPoset& p, const CutSet& a) {
  const int m = p.m;
  CutSet upper(static_cast<std::size_t>(m), true);
  for (int u = 0; u < m; ++u)
    for (int x = 0; x < m; ++x)
      if (a[static_cast<std::size_t>(x)] && !p.le(x, u)) {
        upper[static_cast<std::size_t>(u)] = false;
        break;
      }
  CutSet out(static_cast<std::size_t>(m), true);
  for (int l = 0; l < m; ++l)
    for (int u = 0; u < m; ++u)
      if (upper[static_cast<std::size_t>(u)] && !p.le(l, u)) {
        out[static_cast<std::size_t>(l)] = false;
        break;
      }
  return out;
}

}  // namespace

Completion macneille(const FinPoset& poset) {
  const int m = poset.m;

  // Cuts are exactly the stable sets of lower(upper(-)). Seed with the
  // principal down-sets and the whole carrier; close under intersection.
  std::set<CutSet> cuts;
  cuts.insert(lower_of_upper(poset, CutSet(static_cast<std::size_t>(m), false)));
  {
    CutSet all(static_cast<std::size_t>(m), true);
    cuts.insert(lower_of_upper(poset, all));
  }
  for (int x = 0; x < m; ++x) {
    CutSet down(static_cast<std::size_t>(m), false);
    for (int l = 0; l < m; ++l)
      if (poset.le(l, x)) down[static_cast<std::size_t>(l)] = true;
    cuts.insert(down);
  }
  for (;;) {
    std::set<CutSet> next = cuts;
    for (const auto& a : cuts)
      for (const auto& b : cuts) {
        CutSet c(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
          c[static_cast<std::size_t>(i)] =
              a[static_cast<std::size_t>(i)] && b[static_cast<std::size_t>(i)];
        next.insert(std::move(c));
      }
    if (next.size() == cuts.size()) break;
    cuts = std::move(next);
  }

  std::vector<CutSet> cut_list(cuts.begin(), cuts.end());
  const int k = static_cast<int>(cut_list.size());

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      bool sub = true;
      for (int i = 0; i < m && sub; ++i)
        sub = !cut_list[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] ||
              cut_list[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
      leq[static_cast<std::size_t>(a) * k + b] = sub ? 1 : 0;
    }

  Completion result;
  result.lattice = validate_lattice(k, leq);
  result.cuts.resize(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < m; ++i)
      if (cut_list[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)])
        result.cuts[static_cast<std::size_t>(c)].push_back(i);

  result.embed.assign(static_cast<std::size_t>(m), -1);
  for (int x = 0; x < m; ++x) {
    CutSet down(static_cast<std::size_t>(m), false);
    for (int l = 0; l < m; ++l)
      if (poset.le(l, x)) down[static_cast<std::size_t>(l)] = true;
    auto it = std::find(cut_list.begin(), cut_list.end(), down);
    result.embed[static_cast<std::size_t>(x)] = static_cast<int>(it - cut_list.begin());
  }

  // The embedding preserves every existing meet and join. Verified over all
  // subsets for small posets, over pairs beyond that.
  const auto& lat = result.lattice;
  auto check_subset = [&](const std::vector<int>& xs) {
    int glb = -1, lub = -1;
    for (int c = 0; c < m; ++c) {
      bool is_lb = true, is_ub = true;
      for (int x : xs) {
        is_lb = is_lb && poset.le(c, x);
        is_ub = is_ub && poset.le(x, c);
      }
      if (is_lb && (glb == -1 || poset.le(glb, c))) glb = c;
      if (is_ub && (lub == -1 || poset.le(c, lub))) lub = c;
    }
    if (glb != -1)
      for (int c = 0; c < m; ++c) {
        bool is_lb = true;
        for (int x : xs) is_lb = is_lb && poset.le(c, x);
        if (is_lb && !poset.le(c, glb)) glb = -1;
      }
    if (lub != -1)
      for (int c = 0; c < m; ++c) {
        bool is_ub = true;
        for (int x : xs) is_ub = is_ub && poset.le(x, c);
        if (is_ub && !poset.le(lub, c)) lub = -1;
      }
    std::vector<int> embedded;
    embedded.reserve(xs.size());
    for (int x : xs) embedded.push_back(result.embed[static_cast<std::size_t>(x)]);
    if (glb != -1 &&
        lat.meet_of(embedded) != result.embed[static_cast<std::size_t>(glb)])
      throw std::logic_error("completion embedding breaks an existing meet");
    if (lub != -1 &&
        lat.join_of(embedded) != result.embed[static_cast<std::size_t>(lub)])
      throw std::logic_error("completion embedding breaks an existing join");
  };

  if (m <= 12) {
    for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
      std::vector<int> xs;
      for (int i = 0; i < m; ++i)
        if ((bits >> i) & 1u) xs.push_back(i);
      check_subset(xs);
    }
  } else {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) check_subset({a, b});
  }
  return result;
}

}  // namespace mtkit
