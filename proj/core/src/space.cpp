#include "mtkit/space.hpp"

#include <algorithm>
#include <cstdio>

namespace mtkit {

namespace {

// Interior tables are only worth the memory for small carriers.
constexpr int kTableBits = 12;
constexpr std::size_t kTableMaxOpens = 4096;

}  // namespace

bool FinSpace::is_open(Mask a) const {
  return std::binary_search(opens_.begin(), opens_.end(), a);
}

bool FinSpace::is_closed(Mask a) const {
  return std::binary_search(closeds_.begin(), closeds_.end(), a);
}

Mask FinSpace::interior(Mask a) const {
  if (!interior_table_.empty()) return interior_table_[a];
  Mask out = 0;
  for (int x = 0; x < n_; ++x)
    if (has_point(a, x) && subset_of(min_open_[static_cast<std::size_t>(x)], a))
      out |= point_mask(x);
  return out;
}

Mask FinSpace::interior_by_scan(Mask a) const {
  Mask out = 0;
  for (Mask u : opens_)
    if (subset_of(u, a)) out |= u;
  return out;
}

Mask FinSpace::closure(Mask a) const { return full() & ~interior(full() & ~a); }

Mask FinSpace::closure_by_scan(Mask a) const {
  Mask out = full();
  for (Mask c : closeds_)
    if (subset_of(a, c)) out &= c;
  return out;
}

bool FinSpace::specializes(int x, int y) const {
  return has_point(closure(point_mask(y)), x);
}

std::string FinSpace::id() const {
  std::string out;
  char buf[16];
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%x", opens_[i]);
    if (i != 0) out += ',';
    out += buf;
  }
  return out;
}

FinSpace validate_space(int n, std::vector<Mask> opens) {
  if (n < 0 || n > kMaxPoints) throw BoundExceeded(n, kMaxPoints);
  const Mask full = full_mask(n);

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  for (Mask u : opens)
    if (!subset_of(u, full))
      throw NotATopology("open set is not a subset of the point set", u, full);
  if (opens.empty() || opens.front() != 0)
    throw NotATopology("empty set missing", 0, 0);
  if (opens.back() != full)
    throw NotATopology("full set missing", full, full);

  auto member = [&](Mask a) {
    return std::binary_search(opens.begin(), opens.end(), a);
  };
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!member(opens[i] | opens[j]))
        throw NotATopology("union escapes the family", opens[i], opens[j]);
      if (!member(opens[i] & opens[j]))
        throw NotATopology("intersection escapes the family", opens[i], opens[j]);
    }

  FinSpace s;
  s.n_ = n;
  s.opens_ = std::move(opens);

  s.closeds_.clear();
  s.closeds_.reserve(s.opens_.size());
  for (Mask u : s.opens_) s.closeds_.push_back(full & ~u);
  std::sort(s.closeds_.begin(), s.closeds_.end());

  s.min_open_.assign(static_cast<std::size_t>(n), full);
  for (int x = 0; x < n; ++x)
    for (Mask u : s.opens_)
      if (has_point(u, x)) s.min_open_[static_cast<std::size_t>(x)] &= u;

  if (n <= kTableBits && s.opens_.size() <= kTableMaxOpens) {
    s.interior_table_.assign(std::size_t{1} << n, 0);
    for (Mask a = 0; a <= full; ++a) {
      Mask out = 0;
      for (int x = 0; x < n; ++x)
        if (has_point(a, x) && subset_of(s.min_open_[static_cast<std::size_t>(x)], a))
          out |= point_mask(x);
      s.interior_table_[a] = out;
      if (a == full) break;
    }
  }

  if (n <= 8) {
    if (auto v = check_kuratowski(s))
      throw std::logic_error("derived interior violates " + v->law);
  }
  return s;
}

FinSpace validate_space_from_sets(int n, const std::vector<std::vector<int>>& opens) {
  std::vector<Mask> masks;
  masks.reserve(opens.size());
  for (const auto& u : opens) {
    Mask m = 0;
    for (int p : u) {
      if (p < 0 || p >= n)
        throw NotATopology("point index out of range", static_cast<Mask>(p), 0);
      m |= point_mask(p);
    }
    masks.push_back(m);
  }
  return validate_space(n, std::move(masks));
}

FinSpace discrete_space(int n) {
  std::vector<Mask> opens;
  opens.reserve(std::size_t{1} << n);
  const Mask full = full_mask(n);
  for (Mask a = 0;; ++a) {
    opens.push_back(a);
    if (a == full) break;
  }
  return validate_space(n, std::move(opens));
}

FinSpace indiscrete_space(int n) {
  std::vector<Mask> opens{0};
  if (n > 0) opens.push_back(full_mask(n));
  return validate_space(n, std::move(opens));
}

FinSpace space_from_preorder(int n, const std::vector<std::uint8_t>& leq) {
  const Mask full = full_mask(n);
  auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * n + y] != 0; };
  std::vector<Mask> opens;
  for (Mask a = 0;; ++a) {
    bool upset = true;
    for (int x = 0; x < n && upset; ++x) {
      if (!has_point(a, x)) continue;
      for (int y = 0; y < n; ++y)
        if (le(x, y) && !has_point(a, y)) {
          upset = false;
          break;
        }
    }
    if (upset) opens.push_back(a);
    if (a == full) break;
  }
  return validate_space(n, std::move(opens));
}

namespace {

bool extend_homeo(const FinSpace& a, const FinSpace& b, std::vector<int>& map,
                  Mask used, int next) {
  const int n = a.points();
  if (next == n) {
    for (Mask u : a.opens()) {
      Mask image = 0;
      for (int x = 0; x < n; ++x)
        if (has_point(u, x)) image |= point_mask(map[static_cast<std::size_t>(x)]);
      if (!b.is_open(image)) return false;
    }
    return true;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (has_point(used, cand)) continue;
    // prune on the specialization preorder, which the bijection must preserve
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      ok = a.specializes(prev, next) ==
               b.specializes(map[static_cast<std::size_t>(prev)], cand) &&
           a.specializes(next, prev) ==
               b.specializes(cand, map[static_cast<std::size_t>(prev)]);
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    if (extend_homeo(a, b, map, used | point_mask(cand), next + 1)) return true;
  }
  return false;
}

}  // namespace

std::vector<int> find_homeomorphism(const FinSpace& a, const FinSpace& b) {
  if (a.points() != b.points() || a.opens().size() != b.opens().size()) return {};
  std::vector<int> map(static_cast<std::size_t>(a.points()), -1);
  if (!extend_homeo(a, b, map, 0, 0)) return {};
  return map;
}

bool homeomorphic(const FinSpace& a, const FinSpace& b) {
  if (a.points() == 0) return b.points() == 0;
  return !find_homeomorphism(a, b).empty();
}

std::optional<KuratowskiViolation> check_kuratowski(const FinSpace& space) {
  const Mask full = space.full();
  if (space.interior(full) != full)
    return KuratowskiViolation{"box(top) = top", full, full};
  for (Mask a = 0;; ++a) {
    const Mask ia = space.interior(a);
    if (!subset_of(ia, a)) return KuratowskiViolation{"box(a) <= a", a, a};
    if (!subset_of(ia, space.interior(ia)))
      return KuratowskiViolation{"box(a) <= box(box(a))", a, a};
    if (a == full) break;
  }
  for (Mask a = 0;; ++a) {
    for (Mask b = a;; ++b) {
      if (space.interior(a & b) != (space.interior(a) & space.interior(b)))
        return KuratowskiViolation{"box(a meet b) = box(a) meet box(b)", a, b};
      if (b == full) break;
    }
    if (a == full) break;
  }
  return std::nullopt;
}

}  // namespace mtkit
