#include "mtkit/family.hpp"

#include <algorithm>
#include <set>

namespace mtkit {

namespace {

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Pairwise products of two families under the given operation.
template <typename Op>
std::vector<Mask> products(const std::vector<Mask>& xs, const std::vector<Mask>& ys, Op op) {
  std::vector<Mask> out;
  out.reserve(xs.size() * ys.size());
  for (Mask x : xs)
    for (Mask y : ys) out.push_back(op(x, y));
  return sorted_unique(std::move(out));
}

// Closes the seed family under the binary operation, iterated to fixpoint.
template <typename Op>
std::vector<Mask> close_under(std::vector<Mask> seed, Op op) {
  std::set<Mask> acc(seed.begin(), seed.end());
  std::vector<Mask> frontier(acc.begin(), acc.end());
  while (!frontier.empty()) {
    std::vector<Mask> fresh;
    for (Mask x : frontier)
      for (Mask y : acc) {
        Mask z = op(x, y);
        if (acc.insert(z).second) fresh.push_back(z);
      }
    frontier = std::move(fresh);
  }
  return {acc.begin(), acc.end()};
}

std::vector<Mask> saturated_family(const FinSpace& space) {
  // Meets of arbitrary subsets of opens; the empty meet (full) is already open.
  return close_under(space.opens(), [](Mask a, Mask b) { return a & b; });
}

std::vector<Mask> cosaturated_family(const FinSpace& space) {
  return close_under(space.closeds(), [](Mask a, Mask b) { return a | b; });
}

}  // namespace

ElementFamily family(const FinSpace& space, FamilyKind kind) {
  const Mask full = space.full();
  std::vector<Mask> members;
  switch (kind) {
    case FamilyKind::Open:
      // Fixpoints of the interior operator, scanned over the carrier.
      for (Mask a = 0;; ++a) {
        if (space.interior(a) == a) members.push_back(a);
        if (a == full) break;
      }
      break;
    case FamilyKind::Closed:
      for (Mask a = 0;; ++a) {
        if (space.closure(a) == a) members.push_back(a);
        if (a == full) break;
      }
      break;
    case FamilyKind::Saturated:
      members = saturated_family(space);
      break;
    case FamilyKind::CoSaturated:
      members = cosaturated_family(space);
      break;
    case FamilyKind::LC:
      members = products(space.opens(), space.closeds(), [](Mask u, Mask c) { return u & c; });
      break;
    case FamilyKind::LO:
      members = products(space.closeds(), space.opens(), [](Mask c, Mask u) { return c | u; });
      break;
    case FamilyKind::WLC:
      members = products(saturated_family(space), space.closeds(),
                         [](Mask s, Mask c) { return s & c; });
      break;
    case FamilyKind::WLO:
      members = products(cosaturated_family(space), space.opens(),
                         [](Mask s, Mask u) { return s | u; });
      break;
    case FamilyKind::RO:
      for (Mask b : space.opens())
        if (b == space.interior(space.closure(b))) members.push_back(b);
      break;
    case FamilyKind::RC:
      for (Mask c : space.closeds())
        if (c == space.closure(space.interior(c))) members.push_back(c);
      break;
    case FamilyKind::GO:
      for (Mask a = 0;; ++a) {
        Mask join = 0;
        for (Mask b = 0;; ++b) {
          const Mask cb = space.closure(b);
          if (subset_of(cb, a)) join |= space.interior(cb);
          if (b == full) break;
        }
        if (join == a) members.push_back(a);
        if (a == full) break;
      }
      break;
    case FamilyKind::GC:
      for (Mask a = 0;; ++a) {
        Mask meet = full;
        for (Mask c = 0;; ++c) {
          const Mask bc = space.interior(c);
          if (subset_of(a, bc)) meet &= space.closure(bc);
          if (c == full) break;
        }
        if (meet == a) members.push_back(a);
        if (a == full) break;
      }
      break;
  }
  return ElementFamily{kind, sorted_unique(std::move(members))};
}

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Open: return "OPEN";
    case FamilyKind::Closed: return "CLOSED";
    case FamilyKind::Saturated: return "SATURATED";
    case FamilyKind::CoSaturated: return "COSATURATED";
    case FamilyKind::LC: return "LC";
    case FamilyKind::LO: return "LO";
    case FamilyKind::WLC: return "WLC";
    case FamilyKind::WLO: return "WLO";
    case FamilyKind::RO: return "RO";
    case FamilyKind::RC: return "RC";
    case FamilyKind::GO: return "GO";
    case FamilyKind::GC: return "GC";
  }
  return "?";
}

std::optional<Mask> join_generation_witness(std::span<const Mask> s, const FinSpace& space) {
  const Mask full = space.full();
  for (Mask a = 0;; ++a) {
    Mask join = 0;
    for (Mask x : s)
      if (subset_of(x, a)) join |= x;
    if (join != a) return a;
    if (a == full) break;
  }
  return std::nullopt;
}

bool join_generates(std::span<const Mask> s, const FinSpace& space) {
  return !join_generation_witness(s, space).has_value();
}

std::optional<Mask> meet_generation_witness(std::span<const Mask> s, const FinSpace& space) {
  const Mask full = space.full();
  for (Mask a = 0;; ++a) {
    Mask meet = full;
    for (Mask x : s)
      if (subset_of(a, x)) meet &= x;
    if (meet != a) return a;
    if (a == full) break;
  }
  return std::nullopt;
}

bool meet_generates(std::span<const Mask> s, const FinSpace& space) {
  return !meet_generation_witness(s, space).has_value();
}

Mask heyting_impl(const FinSpace& space, Mask a, Mask b) {
  if (!space.is_open(a)) throw NotOpen(a);
  if (!space.is_open(b)) throw NotOpen(b);
  return space.interior((space.full() & ~a) | b);
}

Mask coheyting_diff(const FinSpace& space, Mask a, Mask b) {
  if (!space.is_closed(a)) throw NotClosed(a);
  if (!space.is_closed(b)) throw NotClosed(b);
  return space.closure(b & (space.full() & ~a));
}

std::vector<Mask> generated_complete_boolean(std::span<const Mask> s, const FinSpace& space) {
  const Mask full = space.full();
  std::vector<Mask> seed(s.begin(), s.end());
  seed.push_back(0);  // the empty join
  for (;;) {
    std::size_t before = seed.size();
    std::vector<Mask> next = seed;
    for (Mask x : seed) next.push_back(full & ~x);
    next = close_under(std::move(next), [](Mask a, Mask b) { return a | b; });
    seed = std::move(next);
    if (seed.size() == before) break;
  }
  return seed;
}

std::vector<Mask> generated_complete_lattice(std::span<const Mask> s, const FinSpace& space) {
  std::vector<Mask> seed(s.begin(), s.end());
  seed.push_back(0);             // empty join
  seed.push_back(space.full());  // empty meet
  for (;;) {
    std::size_t before = seed.size();
    seed = close_under(std::move(seed), [](Mask a, Mask b) { return a | b; });
    seed = close_under(std::move(seed), [](Mask a, Mask b) { return a & b; });
    if (seed.size() == before) break;
  }
  return seed;
}

}  // namespace mtkit
