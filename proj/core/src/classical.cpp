#include "mtkit/classical.hpp"

namespace mtkit {

namespace {

Mask point_closure(const FinSpace& x, int p) { return x.closure_by_scan(point_mask(p)); }

}  // namespace

bool classical_t0(const FinSpace& x) {
  for (int p = 0; p < x.points(); ++p)
    for (int q = p + 1; q < x.points(); ++q) {
      bool separated = false;
      for (Mask u : x.opens())
        if (has_point(u, p) != has_point(u, q)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

bool classical_td(const FinSpace& x) {
  for (int p = 0; p < x.points(); ++p) {
    bool locally_closed = false;
    for (Mask u : x.opens()) {
      if (!has_point(u, p)) continue;
      for (Mask c : x.closeds())
        if ((u & c) == point_mask(p)) {
          locally_closed = true;
          break;
        }
      if (locally_closed) break;
    }
    if (!locally_closed) return false;
  }
  return true;
}

bool classical_t1(const FinSpace& x) {
  for (int p = 0; p < x.points(); ++p)
    if (point_closure(x, p) != point_mask(p)) return false;
  return true;
}

bool classical_t2(const FinSpace& x) {
  for (int p = 0; p < x.points(); ++p)
    for (int q = p + 1; q < x.points(); ++q) {
      bool separated = false;
      for (Mask u : x.opens()) {
        if (!has_point(u, p)) continue;
        for (Mask v : x.opens())
          if (has_point(v, q) && (u & v) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

bool classical_t3(const FinSpace& x) {
  if (!classical_t1(x)) return false;
  for (int p = 0; p < x.points(); ++p)
    for (Mask c : x.closeds()) {
      if (c == 0 || has_point(c, p)) continue;
      bool separated = false;
      for (Mask u : x.opens()) {
        if (!has_point(u, p)) continue;
        for (Mask v : x.opens())
          if (subset_of(c, v) && (u & v) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

bool classical_t3half(const FinSpace& x) {
  if (!classical_t1(x)) return false;
  // Completely-below on the opens, by chain search: start from
  // closure-containment and compose until stable.
  const auto& opens = x.opens();
  const std::size_t k = opens.size();
  std::vector<std::uint8_t> rel(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      rel[i * k + j] = subset_of(x.closure_by_scan(opens[i]), opens[j]) ? 1 : 0;
  for (;;) {
    std::vector<std::uint8_t> next(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < k; ++c) {
        if (!rel[i * k + c]) continue;
        for (std::size_t j = 0; j < k; ++j)
          if (rel[c * k + j]) next[i * k + j] = 1;
      }
    if (next == rel) break;
    rel = std::move(next);
  }
  for (std::size_t j = 0; j < k; ++j) {
    Mask acc = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (rel[i * k + j]) acc |= opens[i];
    if (acc != opens[j]) return false;
  }
  return true;
}

bool classical_t4(const FinSpace& x) {
  if (!classical_t1(x)) return false;
  for (Mask c : x.closeds())
    for (Mask d : x.closeds()) {
      if ((c & d) != 0) continue;
      bool separated = false;
      for (Mask u : x.opens()) {
        if (!subset_of(c, u)) continue;
        for (Mask v : x.opens())
          if (subset_of(d, v) && (u & v) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

std::vector<Mask> irreducible_closed_sets(const FinSpace& x) {
  std::vector<Mask> out;
  for (Mask f : x.closeds()) {
    if (f == 0) continue;
    bool reducible = false;
    for (Mask c : x.closeds()) {
      if (c == f || !subset_of(c, f)) continue;
      for (Mask d : x.closeds())
        if (d != f && subset_of(d, f) && (c | d) == f) {
          reducible = true;
          break;
        }
      if (reducible) break;
    }
    if (!reducible) out.push_back(f);
  }
  return out;
}

bool classical_sober(const FinSpace& x) {
  for (Mask f : irreducible_closed_sets(x)) {
    int generic_points = 0;
    for (int p = 0; p < x.points(); ++p)
      if (point_closure(x, p) == f) ++generic_points;
    if (generic_points != 1) return false;
  }
  return true;
}

}  // namespace mtkit
