#include "mtkit/frame.hpp"

#include <algorithm>

namespace mtkit {

namespace {

std::vector<int> upset_filter(const FiniteFrame& frame, int m) {
  std::vector<int> filter;
  for (int a = 0; a < frame.size(); ++a)
    if (!frame.le(a, m)) filter.push_back(a);
  return filter;
}

}  // namespace

bool is_completely_prime_filter(const FiniteFrame& frame, const std::vector<int>& filter) {
  const int m = frame.size();
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  for (int a : filter) in[static_cast<std::size_t>(a)] = true;

  if (filter.empty()) return false;
  if (in[static_cast<std::size_t>(frame.bot())]) return false;  // complete primeness at the empty join
  if (!in[static_cast<std::size_t>(frame.top())]) return false;
  for (int a : filter)
    for (int b = 0; b < m; ++b)
      if (frame.le(a, b) && !in[static_cast<std::size_t>(b)]) return false;
  for (int a : filter)
    for (int b : filter)
      if (!in[static_cast<std::size_t>(frame.meet(a, b))]) return false;
  // binary primeness; arbitrary joins reduce to binary ones on a finite frame
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (in[static_cast<std::size_t>(frame.join(a, b))] &&
          !in[static_cast<std::size_t>(a)] && !in[static_cast<std::size_t>(b)])
        return false;
  return true;
}

std::vector<FramePoint> points(const FiniteFrame& frame) {
  std::vector<FramePoint> out;
  for (int m : meet_irreducibles(frame.base())) out.push_back({upset_filter(frame, m)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FramePoint> points_by_filter_enumeration(const FiniteFrame& frame) {
  const int m = frame.size();
  if (m > 20) throw BoundExceeded(m, 20);
  std::vector<FramePoint> out;
  for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
    std::vector<int> filter;
    for (int a = 0; a < m; ++a)
      if ((bits >> a) & 1u) filter.push_back(a);
    if (is_completely_prime_filter(frame, filter)) out.push_back({std::move(filter)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PtSpace pt_space(const FiniteFrame& frame) {
  PtSpace result;
  result.pts = points(frame);
  const int k = static_cast<int>(result.pts.size());
  if (k > kMaxPoints) throw BoundExceeded(k, kMaxPoints);

  result.zeta.assign(static_cast<std::size_t>(frame.size()), 0);
  for (int a = 0; a < frame.size(); ++a) {
    Mask z = 0;
    for (int p = 0; p < k; ++p) {
      const auto& f = result.pts[static_cast<std::size_t>(p)].filter;
      if (std::binary_search(f.begin(), f.end(), a)) z |= point_mask(p);
    }
    result.zeta[static_cast<std::size_t>(a)] = z;
  }

  std::vector<Mask> opens = result.zeta;
  result.space = validate_space(k, std::move(opens));
  return result;
}

int pseudocomplement(const FiniteFrame& frame, int a) {
  int acc = frame.bot();
  for (int b = 0; b < frame.size(); ++b)
    if (frame.meet(b, a) == frame.bot()) acc = frame.join(acc, b);
  return acc;
}

bool rather_below(const FiniteFrame& frame, int b, int a) {
  return frame.join(pseudocomplement(frame, b), a) == frame.top();
}

std::vector<std::uint8_t> rather_below_matrix(const FiniteFrame& frame) {
  const int m = frame.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(m) * m, 0);
  std::vector<int> pstar(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) pstar[static_cast<std::size_t>(b)] = pseudocomplement(frame, b);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a)
      rel[static_cast<std::size_t>(b) * m + a] =
          frame.join(pstar[static_cast<std::size_t>(b)], a) == frame.top() ? 1 : 0;
  return rel;
}

namespace {

// One refinement step: keep (b, a) only when some c interpolates it.
bool refine_interpolative(std::vector<std::uint8_t>& rel, int m) {
  bool changed = false;
  std::vector<std::uint8_t> next = rel;
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      if (!rel[static_cast<std::size_t>(b) * m + a]) continue;
      bool witnessed = false;
      for (int c = 0; c < m && !witnessed; ++c)
        witnessed = rel[static_cast<std::size_t>(b) * m + c] &&
                    rel[static_cast<std::size_t>(c) * m + a];
      if (!witnessed) {
        next[static_cast<std::size_t>(b) * m + a] = 0;
        changed = true;
      }
    }
  rel = std::move(next);
  return changed;
}

std::vector<std::uint8_t> compose(const std::vector<std::uint8_t>& r, int m) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(m) * m, 0);
  for (int b = 0; b < m; ++b)
    for (int c = 0; c < m; ++c) {
      if (!r[static_cast<std::size_t>(b) * m + c]) continue;
      for (int a = 0; a < m; ++a)
        if (r[static_cast<std::size_t>(c) * m + a]) out[static_cast<std::size_t>(b) * m + a] = 1;
    }
  return out;
}

}  // namespace

std::vector<std::uint8_t> completely_below_matrix(const FiniteFrame& frame) {
  std::vector<std::uint8_t> rel = rather_below_matrix(frame);
  while (refine_interpolative(rel, frame.size())) {
  }
  return rel;
}

bool completely_below(const FiniteFrame& frame, int b, int a) {
  const auto rel = completely_below_matrix(frame);
  return rel[static_cast<std::size_t>(b) * frame.size() + a] != 0;
}

std::vector<std::uint8_t> completely_below_by_chains(const FiniteFrame& frame, int depth) {
  // Chains indexed by dyadic rationals: doubling the subdivision composes
  // the relation with itself. All-pairs ordering along the chain follows
  // from transitivity of rather-below.
  std::vector<std::uint8_t> rel = rather_below_matrix(frame);
  for (int d = 0; d < depth; ++d) {
    auto next = compose(rel, frame.size());
    if (next == rel) break;
    rel = std::move(next);
  }
  return rel;
}

bool frame_axiom(const FiniteFrame& frame, FrameAxiom axiom) {
  const int m = frame.size();
  const int top = frame.top();
  const int bot = frame.bot();
  switch (axiom) {
    case FrameAxiom::Subfit: {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (frame.le(a, b)) continue;
          bool separated = false;
          for (int c = 0; c < m && !separated; ++c)
            separated = frame.join(a, c) == top && frame.join(b, c) != top;
          if (!separated) return false;
        }
      return true;
    }
    case FrameAxiom::Fit: {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (frame.le(a, b)) continue;
          bool separated = false;
          for (int c = 0; c < m && !separated; ++c)
            separated = frame.join(a, c) == top &&
                        !frame.le(heyting(frame.base(), c, b), b);
          if (!separated) return false;
        }
      return true;
    }
    case FrameAxiom::Hausdorff: {
      for (int a = 0; a < m; ++a) {
        if (a == top) continue;
        int acc = bot;
        for (int u = 0; u < m; ++u)
          if (frame.le(u, a) && !frame.le(pseudocomplement(frame, u), a))
            acc = frame.join(acc, u);
        if (acc != a) return false;
      }
      return true;
    }
    case FrameAxiom::Regular: {
      const auto rel = rather_below_matrix(frame);
      for (int a = 0; a < m; ++a) {
        int acc = bot;
        for (int b = 0; b < m; ++b)
          if (rel[static_cast<std::size_t>(b) * m + a]) acc = frame.join(acc, b);
        if (acc != a) return false;
      }
      return true;
    }
    case FrameAxiom::CompletelyRegular: {
      const auto rel = completely_below_matrix(frame);
      for (int a = 0; a < m; ++a) {
        int acc = bot;
        for (int b = 0; b < m; ++b)
          if (rel[static_cast<std::size_t>(b) * m + a]) acc = frame.join(acc, b);
        if (acc != a) return false;
      }
      return true;
    }
    case FrameAxiom::Normal: {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (frame.join(a, b) != top) continue;
          bool separated = false;
          for (int u = 0; u < m && !separated; ++u) {
            if (frame.join(b, u) != top) continue;
            for (int v = 0; v < m; ++v)
              if (frame.meet(u, v) == bot && frame.join(a, v) == top) {
                separated = true;
                break;
              }
          }
          if (!separated) return false;
        }
      return true;
    }
    case FrameAxiom::Spatial: {
      const auto pts = points(frame);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (frame.le(a, b)) continue;
          bool separated = false;
          for (const auto& p : pts) {
            const bool has_a = std::binary_search(p.filter.begin(), p.filter.end(), a);
            const bool has_b = std::binary_search(p.filter.begin(), p.filter.end(), b);
            if (has_a && !has_b) {
              separated = true;
              break;
            }
          }
          if (!separated) return false;
        }
      return true;
    }
  }
  return false;
}

FrameProfile frame_profile(const FiniteFrame& frame) {
  return FrameProfile{
      frame_axiom(frame, FrameAxiom::Subfit),
      frame_axiom(frame, FrameAxiom::Fit),
      frame_axiom(frame, FrameAxiom::Hausdorff),
      frame_axiom(frame, FrameAxiom::Regular),
      frame_axiom(frame, FrameAxiom::CompletelyRegular),
      frame_axiom(frame, FrameAxiom::Normal),
      frame_axiom(frame, FrameAxiom::Spatial),
  };
}

FrameHom check_frame_hom(FiniteFrame source, FiniteFrame target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.size())
    throw NotAFrameHom("map must be total on the source", 0, 0);
  for (int v : map)
    if (v < 0 || v >= target.size()) throw NotAFrameHom("value out of range", v, 0);

  auto h = [&](int a) { return map[static_cast<std::size_t>(a)]; };
  if (h(source.bot()) != target.bot()) throw NotAFrameHom("bottom not preserved", source.bot(), 0);
  if (h(source.top()) != target.top()) throw NotAFrameHom("top not preserved", source.top(), 0);
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b) {
      if (h(source.meet(a, b)) != target.meet(h(a), h(b)))
        throw NotAFrameHom("binary meet not preserved", a, b);
      if (h(source.join(a, b)) != target.join(h(a), h(b)))
        throw NotAFrameHom("binary join not preserved", a, b);
    }
  return FrameHom{std::move(source), std::move(target), std::move(map)};
}

std::vector<int> apply_pt(const FrameHom& hom) {
  const auto src_pts = points(hom.source);
  const auto tgt_pts = points(hom.target);

  std::vector<int> out;
  out.reserve(tgt_pts.size());
  for (const auto& q : tgt_pts) {
    std::vector<int> preimage;
    for (int a = 0; a < hom.source.size(); ++a)
      if (std::binary_search(q.filter.begin(), q.filter.end(),
                             hom.map[static_cast<std::size_t>(a)]))
        preimage.push_back(a);
    auto it = std::find_if(src_pts.begin(), src_pts.end(),
                           [&](const FramePoint& p) { return p.filter == preimage; });
    if (it == src_pts.end())
      throw std::logic_error("preimage of a point is not a point");
    out.push_back(static_cast<int>(it - src_pts.begin()));
  }

  // Continuity against the zeta-opens of both point spaces.
  const auto src_space = pt_space(hom.source);
  const auto tgt_space = pt_space(hom.target);
  for (Mask u : src_space.space.opens()) {
    Mask pre = 0;
    for (std::size_t q = 0; q < out.size(); ++q)
      if (has_point(u, out[q])) pre |= point_mask(static_cast<int>(q));
    if (!tgt_space.space.is_open(pre))
      throw std::logic_error("pt of a frame homomorphism is not continuous");
  }
  return out;
}

}  // namespace mtkit
