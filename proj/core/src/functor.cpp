#include "mtkit/functor.hpp"

#include <algorithm>

#include "mtkit/classical.hpp"

namespace mtkit {

MtAlgebra functor_P(const FinSpace& x) { return MtAlgebra{x}; }

MtMorphism functor_P_hom(const FinSpace& domain, const FinSpace& codomain,
                         std::vector<int> f) {
  return check_mt_morphism(codomain, domain, std::move(f));
}

int OpenFrame::index_of(Mask open) const {
  auto it = std::lower_bound(elem.begin(), elem.end(), open);
  if (it == elem.end() || *it != open)
    throw PreconditionViolated("mask is not an element of the frame");
  return static_cast<int>(it - elem.begin());
}

namespace {

OpenFrame frame_of_masks(std::vector<Mask> elems) {
  std::sort(elems.begin(), elems.end());
  const int k = static_cast<int>(elems.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      leq[static_cast<std::size_t>(a) * k + b] =
          subset_of(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])
              ? 1
              : 0;
  OpenFrame out;
  out.frame = validate_frame(validate_lattice(k, leq));
  out.elem = std::move(elems);
  return out;
}

}  // namespace

OpenFrame functor_O(const MtAlgebra& m) {
  // Fixpoints of box, scanned over the carrier.
  std::vector<Mask> opens;
  const Mask full = m.full();
  for (Mask a = 0;; ++a) {
    if (m.box(a) == a) opens.push_back(a);
    if (a == full) break;
  }
  return frame_of_masks(std::move(opens));
}

OpenFrame omega(const FinSpace& x) { return frame_of_masks(x.opens()); }

FrameHom functor_O_hom(const MtMorphism& h) {
  const OpenFrame src = omega(h.source);
  const OpenFrame tgt = omega(h.target);

  // On open elements the morphism inequality is an equality.
  for (Mask a : h.source.opens())
    if (h.preimage(h.source.interior(a)) != h.target.interior(h.preimage(a)))
      throw std::logic_error("restriction identity h(box a) = box h(a) fails on an open");

  std::vector<int> map;
  map.reserve(src.elem.size());
  for (Mask a : src.elem) {
    const Mask image = h.preimage(a);
    if (!h.target.is_open(image))
      throw std::logic_error("restriction of an MT-morphism leaves the opens");
    map.push_back(tgt.index_of(image));
  }
  return check_frame_hom(src.frame, tgt.frame, std::move(map));
}

AtSpace functor_at(const MtAlgebra& m) {
  AtSpace at;
  // Atoms of a powerset: the minimal nonzero elements, i.e. the singletons.
  for (int x = 0; x < m.points(); ++x) at.atoms.push_back(point_mask(x));

  std::vector<Mask> opens;
  opens.reserve(m.space.opens().size());
  for (Mask u : m.space.opens()) opens.push_back(eta(at, u));
  at.space = validate_space(static_cast<int>(at.atoms.size()), std::move(opens));
  return at;
}

Mask eta(const AtSpace& at, Mask a) {
  Mask out = 0;
  for (std::size_t i = 0; i < at.atoms.size(); ++i)
    if (subset_of(at.atoms[i], a)) out |= point_mask(static_cast<int>(i));
  return out;
}

std::vector<int> functor_at_hom(const MtMorphism& h) {
  const AtSpace at_src = functor_at(MtAlgebra{h.source});
  const AtSpace at_tgt = functor_at(MtAlgebra{h.target});

  // h*(x) = meet of { a | x <= h(a) }. That set is a filter (h preserves
  // meets), so its generator is the meet of the co-atoms it contains.
  std::vector<int> map;
  map.reserve(at_tgt.atoms.size());
  const Mask full_src = h.source.full();
  for (Mask x : at_tgt.atoms) {
    Mask acc = full_src;
    for (int p = 0; p < h.source.points(); ++p) {
      const Mask coatom = full_src & ~point_mask(p);
      if (subset_of(x, h.preimage(coatom))) acc &= coatom;
    }
    bool found = false;
    for (std::size_t i = 0; i < at_src.atoms.size(); ++i)
      if (at_src.atoms[i] == acc) {
        map.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    if (!found) throw std::logic_error("left adjoint does not send atoms to atoms");
  }

  for (Mask u : at_src.space.opens()) {
    Mask pre = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (has_point(u, map[i])) pre |= point_mask(static_cast<int>(i));
    if (!at_tgt.space.is_open(pre))
      throw std::logic_error("at of an MT-morphism is not continuous");
  }
  return map;
}

std::vector<int> epsilon(const FinSpace& x, const AtSpace& at) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(x.points()));
  for (int p = 0; p < x.points(); ++p) {
    const Mask singleton = point_mask(p);
    bool found = false;
    for (std::size_t i = 0; i < at.atoms.size(); ++i)
      if (at.atoms[i] == singleton) {
        out.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    if (!found) throw std::logic_error("epsilon: singleton is not an atom");
  }
  return out;
}

namespace {

int point_index_of_filter(const std::vector<FramePoint>& pts, const std::vector<int>& filter) {
  auto it = std::find_if(pts.begin(), pts.end(),
                         [&](const FramePoint& p) { return p.filter == filter; });
  if (it == pts.end()) return -1;
  return static_cast<int>(it - pts.begin());
}

}  // namespace

UnitMaps unit_maps(const FinSpace& x) {
  UnitMaps u;
  const MtAlgebra m = functor_P(x);
  u.at = functor_at(m);
  u.open_frame = functor_O(m);
  u.pt = pt_space(u.open_frame.frame);
  u.epsilon = epsilon(x, u.at);

  for (std::size_t i = 0; i < u.at.atoms.size(); ++i) {
    std::vector<int> filter;
    for (int a = 0; a < u.open_frame.frame.size(); ++a)
      if (subset_of(u.at.atoms[i], u.open_frame.elem[static_cast<std::size_t>(a)]))
        filter.push_back(a);
    const int p = point_index_of_filter(u.pt.pts, filter);
    if (p < 0) throw std::logic_error("vartheta image is not a point");
    u.vartheta.push_back(p);
  }

  for (int px = 0; px < x.points(); ++px) {
    std::vector<int> filter;
    for (int a = 0; a < u.open_frame.frame.size(); ++a)
      if (has_point(u.open_frame.elem[static_cast<std::size_t>(a)], px)) filter.push_back(a);
    const int p = point_index_of_filter(u.pt.pts, filter);
    if (p < 0) throw std::logic_error("delta image is not a point");
    u.delta.push_back(p);
  }
  return u;
}

VarthetaAnalysis vartheta_analysis(const MtAlgebra& m) {
  VarthetaAnalysis out;
  const OpenFrame of = functor_O(m);
  const PtSpace pt = pt_space(of.frame);
  const AtSpace at = functor_at(m);

  for (std::size_t i = 0; i < at.atoms.size(); ++i) {
    std::vector<int> filter;
    for (int a = 0; a < of.frame.size(); ++a)
      if (subset_of(at.atoms[i], of.elem[static_cast<std::size_t>(a)])) filter.push_back(a);
    const int p = point_index_of_filter(pt.pts, filter);
    if (p < 0) throw std::logic_error("vartheta image is not a point");
    out.map.push_back(p);
  }

  out.injective = true;
  for (std::size_t i = 0; i < out.map.size() && out.injective; ++i)
    for (std::size_t j = i + 1; j < out.map.size(); ++j)
      if (out.map[i] == out.map[j]) {
        out.injective = false;
        out.witness = "atoms " + std::to_string(i) + " and " + std::to_string(j) +
                      " share the point " + std::to_string(out.map[i]);
        break;
      }

  std::vector<bool> hit(pt.pts.size(), false);
  for (int p : out.map) hit[static_cast<std::size_t>(p)] = true;
  out.surjective = std::find(hit.begin(), hit.end(), false) == hit.end();
  if (!out.surjective && out.witness.empty()) {
    const auto miss = std::find(hit.begin(), hit.end(), false) - hit.begin();
    out.witness = "point " + std::to_string(miss) + " has no atom";
  }

  out.homeomorphism = out.injective && out.surjective;
  if (out.homeomorphism) {
    // Both directions continuous: vartheta^{-1}(zeta(a)) = eta(a) and
    // vartheta(eta(a)) = zeta(a) for all opens a.
    for (int a = 0; a < of.frame.size(); ++a) {
      const Mask ea = eta(at, of.elem[static_cast<std::size_t>(a)]);
      Mask pre = 0, img = 0;
      for (std::size_t i = 0; i < out.map.size(); ++i) {
        if (has_point(pt.zeta[static_cast<std::size_t>(a)], out.map[i]))
          pre |= point_mask(static_cast<int>(i));
        if (has_point(ea, static_cast<int>(i))) img |= point_mask(out.map[i]);
      }
      if (pre != ea || img != pt.zeta[static_cast<std::size_t>(a)]) {
        out.homeomorphism = false;
        out.witness = "open " + std::to_string(a) + " breaks the homeomorphism";
        break;
      }
    }
  }
  return out;
}

FinSpace soberify(const FinSpace& x) {
  FinSpace result = pt_space(omega(x).frame).space;
  if (!classical_sober(result))
    throw std::logic_error("soberification failed the space-level sober test");
  return result;
}

Spatialization spatialize(const FiniteFrame& l) {
  const PtSpace pt = pt_space(l);
  Spatialization out;
  out.frame = omega(pt.space);
  out.iso.reserve(static_cast<std::size_t>(l.size()));
  for (int a = 0; a < l.size(); ++a)
    out.iso.push_back(out.frame.index_of(pt.zeta[static_cast<std::size_t>(a)]));

  // zeta is one-to-one and order-reflecting on a finite frame.
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.le(a, b) != out.frame.frame.le(out.iso[static_cast<std::size_t>(a)],
                                           out.iso[static_cast<std::size_t>(b)]))
        throw std::logic_error("zeta is not an order isomorphism");
  std::vector<int> sorted = out.iso;
  std::sort(sorted.begin(), sorted.end());
  if (std::unique(sorted.begin(), sorted.end()) != sorted.end() ||
      static_cast<int>(sorted.size()) != out.frame.frame.size())
    throw std::logic_error("zeta is not onto");
  return out;
}

std::pair<MtMorphism, MtMorphism> o_not_faithful_witness() {
  const FinSpace triv2 = indiscrete_space(2);
  MtMorphism identity = check_mt_morphism(triv2, triv2, {0, 1});
  MtMorphism swap = check_mt_morphism(triv2, triv2, {1, 0});

  if (identity.preimage(point_mask(0)) == swap.preimage(point_mask(0)))
    throw std::logic_error("witness morphisms are not distinct");
  for (Mask u : triv2.opens())
    if (identity.preimage(u) != swap.preimage(u))
      throw std::logic_error("witness morphisms differ on an open");
  return {std::move(identity), std::move(swap)};
}

}  // namespace mtkit
