#include <doctest.h>

#include "mtkit/classical.hpp"
#include "mtkit/functor.hpp"
#include "support/fixtures.hpp"

using namespace mtkit;
using test::disc2;
using test::sierp;
using test::triv2;

TEST_CASE("the open frame of the powerset algebra is the frame of opens") {
  for (const FinSpace& s : test::small_census(3)) {
    const OpenFrame via_algebra = functor_O(functor_P(s));
    const OpenFrame direct = omega(s);
    CHECK(via_algebra.elem == direct.elem);
    CHECK(via_algebra.frame == direct.frame);
  }
}

TEST_CASE("open frames of the named spaces") {
  CHECK(!find_lattice_isomorphism(omega(sierp()).frame.base(), test::chainfrm3().base())
             .empty());
  CHECK(omega(disc2()).frame.size() == 4);
  CHECK(omega(triv2()).frame.size() == 2);
}

TEST_CASE("restricting a morphism to opens gives a frame homomorphism") {
  const MtMorphism h = functor_P_hom(disc2(), sierp(), {0, 1});
  const FrameHom oh = functor_O_hom(h);
  CHECK(oh.source.size() == 3);
  CHECK(oh.target.size() == 4);
  // opens of the source land on their preimages
  const OpenFrame src = omega(sierp());
  const OpenFrame tgt = omega(disc2());
  for (int a = 0; a < src.frame.size(); ++a)
    CHECK(tgt.elem[static_cast<std::size_t>(oh.map[static_cast<std::size_t>(a)])] ==
          h.preimage(src.elem[static_cast<std::size_t>(a)]));
}

TEST_CASE("the atom space reconstructs the space") {
  const AtSpace at = functor_at(functor_P(sierp()));
  CHECK(at.space.opens() == sierp().opens());
  const AtSpace att = functor_at(functor_P(triv2()));
  CHECK(att.space.opens() == triv2().opens());
  const auto eps = epsilon(sierp(), at);
  CHECK(eps == std::vector<int>{0, 1});
}

TEST_CASE("at of a morphism recovers the underlying point map") {
  const std::vector<int> f{0, 1};
  const MtMorphism h = functor_P_hom(disc2(), sierp(), f);
  CHECK(functor_at_hom(h) == f);
  const MtMorphism swap = functor_P_hom(disc2(), disc2(), {1, 0});
  CHECK(functor_at_hom(swap) == std::vector<int>{1, 0});
}

TEST_CASE("eta agrees with the atom picture") {
  const AtSpace at = functor_at(functor_P(sierp()));
  for (Mask a = 0; a <= 3; ++a) CHECK(eta(at, a) == a);
}

TEST_CASE("vartheta analysis on the named spaces") {
  const VarthetaAnalysis triv = vartheta_analysis(functor_P(triv2()));
  CHECK(!triv.injective);   // both atoms land on the single point
  CHECK(triv.surjective);
  CHECK(!triv.homeomorphism);
  CHECK(!triv.witness.empty());

  CHECK(vartheta_analysis(functor_P(sierp())).homeomorphism);
  CHECK(vartheta_analysis(functor_P(disc2())).homeomorphism);
}

TEST_CASE("soberification of the named spaces") {
  CHECK(homeomorphic(soberify(sierp()), sierp()));
  CHECK(soberify(triv2()).points() == 1);
  CHECK(soberify(test::empty_space()).points() == 0);
}

TEST_CASE("spatialization fixes finite frames") {
  const Spatialization sp = spatialize(test::chainfrm3());
  CHECK(sp.frame.frame.size() == 3);
  CHECK(sp.iso.size() == 3);
  const Spatialization sb = spatialize(test::boolean4());
  CHECK(sb.frame.frame.size() == 4);
}

TEST_CASE("unit maps satisfy their defining formulas") {
  const UnitMaps u = unit_maps(sierp());
  // vartheta(x) = up-set of x meet the opens
  for (std::size_t i = 0; i < u.at.atoms.size(); ++i) {
    const auto& filter = u.pt.pts[static_cast<std::size_t>(u.vartheta[i])].filter;
    for (int a = 0; a < u.open_frame.frame.size(); ++a) {
      const bool above = subset_of(u.at.atoms[i], u.open_frame.elem[static_cast<std::size_t>(a)]);
      CHECK(above == std::binary_search(filter.begin(), filter.end(), a));
    }
  }
  // delta(x) = the opens containing x
  for (int p = 0; p < 2; ++p) {
    const auto& filter = u.pt.pts[static_cast<std::size_t>(u.delta[static_cast<std::size_t>(p)])].filter;
    for (int a = 0; a < u.open_frame.frame.size(); ++a)
      CHECK(has_point(u.open_frame.elem[static_cast<std::size_t>(a)], p) ==
            std::binary_search(filter.begin(), filter.end(), a));
  }
  // eta is the atom picture
  CHECK(u.eta(0x2) == 0x2);
  // zeta lists the point-space opens elementwise
  CHECK(u.zeta().size() == 3);
}

TEST_CASE("the two witnesses against faithfulness") {
  const auto [identity, swap] = o_not_faithful_witness();
  CHECK(identity.pointmap != swap.pointmap);
  CHECK(identity.source == swap.source);
  // they differ on the atom {0} but agree on every open element
  CHECK(identity.preimage(0x1) != swap.preimage(0x1));
  for (Mask u : identity.source.opens())
    CHECK(identity.preimage(u) == swap.preimage(u));
}

TEST_CASE("delta is a homeomorphism exactly for sober spaces") {
  for (const FinSpace& s : test::small_census(3)) {
    const UnitMaps u = unit_maps(s);
    bool injective = true, surjective = true;
    std::vector<bool> hit(u.pt.pts.size(), false);
    for (std::size_t p = 0; p < u.delta.size(); ++p) {
      for (std::size_t q = p + 1; q < u.delta.size(); ++q)
        if (u.delta[p] == u.delta[q]) injective = false;
      hit[static_cast<std::size_t>(u.delta[p])] = true;
    }
    for (bool h : hit) surjective = surjective && h;
    bool homeo = injective && surjective;
    if (homeo)
      for (int a = 0; a < u.open_frame.frame.size() && homeo; ++a) {
        Mask img = 0;
        for (int p = 0; p < s.points(); ++p)
          if (has_point(u.open_frame.elem[static_cast<std::size_t>(a)], p))
            img |= point_mask(u.delta[static_cast<std::size_t>(p)]);
        homeo = img == u.pt.zeta[static_cast<std::size_t>(a)];
      }
    CHECK(homeo == classical_sober(s));
  }
}
