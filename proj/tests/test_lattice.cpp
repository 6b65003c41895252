#include <doctest.h>

#include "mtkit/frame.hpp"
#include "mtkit/functor.hpp"
#include "mtkit/lattice.hpp"
#include "support/fixtures.hpp"

using namespace mtkit;
using test::boolean4;
using test::chainfrm3;
using test::frame1;
using test::frame2;

TEST_CASE("the four-element diamond is a distributive lattice") {
  const FiniteFrame f = boolean4();
  CHECK(f.bot() == 0);
  CHECK(f.top() == 3);
  CHECK(f.meet(1, 2) == 0);
  CHECK(f.join(1, 2) == 3);
}

TEST_CASE("M3 is a lattice but not distributive") {
  // 0 below a,b,c below 4
  std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {0, 4}};
  for (int i = 0; i < 5; ++i) pairs.push_back({i, i});
  const FiniteLattice m3 = validate_lattice_from_pairs(5, pairs);
  CHECK_THROWS_AS(validate_frame(m3), NotDistributive);
}

TEST_CASE("a two-element antichain is not a lattice") {
  CHECK_THROWS_AS(validate_lattice_from_pairs(2, {{0, 0}, {1, 1}}), NotALattice);
}

TEST_CASE("order matrices are validated") {
  CHECK_THROWS_AS(validate_lattice(2, {1, 1, 1, 1}), NotALattice);  // not antisymmetric
  CHECK_THROWS_AS(validate_lattice(2, {0, 1, 0, 1}), NotALattice);  // not reflexive
}

TEST_CASE("points of the named frames") {
  CHECK(points(chainfrm3()).size() == 2);  // meet-irreducibles 0 and 1
  CHECK(points(frame2()).size() == 1);
  CHECK(points(boolean4()).size() == 2);
  CHECK(points(frame1()).empty());  // degenerate frame has no points
}

TEST_CASE("both point routes agree on small frames") {
  CHECK(points(chainfrm3()) == points_by_filter_enumeration(chainfrm3()));
  CHECK(points(boolean4()) == points_by_filter_enumeration(boolean4()));
  for (const FinSpace& s : test::small_census(3)) {
    const FiniteFrame f = omega(s).frame;
    CHECK(points(f) == points_by_filter_enumeration(f));
  }
}

TEST_CASE("pt_space of the named frames") {
  CHECK(homeomorphic(pt_space(chainfrm3()).space, test::sierp()));
  CHECK(pt_space(boolean4()).space.opens().size() == 4);  // discrete on two points
  CHECK(pt_space(frame1()).space.points() == 0);
}

TEST_CASE("pseudocomplements") {
  const FiniteFrame c = chainfrm3();
  CHECK(pseudocomplement(c, 1) == 0);
  CHECK(pseudocomplement(c, 0) == 2);
  CHECK(pseudocomplement(boolean4(), 1) == 2);
  // on an open frame the pseudocomplement is box of the complement
  for (const FinSpace& s : test::small_census(3)) {
    const OpenFrame of = omega(s);
    for (int a = 0; a < of.frame.size(); ++a) {
      const Mask expected = s.interior(s.full() & ~of.elem[static_cast<std::size_t>(a)]);
      CHECK(of.elem[static_cast<std::size_t>(pseudocomplement(of.frame, a))] == expected);
    }
  }
}

TEST_CASE("rather-below on the named frames") {
  const FiniteFrame c = chainfrm3();
  CHECK(rather_below(c, 1, 2));   // 1* join top = top
  CHECK(!rather_below(c, 1, 1));  // 1* join 1 = 1, not top
  CHECK(rather_below(boolean4(), 1, 1));
}

TEST_CASE("completely-below has the bounds") {
  for (const FiniteFrame& f : {chainfrm3(), boolean4(), frame2()}) {
    for (int a = 0; a < f.size(); ++a) {
      CHECK(completely_below(f, f.bot(), a));
      CHECK(completely_below(f, a, f.top()));
    }
  }
}

TEST_CASE("completely-below fixpoint equals chain search") {
  for (const FinSpace& s : test::small_census(3)) {
    const FiniteFrame f = omega(s).frame;
    CHECK(completely_below_matrix(f) == completely_below_by_chains(f, f.size()));
  }
}

TEST_CASE("frame axioms on the named frames") {
  CHECK(!frame_axiom(chainfrm3(), FrameAxiom::Subfit));
  CHECK(frame_axiom(boolean4(), FrameAxiom::Subfit));
  CHECK(frame_axiom(boolean4(), FrameAxiom::Regular));
  CHECK(frame_axiom(boolean4(), FrameAxiom::Normal));
  CHECK(frame_axiom(chainfrm3(), FrameAxiom::Normal));  // only cover pair is with top
  CHECK(!frame_axiom(chainfrm3(), FrameAxiom::Hausdorff));
  // the two-element frame is fit
  CHECK(frame_axiom(frame2(), FrameAxiom::Fit));
  for (const FinSpace& s : test::small_census(3))
    CHECK(frame_axiom(omega(s).frame, FrameAxiom::Spatial));
}

TEST_CASE("frame homomorphisms validate and pt acts on points") {
  // inclusion-like hom from the chain into Boolean 4 sending 1 to the atom 1
  const FrameHom h = check_frame_hom(chainfrm3(), boolean4(), {0, 1, 3});
  const auto pt_map = apply_pt(h);
  const auto src_pts = points(h.source);
  const auto tgt_pts = points(h.target);
  REQUIRE(pt_map.size() == tgt_pts.size());
  // the point "above atom 1" pulls back to the filter {1,2}, the point above 0
  for (std::size_t q = 0; q < tgt_pts.size(); ++q) {
    std::vector<int> expected;
    for (int a = 0; a < h.source.size(); ++a)
      if (std::binary_search(tgt_pts[q].filter.begin(), tgt_pts[q].filter.end(),
                             h.map[static_cast<std::size_t>(a)]))
        expected.push_back(a);
    CHECK(src_pts[static_cast<std::size_t>(pt_map[q])].filter == expected);
  }

  CHECK_THROWS_AS(check_frame_hom(chainfrm3(), boolean4(), {0, 1, 2}), NotAFrameHom);
  // identity hom gives the identity on points
  const FrameHom id = check_frame_hom(boolean4(), boolean4(), {0, 1, 2, 3});
  CHECK(apply_pt(id) == std::vector<int>{0, 1});
}

TEST_CASE("heyting implication on a finite distributive lattice") {
  const FiniteFrame c = chainfrm3();
  CHECK(heyting(c.base(), 1, 0) == 0);
  CHECK(heyting(c.base(), 2, 1) == 1);
  CHECK(heyting(c.base(), 0, 0) == 2);
}

TEST_CASE("join and meet irreducibles") {
  CHECK(join_irreducibles(chainfrm3().base()) == std::vector<int>{1, 2});
  CHECK(meet_irreducibles(chainfrm3().base()) == std::vector<int>{0, 1});
  CHECK(join_irreducibles(boolean4().base()) == std::vector<int>{1, 2});
  CHECK(join_irreducibles(frame1().base()).empty());
}

TEST_CASE("join-infinite distributivity is automatic on small frames") {
  for (const FinSpace& s : test::small_census(3)) {
    const FiniteFrame f = omega(s).frame;
    if (f.size() > 8) continue;
    for (int a = 0; a < f.size(); ++a)
      for (std::uint32_t pick = 0; pick < (1u << f.size()); ++pick) {
        int join = f.bot(), dist = f.bot();
        for (int x = 0; x < f.size(); ++x)
          if ((pick >> x) & 1u) {
            join = f.join(join, x);
            dist = f.join(dist, f.meet(a, x));
          }
        CHECK(f.meet(a, join) == dist);
      }
  }
}

TEST_CASE("lattice isomorphism certificates") {
  const auto iso = find_lattice_isomorphism(boolean4().base(), boolean4().base());
  REQUIRE(iso.size() == 4);
  CHECK(!lattices_isomorphic(boolean4().base(), chainfrm3().base()));
}
