#include <doctest.h>

#include "mtkit/family.hpp"
#include "support/fixtures.hpp"

using namespace mtkit;
using test::disc2;
using test::sierp;
using test::triv2;

TEST_CASE("families on the named spaces match their hand enumerations") {
  const FinSpace s = sierp();
  // every subset is the meet of an open and a closed set
  CHECK(family(s, FamilyKind::LC).members == std::vector<Mask>{0x0, 0x1, 0x2, 0x3});
  // meets of opens are the opens themselves
  CHECK(family(s, FamilyKind::Saturated).members == s.opens());
  // discrete space: diamond box c = c, so every subset is regular-closed approximated
  CHECK(family(disc2(), FamilyKind::GC).members == std::vector<Mask>{0x0, 0x1, 0x2, 0x3});
  // indiscrete space: weakly locally closed elements collapse to the bounds
  CHECK(family(triv2(), FamilyKind::WLC).members == std::vector<Mask>{0x0, 0x3});
}

TEST_CASE("regular elements of the Sierpinski space") {
  // closure of the open point is everything, so {1} is not regular open
  const FinSpace s = sierp();
  CHECK(family(s, FamilyKind::RO).members == std::vector<Mask>{0x0, 0x3});
  CHECK(family(s, FamilyKind::RC).members == std::vector<Mask>{0x0, 0x3});
  CHECK(family(disc2(), FamilyKind::RO).members == disc2().opens());
}

TEST_CASE("join_generates quantifies over the whole carrier") {
  const FinSpace d = disc2();
  const std::vector<Mask> atoms{0x1, 0x2};
  CHECK(join_generates(atoms, d));

  const FinSpace s = sierp();
  const std::vector<Mask> zero{0x0};
  CHECK(!join_generates(zero, s));

  // closed sets of Sierpinski do not reach {1}
  CHECK(!join_generates(s.closeds(), s));
  CHECK(join_generation_witness(s.closeds(), s) == Mask{0x2});
}

TEST_CASE("meet_generates mirrors join_generates") {
  const FinSpace s = sierp();
  CHECK(meet_generates(s.opens(), s) == false);  // {0} is not a meet of opens
  CHECK(meet_generation_witness(s.opens(), s) == Mask{0x1});
  CHECK(meet_generates(family(s, FamilyKind::LO).members, s));
}

TEST_CASE("heyting implication on opens") {
  const FinSpace s = sierp();
  CHECK(heyting_impl(s, 0x2, 0x0) == 0x0);  // {1} -> {} = box({0}) = {}
  for (const FinSpace& m : test::small_census(3))
    for (Mask a : m.opens()) CHECK(heyting_impl(m, a, a) == m.full());
  const FinSpace d = disc2();
  for (Mask a : d.opens())
    for (Mask b : d.opens()) CHECK(heyting_impl(d, a, b) == ((d.full() & ~a) | b));
  CHECK_THROWS_AS(heyting_impl(s, 0x1, 0x0), NotOpen);
}

TEST_CASE("residuation law holds over the open frame") {
  for (const FinSpace& m : test::small_census(3))
    for (Mask a : m.opens())
      for (Mask b : m.opens()) {
        const Mask impl = heyting_impl(m, a, b);
        CHECK(m.is_open(impl));
        for (Mask c : m.opens())
          CHECK((subset_of(c & a, b)) == subset_of(c, impl));
      }
}

TEST_CASE("co-heyting difference is the dual residual") {
  for (const FinSpace& m : test::small_census(3))
    for (Mask a : m.closeds())
      for (Mask b : m.closeds()) {
        const Mask diff = coheyting_diff(m, a, b);
        CHECK(m.is_closed(diff));
        for (Mask c : m.closeds())
          CHECK(subset_of(diff, c) == subset_of(b, a | c));
      }
  CHECK_THROWS_AS(coheyting_diff(sierp(), 0x2, 0x0), NotClosed);
}

TEST_CASE("generated complete Boolean subalgebra") {
  const FinSpace s = sierp();
  CHECK(generated_complete_boolean(s.opens(), s).size() == 4);
  const FinSpace t = triv2();
  CHECK(generated_complete_boolean(t.opens(), t) == std::vector<Mask>{0x0, 0x3});
  const FinSpace d = disc2();
  CHECK(generated_complete_boolean(d.opens(), d).size() == 4);
}

TEST_CASE("generated complete sublattice") {
  const FinSpace s = sierp();
  CHECK(generated_complete_lattice(s.opens(), s) == std::vector<Mask>{0x0, 0x2, 0x3});
  const FinSpace d = disc2();
  CHECK(generated_complete_lattice(d.opens(), d).size() == 4);
}

TEST_CASE("the twelve family kinds are deduplicated and sorted") {
  for (const FinSpace& m : test::small_census(2)) {
    for (FamilyKind kind :
         {FamilyKind::Open, FamilyKind::Closed, FamilyKind::Saturated, FamilyKind::CoSaturated,
          FamilyKind::LC, FamilyKind::LO, FamilyKind::WLC, FamilyKind::WLO, FamilyKind::RO,
          FamilyKind::RC, FamilyKind::GO, FamilyKind::GC}) {
      const auto fam = family(m, kind).members;
      CHECK(std::is_sorted(fam.begin(), fam.end()));
      CHECK(std::adjacent_find(fam.begin(), fam.end()) == fam.end());
    }
  }
}
