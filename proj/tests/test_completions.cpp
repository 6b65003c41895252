#include <doctest.h>

#include "mtkit/envelope.hpp"
#include "mtkit/functor.hpp"
#include "mtkit/poset.hpp"
#include "support/fixtures.hpp"

using namespace mtkit;
using test::boolean4;
using test::chainfrm3;
using test::frame2;

namespace {

FinPoset poset_of_lattice(const FiniteLattice& lat) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(lat.size()) * lat.size(), 0);
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b)
      leq[static_cast<std::size_t>(a) * lat.size() + b] = lat.le(a, b) ? 1 : 0;
  return validate_poset(lat.size(), leq);
}

// Brute-force check of the envelope's universal property against the
// powerset target P({0..k-1}): every bounded lattice hom L -> P(K) factors
// through e by exactly one complete Boolean hom (a preimage of K -> J).
void check_universal_property(const FiniteFrame& l, int k) {
  const Envelope env = boolean_envelope(l);
  const int j = env.carrier.points();
  const Mask full_k = full_mask(k);

  // enumerate assignments on join-irreducibles and keep the lattice homs
  const auto irr = join_irreducibles(l.base());
  std::vector<Mask> assign(irr.size(), 0);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (std::size_t i = 0; i < irr.size(); ++i) t *= (std::size_t{1} << k);
    return t;
  }();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      assign[i] = static_cast<Mask>(rest & full_k);
      rest >>= k;
    }
    std::vector<Mask> hom(static_cast<std::size_t>(l.size()), 0);
    for (int a = 0; a < l.size(); ++a) {
      Mask v = 0;
      for (std::size_t i = 0; i < irr.size(); ++i)
        if (l.le(irr[i], a)) v |= assign[i];
      hom[static_cast<std::size_t>(a)] = v;
    }
    bool is_hom = hom[static_cast<std::size_t>(l.top())] == full_k &&
                  hom[static_cast<std::size_t>(l.bot())] == 0;
    for (int a = 0; a < l.size() && is_hom; ++a)
      for (int b = 0; b < l.size() && is_hom; ++b)
        is_hom = hom[static_cast<std::size_t>(l.meet(a, b))] ==
                     (hom[static_cast<std::size_t>(a)] & hom[static_cast<std::size_t>(b)]) &&
                 hom[static_cast<std::size_t>(l.join(a, b))] ==
                     (hom[static_cast<std::size_t>(a)] | hom[static_cast<std::size_t>(b)]);
    if (!is_hom) continue;

    // complete Boolean homs P(J) -> P(K) are the preimages of maps K -> J
    long extensions = 0;
    std::vector<int> g(static_cast<std::size_t>(k), 0);
    std::size_t maps = 1;
    for (int i = 0; i < k; ++i) maps *= static_cast<std::size_t>(j);
    if (j == 0) maps = (k == 0) ? 1 : 0;
    for (std::size_t mcode = 0; mcode < maps; ++mcode) {
      std::size_t r = mcode;
      for (int i = 0; i < k; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(r % j);
        r /= j;
      }
      bool factors = true;
      for (int a = 0; a < l.size() && factors; ++a) {
        Mask pre = 0;
        for (int i = 0; i < k; ++i)
          if (has_point(env.embed[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(i)]))
            pre |= point_mask(i);
        factors = pre == hom[static_cast<std::size_t>(a)];
      }
      if (factors) ++extensions;
    }
    CHECK(extensions == 1);
  }
}

}  // namespace

TEST_CASE("cut completion of a two-element antichain is the Boolean square") {
  const FinPoset anti = validate_poset(2, {1, 0, 0, 1});
  const Completion c = macneille(anti);
  CHECK(c.lattice.size() == 4);
  CHECK(!find_lattice_isomorphism(c.lattice, boolean4().base()).empty());
  // the embedding is order-reflecting
  CHECK(!c.lattice.le(c.embed[0], c.embed[1]));
  CHECK(!c.lattice.le(c.embed[1], c.embed[0]));
}

TEST_CASE("cut completion fixes complete lattices") {
  for (const FiniteLattice& lat : {chainfrm3().base(), boolean4().base(), frame2().base()}) {
    const Completion c = macneille(poset_of_lattice(lat));
    CHECK(!find_lattice_isomorphism(c.lattice, lat).empty());
  }
}

TEST_CASE("cut completion of the empty poset is the one-element lattice") {
  const Completion c = macneille(validate_poset(0, {}));
  CHECK(c.lattice.size() == 1);
}

TEST_CASE("posets are validated") {
  CHECK_THROWS_AS(validate_poset(2, {1, 1, 1, 1}), NotAPoset);
  CHECK_THROWS_AS(validate_poset(1, {0}), NotAPoset);
}

TEST_CASE("envelope of the three-chain is the Sierpinski algebra") {
  const Envelope env = boolean_envelope(chainfrm3());
  CHECK(env.carrier.points() == 2);
  CHECK(env.carrier.opens() == std::vector<Mask>{0x0, 0x1, 0x3});
  CHECK(homeomorphic(env.carrier, test::sierp()));
  CHECK(env.embed == std::vector<Mask>{0x0, 0x1, 0x3});
  // box is the right adjoint of the embedding
  CHECK(env.box(0x2) == 0x0);
}

TEST_CASE("envelope of a Boolean frame is a bijection onto the powerset") {
  const Envelope env = boolean_envelope(boolean4());
  CHECK(env.carrier.points() == 2);
  CHECK(env.carrier.opens().size() == 4);
}

TEST_CASE("envelope of the two-element frame") {
  const Envelope env = boolean_envelope(frame2());
  CHECK(env.carrier.points() == 1);
  CHECK(env.carrier.opens().size() == 2);
}

TEST_CASE("universal property holds for small envelopes") {
  check_universal_property(chainfrm3(), 1);
  check_universal_property(chainfrm3(), 2);
  check_universal_property(boolean4(), 2);
  check_universal_property(frame2(), 2);
}

TEST_CASE("mt_from_frame realizes the frame as the opens") {
  CHECK(mt_from_frame(boolean4()).opens() == test::disc2().opens());
  CHECK(mt_from_frame(frame2()).points() == 1);
  CHECK(homeomorphic(mt_from_frame(chainfrm3()), test::sierp()));
}

TEST_CASE("the generic envelope route agrees with the shortcut") {
  for (const FiniteFrame& f : {chainfrm3(), boolean4(), frame2(), test::frame1()}) {
    CHECK(homeomorphic(mt_from_frame(f), mt_from_frame_generic(f)));
  }
}

TEST_CASE("lower extension restricted to the whole algebra is the identity extension") {
  const FinSpace s = test::sierp();
  std::vector<std::pair<Mask, Mask>> box;
  for (Mask a = 0; a <= 3; ++a) box.push_back({a, s.interior(a)});
  const LowerExtension ext(2, box);
  for (Mask a = 0; a <= 3; ++a) CHECK(ext(a) == s.interior(a));
}

TEST_CASE("lower extension of the trivial subalgebra is the indiscrete interior") {
  const LowerExtension ext(2, {{0x0, 0x0}, {0x3, 0x3}});
  CHECK(ext(0x0) == 0x0);
  CHECK(ext(0x1) == 0x0);
  CHECK(ext(0x2) == 0x0);
  CHECK(ext(0x3) == 0x3);
}

TEST_CASE("lower extension inside the envelope of the three-chain") {
  const Envelope env = boolean_envelope(chainfrm3());
  std::vector<std::pair<Mask, Mask>> box;
  for (Mask a = 0; a <= env.carrier.full(); ++a) box.push_back({a, env.box(a)});
  const LowerExtension ext(env.carrier.points(), box);
  CHECK(ext(0x2) == 0x0);  // interior of the closed point alone is empty
}

TEST_CASE("lower extension validates its input") {
  // not closed under complement
  CHECK_THROWS_AS(LowerExtension(2, {{0x0, 0x0}, {0x1, 0x1}, {0x3, 0x3}}),
                  PreconditionViolated);
  // box not deflationary
  CHECK_THROWS_AS(LowerExtension(1, {{0x0, 0x1}, {0x1, 0x1}}), PreconditionViolated);
  // top not fixed
  CHECK_THROWS_AS(LowerExtension(2, {{0x0, 0x0}, {0x1, 0x0}, {0x2, 0x0}, {0x3, 0x0}}),
                  PreconditionViolated);
  // fixing singletons but collapsing pairs is not meet-preserving
  CHECK_THROWS_AS(LowerExtension(3, {{0x0, 0x0},
                                     {0x1, 0x1},
                                     {0x2, 0x2},
                                     {0x4, 0x4},
                                     {0x3, 0x0},
                                     {0x5, 0x0},
                                     {0x6, 0x0},
                                     {0x7, 0x7}}),
                  PreconditionViolated);
}
