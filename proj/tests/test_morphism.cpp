#include <doctest.h>

#include "mtkit/morphism.hpp"
#include "support/fixtures.hpp"

using namespace mtkit;
using test::disc2;
using test::sierp;
using test::triv2;

TEST_CASE("every map out of a discrete space is continuous") {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const MtMorphism h = check_mt_morphism(sierp(), disc2(), {a, b});
      CHECK(h.pointmap == std::vector<int>{a, b});
    }
}

TEST_CASE("constant maps into any space are continuous") {
  const MtMorphism h = check_mt_morphism(sierp(), triv2(), {1, 1});
  // preimage of the open point covers both points of the indiscrete space
  CHECK(h.preimage(0x2) == 0x3);
  CHECK(h.preimage(0x1) == 0x0);
}

TEST_CASE("the identity-like map from the indiscrete space is not continuous") {
  try {
    check_mt_morphism(sierp(), triv2(), {0, 1});
    CHECK(false);
  } catch (const NotContinuous& e) {
    CHECK(e.witness_open == 0x2);  // {1} pulls back to {1}, not open there
  }
}

TEST_CASE("identity on Sierpinski is an MT-morphism") {
  const MtMorphism h = check_mt_morphism(sierp(), sierp(), {0, 1});
  for (Mask a = 0; a <= 3; ++a) CHECK(h.preimage(a) == a);
}

TEST_CASE("point map validation") {
  CHECK_THROWS_AS(check_mt_morphism(sierp(), sierp(), {0}), PreconditionViolated);
  CHECK_THROWS_AS(check_mt_morphism(sierp(), sierp(), {0, 5}), PreconditionViolated);
}

TEST_CASE("the preimage inequality holds on every element") {
  const MtMorphism h = check_mt_morphism(sierp(), disc2(), {1, 0});
  for (Mask a = 0; a <= 3; ++a)
    CHECK(subset_of(h.preimage(sierp().interior(a)), disc2().interior(h.preimage(a))));
}
