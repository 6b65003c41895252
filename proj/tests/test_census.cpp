#include <doctest.h>

#include "mtkit/census.hpp"

using namespace mtkit;

TEST_CASE("the two-point census") {
  const auto rows = census(2);
  REQUIRE(rows.size() == 4);
  long t0 = 0, t1 = 0;
  for (const auto& r : rows) {
    t0 += r.profile.t0;
    t1 += r.profile.t1;
  }
  CHECK(t0 == 3);  // the discrete space and both Sierpinski labelings
  CHECK(t1 == 1);  // only the discrete space
}

TEST_CASE("the empty census row satisfies everything") {
  const auto rows = census(0);
  REQUIRE(rows.size() == 1);
  const auto& p = rows[0].profile;
  CHECK((p.t0 && p.t_half && p.t1 && p.weakly_sober && p.sober && p.t2 && p.t3 && p.t3half &&
         p.t4));
  CHECK(rows[0].frame.subfit);
}

TEST_CASE("census output is byte-deterministic") {
  const auto rows = census(3);
  CHECK(render_census(3, rows) == render_census(3, census(3)));
  CHECK(rows.size() == 29);
}

TEST_CASE("row ids are unique and ordered like the enumeration") {
  const auto rows = census(3);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i].space_id != rows[i + 1].space_id);
}
