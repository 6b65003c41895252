// Acceptance suite: runs the release criteria end to end and prints one
// pass/fail line per criterion. Exit code 0 only when every criterion holds.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mtkit/census.hpp"
#include "mtkit/classical.hpp"
#include "mtkit/enumerate.hpp"
#include "mtkit/envelope.hpp"
#include "mtkit/family.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/functor.hpp"
#include "mtkit/separation.hpp"

using namespace mtkit;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int index, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, name,
              detail.c_str());
  if (!ok) ++failures;
}

std::vector<std::vector<FinSpace>> census_spaces(int max_n) {
  std::vector<std::vector<FinSpace>> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(enumerate_topologies(n));
  return out;
}

// 1. Interior laws and frame closure on all 389 labeled topologies with
//    1..4 points (the empty space included as a bonus); under 5 seconds.
void criterion1(const std::vector<std::vector<FinSpace>>& spaces) {
  Timer timer;
  long checked = 0;
  long bad = 0;
  for (const auto& batch : spaces)
    for (const FinSpace& s : batch) {
      ++checked;
      if (check_kuratowski(s).has_value()) ++bad;
      const auto& opens = s.opens();
      for (Mask a : opens)
        for (Mask b : opens)
          if (!s.is_open(a & b) || !s.is_open(a | b)) ++bad;
      if (!s.is_open(0) || !s.is_open(s.full())) ++bad;
      // arbitrary joins of opens stay open
      if (opens.size() <= 16) {
        for (std::uint32_t pick = 0; pick < (1u << opens.size()); ++pick) {
          Mask join = 0;
          for (std::size_t i = 0; i < opens.size(); ++i)
            if ((pick >> i) & 1u) join |= opens[i];
          if (!s.is_open(join)) {
            ++bad;
            break;
          }
        }
      }
    }
  const double t = timer.seconds();
  report(1, "interior laws + open-frame closure, n <= 4", bad == 0 && checked == 390 && t < 5.0,
         std::to_string(checked) + " spaces, " + std::to_string(bad) + " violations, " +
             std::to_string(t) + "s");
}

// 2. The implication ladder holds on every enumerated space.
void criterion2(const std::vector<std::vector<FinSpace>>& spaces) {
  long bad = 0;
  long checked = 0;
  for (const auto& batch : spaces)
    for (const FinSpace& s : batch) {
      ++checked;
      const SeparationProfile p = classify(s);  // throws on ladder violation
      if ((p.t4 && !p.t3half) || (p.t3half && !p.t3) || (p.t3 && !p.t2) || (p.t2 && !p.t1) ||
          (p.t1 && !p.t_half) || (p.t_half && !p.t0) || (p.t2 && !p.sober) ||
          (p.sober && !p.weakly_sober))
        ++bad;
    }
  report(2, "separation ladder soundness", bad == 0,
         std::to_string(checked) + " spaces, " + std::to_string(bad) + " violations");
}

// 3. The frame-side equivalences, zero violations, under 60 seconds at n=4.
void criterion3(const std::vector<std::vector<FinSpace>>& spaces) {
  Timer timer;
  long bad = 0;
  long checked = 0;
  for (const auto& batch : spaces)
    for (const FinSpace& s : batch) {
      ++checked;
      const FiniteFrame of = omega(s).frame;
      const bool t1 = mt_axiom(s, MtAxiom::T1).holds;
      const bool thalf = mt_axiom(s, MtAxiom::THalf).holds;
      const bool t2 = mt_axiom(s, MtAxiom::T2).holds;
      const bool t3half = mt_axiom(s, MtAxiom::T3Half).holds;
      const bool t4 = mt_axiom(s, MtAxiom::T4).holds;
      if (t1 != (thalf && frame_axiom(of, FrameAxiom::Subfit))) ++bad;
      if (t4 != (t1 && frame_axiom(of, FrameAxiom::Normal))) ++bad;
      if (t3half != (t1 && frame_axiom(of, FrameAxiom::CompletelyRegular))) ++bad;
      if (t2 && !frame_axiom(of, FrameAxiom::Hausdorff)) ++bad;
    }
  const double t = timer.seconds();
  report(3, "theorem equivalences over the n <= 4 census", bad == 0 && t < 60.0,
         std::to_string(checked) + " spaces, " + std::to_string(bad) + " violations, " +
             std::to_string(t) + "s");
}

// 4. Envelope round-trip on every open frame of the n <= 3 census, with
//    exact isomorphism certificates.
void criterion4(const std::vector<std::vector<FinSpace>>& spaces) {
  long bad = 0;
  long checked = 0;
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& s : spaces[static_cast<std::size_t>(n)]) {
      ++checked;
      const OpenFrame of = omega(s);
      const Envelope env = boolean_envelope(of.frame);
      // certificate: e is an order isomorphism onto the opens of the result
      bool ok = env.embed.size() == static_cast<std::size_t>(of.frame.size());
      for (int a = 0; a < of.frame.size() && ok; ++a)
        for (int b = 0; b < of.frame.size() && ok; ++b)
          ok = of.frame.le(a, b) == subset_of(env.embed[static_cast<std::size_t>(a)],
                                              env.embed[static_cast<std::size_t>(b)]);
      ok = ok && env.carrier.opens().size() == static_cast<std::size_t>(of.frame.size());
      if (!ok) ++bad;

      const FinSpace rebuilt = mt_from_frame(of.frame);
      const bool iso = homeomorphic(s, rebuilt);
      if (iso != mt_axiom(s, MtAxiom::THalf).holds) ++bad;
    }
  report(4, "envelope round-trip on the n <= 3 census", bad == 0,
         std::to_string(checked) + " frames, " + std::to_string(bad) + " violations");
}

// 5. The vartheta verdicts match the axiom checkers everywhere.
void criterion5(const std::vector<std::vector<FinSpace>>& spaces) {
  long bad = 0;
  long checked = 0;
  for (const auto& batch : spaces)
    for (const FinSpace& s : batch) {
      ++checked;
      const VarthetaAnalysis va = vartheta_analysis(functor_P(s));
      const AtSpace at = functor_at(functor_P(s));
      const bool wsober = mt_axiom(s, MtAxiom::WeaklySober).holds;
      if (va.injective != classical_t0(at.space)) ++bad;
      if (va.surjective != wsober) ++bad;
      if (va.homeomorphism != (wsober && classical_t0(at.space))) ++bad;
      if (mt_axiom(s, MtAxiom::Sober).holds && !va.homeomorphism) ++bad;
    }
  report(5, "vartheta analysis matches the axioms", bad == 0,
         std::to_string(checked) + " spaces, " + std::to_string(bad) + " violations");
}

// 6. Fixpoint completely-below equals the dyadic chain search, exactly, on
//    the n <= 3 census plus seeded samples with up to 8 atoms.
void criterion6(const std::vector<std::vector<FinSpace>>& spaces) {
  long bad = 0;
  long checked = 0;
  auto compare = [&](const FinSpace& s) {
    ++checked;
    if (mt_completely_matrix(s) != mt_completely_by_chains(s, s.points() + 2)) ++bad;
  };
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& s : spaces[static_cast<std::size_t>(n)]) compare(s);
  for (int n = 5; n <= 8; ++n)
    for (const FinSpace& s : sample_topologies(n, 12, 0x5eed + static_cast<unsigned>(n)))
      compare(s);
  report(6, "completely-below fixpoint equals chain search", bad == 0,
         std::to_string(checked) + " algebras, " + std::to_string(bad) + " mismatches");
}

// 7. The dyadic constructor meets its contract on every normal algebra of
//    the n <= 4 census and every admissible pair, at depth 4.
void criterion7(const std::vector<std::vector<FinSpace>>& spaces) {
  long bad = 0;
  long families = 0;
  for (const auto& batch : spaces)
    for (const FinSpace& s : batch) {
      if (!mt_axiom(s, MtAxiom::T4).holds) continue;
      for (Mask c : s.closeds())
        for (Mask a : s.opens()) {
          if (!subset_of(c, a)) continue;
          ++families;
          const UrysohnFamily fam = urysohn_family(s, c, a, 4);
          bool ok = fam.members.size() == 17 && subset_of(c, fam.members.front()) &&
                    subset_of(fam.members.back(), a);
          for (std::size_t p = 0; p < fam.members.size() && ok; ++p) {
            ok = s.is_open(fam.members[p]);
            for (std::size_t q = p + 1; q < fam.members.size() && ok; ++q)
              ok = mt_rather(s, fam.members[p], fam.members[q]);
          }
          if (!ok) ++bad;
        }
    }
  report(7, "dyadic families on all normal algebras", bad == 0,
         std::to_string(families) + " families, " + std::to_string(bad) + " violations");
}

// 8. Enumeration counts 1, 4, 29, 355, reproduced by the family-filter
//    oracle first; under 10 seconds.
void criterion8(const std::vector<std::vector<FinSpace>>& spaces) {
  Timer timer;
  const long expected[] = {1, 1, 4, 29, 355};
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4; ++n) {
    const long oracle = static_cast<long>(enumerate_topologies_by_families(n).size());
    const long primary = static_cast<long>(spaces[static_cast<std::size_t>(n)].size());
    if (oracle != expected[n] || primary != expected[n]) ok = false;
    detail += std::to_string(primary) + (n < 4 ? "," : "");
  }
  const double t = timer.seconds();
  report(8, "labeled enumeration counts 1,4,29,355", ok && t < 10.0,
         "got " + detail + ", " + std::to_string(t) + "s");
}

// 9. The algebraic axioms agree with the independent point-set oracles.
void criterion9(const std::vector<std::vector<FinSpace>>& spaces) {
  long bad = 0;
  long checked = 0;
  for (const auto& batch : spaces)
    for (const FinSpace& s : batch) {
      ++checked;
      if (mt_axiom(s, MtAxiom::T0).holds != classical_t0(s)) ++bad;
      if (mt_axiom(s, MtAxiom::THalf).holds != classical_td(s)) ++bad;
      if (mt_axiom(s, MtAxiom::T1).holds != classical_t1(s)) ++bad;
      if (mt_axiom(s, MtAxiom::T2).holds != classical_t2(s)) ++bad;
      if (mt_axiom(s, MtAxiom::T3).holds != classical_t3(s)) ++bad;
      if (mt_axiom(s, MtAxiom::T3Half).holds != classical_t3half(s)) ++bad;
      if (mt_axiom(s, MtAxiom::T4).holds != classical_t4(s)) ++bad;
      if (mt_axiom(s, MtAxiom::Sober).holds != classical_sober(s)) ++bad;
    }
  report(9, "algebraic vs point-set axiom agreement", bad == 0,
         std::to_string(checked) + " spaces x 8 axioms, " + std::to_string(bad) +
             " disagreements");
}

// 10. The non-faithfulness witness: two distinct endomorphisms with equal
//     restrictions to the opens.
void criterion10() {
  bool ok = true;
  std::string detail = "witness verified";
  try {
    const auto [id_hom, swap_hom] = o_not_faithful_witness();
    ok = ok && id_hom.pointmap != swap_hom.pointmap;
    ok = ok && id_hom.preimage(0x1) != swap_hom.preimage(0x1);
    for (Mask u : id_hom.source.opens()) ok = ok && id_hom.preimage(u) == swap_hom.preimage(u);
    const FrameHom of_id = functor_O_hom(id_hom);
    const FrameHom of_swap = functor_O_hom(swap_hom);
    ok = ok && of_id.map == of_swap.map;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(10, "distinct morphisms with equal open restrictions", ok, detail);
}

}  // namespace

int main() {
  const auto spaces = census_spaces(4);
  criterion1(spaces);
  criterion2(spaces);
  criterion3(spaces);
  criterion4(spaces);
  criterion5(spaces);
  criterion6(spaces);
  criterion7(spaces);
  criterion8(spaces);
  criterion9(spaces);
  criterion10();
  if (failures == 0)
    std::printf("acceptance: all 10 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
