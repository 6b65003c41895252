#include "mtkit/separation.hpp"

#include <algorithm>
#include <stdexcept>

#include "mtkit/family.hpp"

namespace mtkit {

namespace {

constexpr int kCarrierRelationBits = 10;  // 1024 x 1024 relation at most

std::size_t carrier_size_checked(const FinSpace& m) {
  if (m.points() > kCarrierRelationBits)
    throw BoundExceeded(m.points(), kCarrierRelationBits);
  return m.carrier_size();
}

}  // namespace

bool mt_rather(const FinSpace& m, Mask a, Mask b) {
  return subset_of(m.closure(a), m.interior(b));
}

std::vector<std::uint8_t> mt_rather_matrix(const FinSpace& m) {
  const std::size_t size = carrier_size_checked(m);
  std::vector<Mask> cl(size), in(size);
  for (std::size_t a = 0; a < size; ++a) {
    cl[a] = m.closure(static_cast<Mask>(a));
    in[a] = m.interior(static_cast<Mask>(a));
  }
  std::vector<std::uint8_t> rel(size * size, 0);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      rel[a * size + b] = subset_of(cl[a], in[b]) ? 1 : 0;
  return rel;
}

std::vector<std::uint8_t> mt_completely_matrix(const FinSpace& m) {
  const std::size_t size = carrier_size_checked(m);
  std::vector<std::uint8_t> rel = mt_rather_matrix(m);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::uint8_t> next = rel;
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        if (!rel[a * size + b]) continue;
        bool witnessed = false;
        for (std::size_t c = 0; c < size && !witnessed; ++c)
          witnessed = rel[a * size + c] && rel[c * size + b];
        if (!witnessed) {
          next[a * size + b] = 0;
          changed = true;
        }
      }
    rel = std::move(next);
  }
  return rel;
}

bool mt_completely(const FinSpace& m, Mask a, Mask b) {
  const auto rel = mt_completely_matrix(m);
  return rel[static_cast<std::size_t>(a) * m.carrier_size() + b] != 0;
}

std::vector<std::uint8_t> mt_completely_by_chains(const FinSpace& m, int depth) {
  const std::size_t size = carrier_size_checked(m);
  std::vector<std::uint8_t> rel = mt_rather_matrix(m);
  for (int d = 0; d < depth; ++d) {
    std::vector<std::uint8_t> next(size * size, 0);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t c = 0; c < size; ++c) {
        if (!rel[a * size + c]) continue;
        for (std::size_t b = 0; b < size; ++b)
          if (rel[c * size + b]) next[a * size + b] = 1;
      }
    if (next == rel) break;
    rel = std::move(next);
  }
  return rel;
}

const char* mt_axiom_name(MtAxiom axiom) {
  switch (axiom) {
    case MtAxiom::T0: return "T0";
    case MtAxiom::THalf: return "T1/2";
    case MtAxiom::T1: return "T1";
    case MtAxiom::WeaklySober: return "wsober";
    case MtAxiom::Sober: return "sober";
    case MtAxiom::T2: return "T2";
    case MtAxiom::T3: return "T3";
    case MtAxiom::T3Half: return "T31/2";
    case MtAxiom::T4: return "T4";
  }
  return "?";
}

std::vector<Mask> closed_join_irreducibles(const FinSpace& m) {
  std::vector<Mask> out;
  for (Mask p : m.closeds()) {
    if (p == 0) continue;
    bool reducible = false;
    for (Mask c : m.closeds()) {
      if (c == p || !subset_of(c, p)) continue;
      for (Mask d : m.closeds())
        if (d != p && subset_of(d, p) && (c | d) == p) {
          reducible = true;
          break;
        }
      if (reducible) break;
    }
    if (!reducible) out.push_back(p);
  }
  return out;
}

namespace {

AxiomVerdict verdict_from_join_generation(const FinSpace& m, const std::vector<Mask>& fam) {
  if (auto w = join_generation_witness(fam, m)) return {false, {*w}};
  return {true, {}};
}

AxiomVerdict weakly_sober_verdict(const FinSpace& m) {
  for (Mask p : closed_join_irreducibles(m)) {
    bool has_atom = false;
    for (int x = 0; x < m.points() && !has_atom; ++x)
      has_atom = m.closure(point_mask(x)) == p;
    if (!has_atom) return {false, {p}};
  }
  return {true, {}};
}

// The approximation half of T3/T3half: every open is the join of the opens
// strictly inside it under the given relation.
template <typename Rel>
AxiomVerdict open_approximation_verdict(const FinSpace& m, Rel&& below) {
  for (Mask a : m.opens()) {
    Mask acc = 0;
    for (Mask b : m.opens())
      if (below(b, a)) acc |= b;
    if (acc != a) return {false, {a}};
  }
  return {true, {}};
}

AxiomVerdict t4_verdict(const FinSpace& m) {
  for (Mask c : m.closeds())
    for (Mask d : m.closeds()) {
      if ((c & d) != 0) continue;
      bool separated = false;
      for (Mask a : m.opens()) {
        if (!subset_of(c, a)) continue;
        for (Mask b : m.opens())
          if ((a & b) == 0 && subset_of(d, b)) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return {false, {c, d}};
    }
  return {true, {}};
}

}  // namespace

AxiomVerdict mt_axiom(const FinSpace& m, MtAxiom axiom) {
  switch (axiom) {
    case MtAxiom::T0:
      return verdict_from_join_generation(m, family(m, FamilyKind::WLC).members);
    case MtAxiom::THalf:
      return verdict_from_join_generation(m, family(m, FamilyKind::LC).members);
    case MtAxiom::T1:
      return verdict_from_join_generation(m, m.closeds());
    case MtAxiom::WeaklySober:
      return weakly_sober_verdict(m);
    case MtAxiom::Sober: {
      auto t0 = mt_axiom(m, MtAxiom::T0);
      if (!t0.holds) return t0;
      auto ws = weakly_sober_verdict(m);
      if (ws.holds) {
        // with T0 the atom under each join-irreducible closed element is
        // unique; checked, not assumed
        for (Mask p : closed_join_irreducibles(m)) {
          int atoms = 0;
          for (int x = 0; x < m.points(); ++x)
            if (m.closure(point_mask(x)) == p) ++atoms;
          if (atoms != 1)
            throw std::logic_error("sober algebra with a non-unique generic atom");
        }
      }
      return ws;
    }
    case MtAxiom::T2:
      return verdict_from_join_generation(m, family(m, FamilyKind::GC).members);
    case MtAxiom::T3: {
      auto t1 = mt_axiom(m, MtAxiom::T1);
      if (!t1.holds) return t1;
      return open_approximation_verdict(
          m, [&](Mask b, Mask a) { return mt_rather(m, b, a); });
    }
    case MtAxiom::T3Half: {
      auto t1 = mt_axiom(m, MtAxiom::T1);
      if (!t1.holds) return t1;
      const auto rel = mt_completely_matrix(m);
      const std::size_t size = m.carrier_size();
      return open_approximation_verdict(m, [&](Mask b, Mask a) {
        return rel[static_cast<std::size_t>(b) * size + a] != 0;
      });
    }
    case MtAxiom::T4: {
      auto t1 = mt_axiom(m, MtAxiom::T1);
      if (!t1.holds) return t1;
      return t4_verdict(m);
    }
  }
  throw std::logic_error("unknown axiom");
}

bool dual_axiom_check(const FinSpace& m, MtAxiom axiom) {
  switch (axiom) {
    case MtAxiom::T0:
      return meet_generates(family(m, FamilyKind::WLO).members, m);
    case MtAxiom::THalf:
      return meet_generates(family(m, FamilyKind::LO).members, m);
    case MtAxiom::T1:
      return meet_generates(m.opens(), m);
    case MtAxiom::WeaklySober: {
      // Every meet-irreducible open is the complement of the closure of an atom.
      const Mask full = m.full();
      for (Mask mo : m.opens()) {
        if (mo == full) continue;
        bool reducible = false;
        for (Mask c : m.opens()) {
          if (c == mo || !subset_of(mo, c)) continue;
          for (Mask d : m.opens())
            if (d != mo && subset_of(mo, d) && (c & d) == mo) {
              reducible = true;
              break;
            }
          if (reducible) break;
        }
        if (reducible) continue;
        bool has_atom = false;
        for (int x = 0; x < m.points() && !has_atom; ++x)
          has_atom = (full & ~m.closure(point_mask(x))) == mo;
        if (!has_atom) return false;
      }
      return true;
    }
    case MtAxiom::Sober:
      return dual_axiom_check(m, MtAxiom::T0) && dual_axiom_check(m, MtAxiom::WeaklySober);
    case MtAxiom::T2:
      return meet_generates(family(m, FamilyKind::GO).members, m);
    case MtAxiom::T3: {
      if (!dual_axiom_check(m, MtAxiom::T1)) return false;
      const Mask full = m.full();
      for (Mask c : m.closeds()) {
        Mask acc = full;
        for (Mask d : m.closeds())
          if (mt_rather(m, c, d)) acc &= d;
        if (acc != c) return false;
      }
      return true;
    }
    case MtAxiom::T3Half: {
      if (!dual_axiom_check(m, MtAxiom::T1)) return false;
      const auto rel = mt_completely_matrix(m);
      const std::size_t size = m.carrier_size();
      const Mask full = m.full();
      for (Mask c : m.closeds()) {
        Mask acc = full;
        for (Mask d : m.closeds())
          if (rel[static_cast<std::size_t>(c) * size + d]) acc &= d;
        if (acc != c) return false;
      }
      return true;
    }
    case MtAxiom::T4: {
      if (!dual_axiom_check(m, MtAxiom::T1)) return false;
      const Mask full = m.full();
      for (Mask a : m.opens())
        for (Mask b : m.opens()) {
          if ((a | b) != full) continue;
          bool covered = false;
          for (Mask c : m.closeds()) {
            if (!subset_of(c, a)) continue;
            for (Mask d : m.closeds())
              if ((c | d) == full && subset_of(d, b)) {
                covered = true;
                break;
              }
            if (covered) break;
          }
          if (!covered) return false;
        }
      return true;
    }
  }
  throw std::logic_error("unknown axiom");
}

Mask interpolate(const FinSpace& m, Mask a, Mask b) {
  if (!mt_axiom(m, MtAxiom::T4).holds) throw NotNormal();
  if (!mt_rather(m, a, b)) throw NotRatherBelow(a, b);
  for (Mask u : m.opens())
    if (mt_rather(m, a, u) && mt_rather(m, u, b)) return u;
  throw std::logic_error("normal algebra admits no interpolant");
}

UrysohnFamily urysohn_family(const FinSpace& m, Mask closed_c, Mask open_a, int depth) {
  if (depth < 1) throw PreconditionViolated("depth must be at least 1");
  if (!m.is_closed(closed_c)) throw PreconditionViolated("first bound must be closed");
  if (!m.is_open(open_a)) throw PreconditionViolated("second bound must be open");
  if (!subset_of(closed_c, open_a))
    throw PreconditionViolated("the closed element must lie below the open one");
  if (!mt_axiom(m, MtAxiom::T4).holds) throw NotNormal();

  const std::size_t count = (std::size_t{1} << depth) + 1;
  UrysohnFamily fam;
  fam.depth = depth;
  fam.members.assign(count, 0);

  // u_1 = a; u_0 interpolates c <| a (c closed below a open gives c <| a).
  fam.members[count - 1] = open_a;
  fam.members[0] = interpolate(m, closed_c, open_a);

  // Refine dyadically: at each level interpolate between the two neighbours.
  for (int level = 1; level <= depth; ++level) {
    const std::size_t step = std::size_t{1} << (depth - level);
    for (std::size_t k = step; k + 1 < count; k += 2 * step)
      fam.members[k] = interpolate(m, fam.members[k - step], fam.members[k + step]);
  }
  return fam;
}

bool SeparationProfile::holds(MtAxiom axiom) const {
  switch (axiom) {
    case MtAxiom::T0: return t0;
    case MtAxiom::THalf: return t_half;
    case MtAxiom::T1: return t1;
    case MtAxiom::WeaklySober: return weakly_sober;
    case MtAxiom::Sober: return sober;
    case MtAxiom::T2: return t2;
    case MtAxiom::T3: return t3;
    case MtAxiom::T3Half: return t3half;
    case MtAxiom::T4: return t4;
  }
  return false;
}

bool SeparationProfile::operator==(const SeparationProfile& other) const {
  return t0 == other.t0 && t_half == other.t_half && t1 == other.t1 &&
         weakly_sober == other.weakly_sober && sober == other.sober && t2 == other.t2 &&
         t3 == other.t3 && t3half == other.t3half && t4 == other.t4;
}

SeparationProfile classify(const FinSpace& m) {
  SeparationProfile p;
  const MtAxiom order[] = {MtAxiom::T0,    MtAxiom::THalf, MtAxiom::T1,
                           MtAxiom::WeaklySober, MtAxiom::Sober, MtAxiom::T2,
                           MtAxiom::T3,    MtAxiom::T3Half, MtAxiom::T4};
  bool* slots[] = {&p.t0, &p.t_half, &p.t1, &p.weakly_sober, &p.sober,
                   &p.t2, &p.t3,     &p.t3half, &p.t4};
  for (int i = 0; i < kMtAxiomCount; ++i) {
    AxiomVerdict v = mt_axiom(m, order[i]);
    *slots[i] = v.holds;
    p.witnesses[static_cast<std::size_t>(order[i])] = std::move(v.witness);
  }

  const bool ladder_ok = (!p.t4 || p.t3half) && (!p.t3half || p.t3) && (!p.t3 || p.t2) &&
                         (!p.t2 || p.t1) && (!p.t1 || p.t_half) && (!p.t_half || p.t0) &&
                         (!p.t2 || p.sober) && (!p.sober || p.weakly_sober);
  if (!ladder_ok)
    throw std::logic_error("separation ladder violated on space " + m.id());
  return p;
}

}  // namespace mtkit
