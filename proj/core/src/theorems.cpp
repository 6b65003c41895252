#include "mtkit/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "mtkit/census.hpp"
#include "mtkit/classical.hpp"
#include "mtkit/enumerate.hpp"
#include "mtkit/envelope.hpp"
#include "mtkit/family.hpp"
#include "mtkit/functor.hpp"
#include "mtkit/json_io.hpp"
#include "mtkit/separation.hpp"

namespace mtkit {

namespace {

struct SuiteContext {
  int n = 0;
  std::vector<std::vector<FinSpace>> by_points;  // by_points[k]: all spaces on k points

  // Runs f over the census at point count min(n, cap): checks whose
  // quantifiers get expensive state a smaller cap.
  long for_spaces(int cap, const std::function<void(const FinSpace&)>& f) const {
    const int k = std::min(n, cap);
    long count = 0;
    for (const auto& s : by_points[static_cast<std::size_t>(k)]) {
      f(s);
      ++count;
    }
    return count;
  }
};

std::string violation(const FinSpace& space, const std::string& what) {
  return "space " + space.id() + ": " + what + "; replay " + serialize_space(space);
}

std::string hex(Mask m) {
  std::ostringstream out;
  out << std::hex << m;
  return out.str();
}

using CheckFn = std::function<long(const SuiteContext&, std::vector<std::string>&)>;

struct TheoremCheck {
  TheoremInfo info;
  CheckFn run;
};

// ---------------------------------------------------------------------------
// core algebra checks

long check_kuratowski_suite(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (auto v = check_kuratowski(s))
      out.push_back(violation(s, "interior law " + v->law + " fails at a=" + hex(v->a) +
                                     " b=" + hex(v->b)));
    // the two interior routes agree, and diamond is the De Morgan dual both ways
    const Mask full = s.full();
    for (Mask a = 0;; ++a) {
      if (s.interior(a) != s.interior_by_scan(a)) {
        out.push_back(violation(s, "interior routes disagree at " + hex(a)));
        break;
      }
      if (s.closure(a) != s.closure_by_scan(a)) {
        out.push_back(violation(s, "closure routes disagree at " + hex(a)));
        break;
      }
      if ((full & ~s.interior(full & ~a)) != s.closure(a)) {
        out.push_back(violation(s, "diamond is not the dual of box at " + hex(a)));
        break;
      }
      if (a == full) break;
    }
  });
}

long check_open_frame_closure(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const auto& opens = s.opens();
    const auto& closeds = s.closeds();
    if (!s.is_open(0) || !s.is_open(s.full()))
      out.push_back(violation(s, "opens missing a bound"));
    for (Mask a : opens)
      for (Mask b : opens) {
        if (!s.is_open(a & b)) out.push_back(violation(s, "opens not meet-closed"));
        if (!s.is_open(a | b)) out.push_back(violation(s, "opens not join-closed"));
      }
    for (Mask a : closeds)
      for (Mask b : closeds) {
        if (!s.is_closed(a & b)) out.push_back(violation(s, "closeds not meet-closed"));
        if (!s.is_closed(a | b)) out.push_back(violation(s, "closeds not join-closed"));
      }
    // joins of arbitrary subfamilies stay open (exhaustive for small families)
    if (opens.size() <= 16) {
      for (std::uint32_t pick = 0; pick < (1u << opens.size()); ++pick) {
        Mask join = 0, meet = s.full();
        for (std::size_t i = 0; i < opens.size(); ++i)
          if ((pick >> i) & 1u) {
            join |= opens[i];
            meet &= opens[i];
          }
        if (!s.is_open(join)) {
          out.push_back(violation(s, "a join of opens is not open"));
          break;
        }
        if (!s.is_open(meet)) {
          out.push_back(violation(s, "a meet of opens is not open"));
          break;
        }
      }
    }
  });
}

long check_ro_rc_boolean(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const auto ro = family(s, FamilyKind::RO).members;
    const auto rc = family(s, FamilyKind::RC).members;
    const Mask full = s.full();

    auto in_ro = [&](Mask x) { return std::binary_search(ro.begin(), ro.end(), x); };
    for (Mask b : ro)
      if (!std::binary_search(rc.begin(), rc.end(), full & ~b))
        out.push_back(violation(s, "complement of a regular open is not regular closed"));
    for (Mask c : rc)
      if (!in_ro(full & ~c))
        out.push_back(violation(s, "complement of a regular closed is not regular open"));

    // Boolean structure: join by box-diamond, meet by box, complement by box-not.
    auto ro_join = [&](Mask x, Mask y) { return s.interior(s.closure(x | y)); };
    auto ro_meet = [&](Mask x, Mask y) { return s.interior(x & y); };
    auto ro_not = [&](Mask x) { return s.interior(full & ~x); };
    for (Mask a : ro) {
      if (!in_ro(ro_not(a)) || ro_meet(a, ro_not(a)) != 0 || ro_join(a, ro_not(a)) != full)
        out.push_back(violation(s, "regular-open complementation fails at " + hex(a)));
      for (Mask b : ro) {
        if (!in_ro(ro_join(a, b)) || !in_ro(ro_meet(a, b)))
          out.push_back(violation(s, "regular opens not closed under the stated operations"));
        for (Mask c : ro)
          if (ro_meet(a, ro_join(b, c)) != ro_join(ro_meet(a, b), ro_meet(a, c))) {
            out.push_back(violation(s, "regular-open distributivity fails"));
            return;
          }
      }
    }
    // the stated join is the least upper bound in RO, over whole subfamilies
    if (ro.size() <= 16) {
      for (std::uint32_t pick = 0; pick < (1u << ro.size()); ++pick) {
        Mask u = 0;
        for (std::size_t i = 0; i < ro.size(); ++i)
          if ((pick >> i) & 1u) u |= ro[i];
        const Mask join = s.interior(s.closure(u));
        if (!in_ro(join)) {
          out.push_back(violation(s, "box-diamond join leaves the regular opens"));
          break;
        }
        bool least = subset_of(u, join);
        for (Mask cand : ro)
          if (subset_of(u, cand) && !subset_of(join, cand)) least = false;
        if (!least) {
          out.push_back(violation(s, "box-diamond join is not the least regular-open bound"));
          break;
        }
      }
    }
  });
}

long check_finite_collapse(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (family(s, FamilyKind::Saturated).members != family(s, FamilyKind::Open).members)
      out.push_back(violation(s, "saturated family differs from the opens"));
    if (family(s, FamilyKind::WLC).members != family(s, FamilyKind::LC).members)
      out.push_back(violation(s, "weakly locally closed family differs from locally closed"));
    if (family(s, FamilyKind::CoSaturated).members != family(s, FamilyKind::Closed).members)
      out.push_back(violation(s, "co-saturated family differs from the closeds"));
    if (family(s, FamilyKind::WLO).members != family(s, FamilyKind::LO).members)
      out.push_back(violation(s, "weakly co-locally closed family differs from co-locally closed"));
  });
}

long check_rather_calculus(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(4, [&](const FinSpace& s) {
    const Mask full = s.full();
    const std::size_t size = s.carrier_size();
    const auto rel = mt_rather_matrix(s);
    auto rb = [&](Mask a, Mask b) { return rel[static_cast<std::size_t>(a) * size + b] != 0; };

    for (Mask a = 0;; ++a) {
      if (!rb(0, a) || !rb(a, full))
        out.push_back(violation(s, "bounds law fails at " + hex(a)));
      for (Mask b = 0;; ++b) {
        if (rb(a, b) && !subset_of(a, b))
          out.push_back(violation(s, "rather-below does not imply order"));
        if (rb(a, b) != rb(full & ~b, full & ~a))
          out.push_back(violation(s, "contraposition fails"));
        if (b == full) break;
      }
      if (a == full) break;
    }
    // squeezing and closure under pairwise join/meet
    for (Mask a = 0;; ++a) {
      for (Mask b = 0;; ++b) {
        if (rb(a, b)) {
          for (Mask x = 0;; ++x) {
            if (subset_of(x, a) && !rb(x, b)) {
              out.push_back(violation(s, "squeeze fails below"));
              return;
            }
            if (subset_of(b, x) && !rb(a, x)) {
              out.push_back(violation(s, "squeeze fails above"));
              return;
            }
            if (x == full) break;
          }
          for (Mask a2 = 0;; ++a2) {
            for (Mask b2 = 0;; ++b2) {
              if (rb(a2, b2)) {
                if (!rb(a | a2, b | b2) || !rb(a & a2, b & b2)) {
                  out.push_back(violation(s, "pairwise join/meet closure fails"));
                  return;
                }
              }
              if (b2 == full) break;
            }
            if (a2 == full) break;
          }
        }
        if (b == full) break;
      }
      if (a == full) break;
    }
  });
}

long check_eta_closure_identity(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const AtSpace at = functor_at(functor_P(s));
    for (std::size_t i = 0; i < at.atoms.size(); ++i) {
      const Mask lhs = eta(at, s.closure(at.atoms[i]));
      const Mask rhs = at.space.closure(point_mask(static_cast<int>(i)));
      if (lhs != rhs)
        out.push_back(violation(s, "eta of the closure of atom " + std::to_string(i) +
                                       " is not the closure of its point"));
    }
  });
}

// ---------------------------------------------------------------------------
// frame checks

long check_points_two_routes(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    if (of.frame.size() > 12) return;
    if (points(of.frame) != points_by_filter_enumeration(of.frame))
      out.push_back(violation(s, "point routes disagree on the open frame"));
  });
}

long check_rather_on_opens(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    for (int a = 0; a < of.frame.size(); ++a)
      for (int b = 0; b < of.frame.size(); ++b) {
        const bool algebra = mt_rather(s, of.elem[static_cast<std::size_t>(a)],
                                       of.elem[static_cast<std::size_t>(b)]);
        const bool frame = rather_below(of.frame, a, b);
        if (algebra != frame) {
          out.push_back(violation(s, "rather-below disagrees between algebra and frame at (" +
                                         hex(of.elem[static_cast<std::size_t>(a)]) + "," +
                                         hex(of.elem[static_cast<std::size_t>(b)]) + ")"));
          return;
        }
      }
  });
}

long check_frame_axiom_inclusions(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const FrameProfile p = frame_profile(omega(s).frame);
    if (p.regular && !p.hausdorff)
      out.push_back(violation(s, "regular frame that is not Hausdorff"));
    if (p.completely_regular && !p.regular)
      out.push_back(violation(s, "completely regular frame that is not regular"));
    if (p.normal && p.subfit && !p.completely_regular)
      out.push_back(violation(s, "normal subfit frame that is not completely regular"));
    if (!p.spatial) out.push_back(violation(s, "finite frame reported non-spatial"));
  });
}

long check_frame_cbelow_two_routes(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    if (completely_below_matrix(of.frame) !=
        completely_below_by_chains(of.frame, of.frame.size()))
      out.push_back(violation(s, "completely-below routes disagree on the open frame"));
  });
}

long check_zeta_spatialization(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    try {
      const Spatialization sp = spatialize(of.frame);
      if (sp.frame.frame.size() != of.frame.size())
        out.push_back(violation(s, "spatialization changed the frame size"));
    } catch (const std::logic_error& e) {
      out.push_back(violation(s, std::string("spatialization failed: ") + e.what()));
    }
  });
}

// ---------------------------------------------------------------------------
// completion checks

long check_envelope_section(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(3, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    try {
      const Envelope env = boolean_envelope(of.frame);
      const OpenFrame result = omega(env.carrier);
      for (int a = 0; a < of.frame.size(); ++a)
        for (int b = 0; b < of.frame.size(); ++b)
          if (of.frame.le(a, b) != subset_of(env.embed[static_cast<std::size_t>(a)],
                                             env.embed[static_cast<std::size_t>(b)])) {
            out.push_back(violation(s, "envelope embedding is not an order isomorphism"));
            return;
          }
      if (result.elem.size() != static_cast<std::size_t>(of.frame.size()))
        out.push_back(violation(s, "opens of the envelope algebra do not match the frame"));
    } catch (const std::logic_error& e) {
      out.push_back(violation(s, std::string("envelope construction failed: ") + e.what()));
    }
  });
}

long check_envelope_t_half_t1(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(3, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    const FinSpace env = mt_from_frame(of.frame);
    if (!mt_axiom(env, MtAxiom::THalf).holds)
      out.push_back(violation(s, "envelope algebra is not T1/2"));
    const bool t1 = mt_axiom(env, MtAxiom::T1).holds;
    const bool subfit = frame_axiom(of.frame, FrameAxiom::Subfit);
    if (t1 != subfit)
      out.push_back(violation(s, "envelope algebra T1 does not match subfitness"));
  });
}

long check_macneille_idempotent(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(3, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    FinPoset poset{of.frame.size(), {}};
    poset.leq.assign(static_cast<std::size_t>(of.frame.size()) * of.frame.size(), 0);
    for (int a = 0; a < of.frame.size(); ++a)
      for (int b = 0; b < of.frame.size(); ++b)
        poset.leq[static_cast<std::size_t>(a) * of.frame.size() + b] =
            of.frame.le(a, b) ? 1 : 0;
    const Completion c = macneille(poset);
    if (find_lattice_isomorphism(c.lattice, of.frame.base()).empty())
      out.push_back(violation(s, "completion of a complete lattice is not isomorphic to it"));
  });
}

long check_envelope_boolean_iso(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    bool boolean = true;
    for (int a = 0; a < of.frame.size() && boolean; ++a) {
      bool complemented = false;
      for (int b = 0; b < of.frame.size() && !complemented; ++b)
        complemented = of.frame.meet(a, b) == of.frame.bot() &&
                       of.frame.join(a, b) == of.frame.top();
      boolean = complemented;
    }
    if (!boolean) return;
    const Envelope env = boolean_envelope(of.frame);
    if (env.carrier.opens().size() != env.carrier.carrier_size())
      out.push_back(violation(s, "envelope of a Boolean frame is not onto the powerset"));
  });
}

long check_envelope_generic_agrees(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const OpenFrame of = omega(s);
    if (of.frame.size() > 6) return;
    const FinSpace direct = mt_from_frame(of.frame);
    const FinSpace generic = mt_from_frame_generic(of.frame);
    if (!homeomorphic(direct, generic))
      out.push_back(violation(s, "generic envelope route disagrees with the direct one"));
  });
}

// ---------------------------------------------------------------------------
// functor checks

long check_eta_iso_spatial(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const MtAlgebra m = functor_P(s);
    const AtSpace at = functor_at(m);
    const Mask full = s.full();
    // eta is a bijection on a finite (hence atomic) algebra...
    for (Mask a = 0; a != full; ++a)
      for (Mask b = static_cast<Mask>(a + 1);; ++b) {
        if (eta(at, a) == eta(at, b)) {
          out.push_back(violation(s, "eta is not one-to-one"));
          return;
        }
        if (b == full) break;
      }
    // ... and preserves interior and closure.
    for (Mask a = 0;; ++a) {
      if (eta(at, s.interior(a)) != at.space.interior(eta(at, a))) {
        out.push_back(violation(s, "eta does not preserve the interior at " + hex(a)));
        return;
      }
      if (eta(at, s.closure(a)) != at.space.closure(eta(at, a))) {
        out.push_back(violation(s, "eta does not preserve the closure at " + hex(a)));
        return;
      }
      if (a == full) break;
    }
    // epsilon is a homeomorphism X -> at(P(X)).
    const auto eps = epsilon(s, at);
    for (Mask u : s.opens()) {
      Mask image = 0;
      for (int p = 0; p < s.points(); ++p)
        if (has_point(u, p)) image |= point_mask(eps[static_cast<std::size_t>(p)]);
      if (!at.space.is_open(image)) {
        out.push_back(violation(s, "epsilon is not open"));
        return;
      }
    }
  });
}

long check_unit_naturality(const SuiteContext& ctx, std::vector<std::string>& out) {
  long instances = 0;
  const int cap = std::min(ctx.n, 3);
  for (int nx = 0; nx <= cap; ++nx)
    for (int ny = 0; ny <= cap; ++ny)
      for (const auto& x : ctx.by_points[static_cast<std::size_t>(nx)])
        for (const auto& y : ctx.by_points[static_cast<std::size_t>(ny)]) {
          // all continuous maps f : x -> y
          std::vector<int> f(static_cast<std::size_t>(nx), 0);
          long total = 1;
          for (int i = 0; i < nx; ++i) total *= ny;
          if (ny == 0 && nx > 0) continue;
          for (long code = 0; code < total; ++code) {
            long rest = code;
            for (int i = 0; i < nx; ++i) {
              f[static_cast<std::size_t>(i)] = static_cast<int>(rest % ny);
              rest /= ny;
            }
            bool continuous = true;
            for (Mask v : y.opens()) {
              Mask pre = 0;
              for (int i = 0; i < nx; ++i)
                if (has_point(v, f[static_cast<std::size_t>(i)])) pre |= point_mask(i);
              if (!x.is_open(pre)) {
                continuous = false;
                break;
              }
            }
            if (!continuous) continue;
            ++instances;

            const MtMorphism h = functor_P_hom(x, y, f);
            // eta square: eta_target(h(a)) = preimage along at(h) of eta_source(a)
            const AtSpace at_src = functor_at(MtAlgebra{h.source});
            const AtSpace at_tgt = functor_at(MtAlgebra{h.target});
            const auto ath = functor_at_hom(h);
            const Mask full = h.source.full();
            for (Mask a = 0;; ++a) {
              Mask lhs = eta(at_tgt, h.preimage(a));
              Mask rhs = 0;
              const Mask ea = eta(at_src, a);
              for (std::size_t i = 0; i < ath.size(); ++i)
                if (has_point(ea, ath[i])) rhs |= point_mask(static_cast<int>(i));
              if (lhs != rhs) {
                out.push_back(violation(x, "eta naturality square fails toward " + y.id()));
                break;
              }
              if (a == full) break;
            }
            // epsilon square: at(P(f)) after epsilon_x = epsilon_y after f
            const auto eps_x = epsilon(x, at_tgt);
            const auto eps_y = epsilon(y, at_src);
            for (int p = 0; p < nx; ++p) {
              const int via_at = ath[static_cast<std::size_t>(eps_x[static_cast<std::size_t>(p)])];
              const int via_f = eps_y[static_cast<std::size_t>(f[static_cast<std::size_t>(p)])];
              if (via_at != via_f) {
                out.push_back(violation(x, "epsilon naturality square fails toward " + y.id()));
                break;
              }
            }
          }
        }
  return instances;
}

long check_delta_homeo_iff_sober(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(4, [&](const FinSpace& s) {
    const UnitMaps u = unit_maps(s);
    bool homeo = true;
    std::vector<bool> hit(u.pt.pts.size(), false);
    for (std::size_t p = 0; p < u.delta.size(); ++p) {
      for (std::size_t q = p + 1; q < u.delta.size(); ++q)
        if (u.delta[p] == u.delta[q]) homeo = false;
      hit[static_cast<std::size_t>(u.delta[p])] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) homeo = false;
    if (homeo) {
      for (int a = 0; a < u.open_frame.frame.size() && homeo; ++a) {
        Mask img = 0;
        for (int p = 0; p < s.points(); ++p)
          if (has_point(u.open_frame.elem[static_cast<std::size_t>(a)], p))
            img |= point_mask(u.delta[static_cast<std::size_t>(p)]);
        homeo = img == u.pt.zeta[static_cast<std::size_t>(a)];
      }
    }
    if (homeo != classical_sober(s))
      out.push_back(violation(s, "delta-homeomorphism does not match the sober test"));
  });
}

long check_o_p_equals_omega(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (functor_O(functor_P(s)).elem != omega(s).elem)
      out.push_back(violation(s, "open frame of the powerset algebra differs from the space opens"));
  });
}

long check_soberification(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(4, [&](const FinSpace& s) {
    try {
      const FinSpace sob = soberify(s);
      if (classical_sober(s) && !homeomorphic(s, sob))
        out.push_back(violation(s, "soberification moved an already sober space"));
    } catch (const std::logic_error& e) {
      out.push_back(violation(s, std::string("soberification failed: ") + e.what()));
    }
  });
}

// ---------------------------------------------------------------------------
// separation checks

long check_ladder(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const bool t0 = mt_axiom(s, MtAxiom::T0).holds;
    const bool th = mt_axiom(s, MtAxiom::THalf).holds;
    const bool t1 = mt_axiom(s, MtAxiom::T1).holds;
    const bool ws = mt_axiom(s, MtAxiom::WeaklySober).holds;
    const bool so = mt_axiom(s, MtAxiom::Sober).holds;
    const bool t2 = mt_axiom(s, MtAxiom::T2).holds;
    const bool t3 = mt_axiom(s, MtAxiom::T3).holds;
    const bool t35 = mt_axiom(s, MtAxiom::T3Half).holds;
    const bool t4 = mt_axiom(s, MtAxiom::T4).holds;
    if ((t4 && !t35) || (t35 && !t3) || (t3 && !t2) || (t2 && !t1) || (t1 && !th) ||
        (th && !t0) || (t2 && !so) || (so && !(ws && t0)))
      out.push_back(violation(s, "separation ladder violated"));
  });
}

long check_t1_iff_thalf_subfit(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const bool lhs = mt_axiom(s, MtAxiom::T1).holds;
    const bool rhs = mt_axiom(s, MtAxiom::THalf).holds &&
                     frame_axiom(omega(s).frame, FrameAxiom::Subfit);
    if (lhs != rhs) out.push_back(violation(s, "T1 does not match T1/2 + subfit"));
  });
}

long check_t2_implies_sober(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (mt_axiom(s, MtAxiom::T2).holds && !mt_axiom(s, MtAxiom::Sober).holds)
      out.push_back(violation(s, "Hausdorff algebra that is not sober"));
  });
}

long check_t2_implies_hausdorff_frame(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (mt_axiom(s, MtAxiom::T2).holds &&
        !frame_axiom(omega(s).frame, FrameAxiom::Hausdorff))
      out.push_back(violation(s, "Hausdorff algebra with a non-Hausdorff open frame"));
  });
}

long check_t3_collapses_families(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (!mt_axiom(s, MtAxiom::T3).holds) return;
    if (family(s, FamilyKind::GO).members != family(s, FamilyKind::Open).members)
      out.push_back(violation(s, "regular algebra with GO different from the opens"));
    if (family(s, FamilyKind::GC).members != family(s, FamilyKind::Closed).members)
      out.push_back(violation(s, "regular algebra with GC different from the closeds"));
    if (!mt_axiom(s, MtAxiom::T2).holds)
      out.push_back(violation(s, "regular algebra that is not Hausdorff"));
  });
}

long check_t3half_iff_cregular_frame(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const bool lhs = mt_axiom(s, MtAxiom::T3Half).holds;
    const bool rhs = mt_axiom(s, MtAxiom::T1).holds &&
                     frame_axiom(omega(s).frame, FrameAxiom::CompletelyRegular);
    if (lhs != rhs)
      out.push_back(violation(s, "T3.5 does not match T1 + completely regular frame"));
  });
}

long check_t4_iff_normal_frame(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const bool lhs = mt_axiom(s, MtAxiom::T4).holds;
    const bool rhs =
        mt_axiom(s, MtAxiom::T1).holds && frame_axiom(omega(s).frame, FrameAxiom::Normal);
    if (lhs != rhs) out.push_back(violation(s, "T4 does not match T1 + normal frame"));
  });
}

long check_t4_collapses_cbelow(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (!mt_axiom(s, MtAxiom::T4).holds) return;
    if (mt_rather_matrix(s) != mt_completely_matrix(s))
      out.push_back(violation(s, "normal algebra where completely-below differs from rather-below"));
    if (!mt_axiom(s, MtAxiom::T3Half).holds)
      out.push_back(violation(s, "normal algebra that is not completely regular"));
    if (!mt_axiom(s, MtAxiom::T3).holds)
      out.push_back(violation(s, "normal algebra that is not regular"));
  });
}

long check_t0_boolean_generation(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const bool gen =
        generated_complete_boolean(s.opens(), s).size() == s.carrier_size();
    if (mt_axiom(s, MtAxiom::T0).holds != gen)
      out.push_back(violation(s, "T0 does not match Boolean generation by the opens"));
  });
}

long check_t1_lattice_generation(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const bool gen =
        generated_complete_lattice(s.opens(), s).size() == s.carrier_size();
    if (mt_axiom(s, MtAxiom::T1).holds != gen)
      out.push_back(violation(s, "T1 does not match lattice generation by the opens"));
  });
}

long check_thalf_envelope_reconstruction(const SuiteContext& ctx,
                                         std::vector<std::string>& out) {
  return ctx.for_spaces(3, [&](const FinSpace& s) {
    const FinSpace env = mt_from_frame(omega(s).frame);
    const bool iso = homeomorphic(s, env);
    if (iso != mt_axiom(s, MtAxiom::THalf).holds)
      out.push_back(violation(s, "envelope reconstruction does not match T1/2"));
  });
}

long check_classical_agreement(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(4, [&](const FinSpace& s) {
    const struct {
      MtAxiom axiom;
      bool classical;
      const char* name;
    } table[] = {
        {MtAxiom::T0, classical_t0(s), "T0"},
        {MtAxiom::THalf, classical_td(s), "Td"},
        {MtAxiom::T1, classical_t1(s), "T1"},
        {MtAxiom::T2, classical_t2(s), "T2"},
        {MtAxiom::T3, classical_t3(s), "T3"},
        {MtAxiom::T3Half, classical_t3half(s), "T3.5"},
        {MtAxiom::T4, classical_t4(s), "T4"},
        {MtAxiom::Sober, classical_sober(s), "sober"},
    };
    for (const auto& row : table)
      if (mt_axiom(s, row.axiom).holds != row.classical)
        out.push_back(violation(s, std::string("algebraic and point-set ") + row.name +
                                       " verdicts disagree"));
  });
}

long check_dual_axiom_agreement(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const MtAxiom axioms[] = {MtAxiom::T0, MtAxiom::THalf, MtAxiom::T1,
                              MtAxiom::WeaklySober, MtAxiom::Sober, MtAxiom::T2,
                              MtAxiom::T3, MtAxiom::T3Half, MtAxiom::T4};
    for (MtAxiom a : axioms)
      if (mt_axiom(s, a).holds != dual_axiom_check(s, a))
        out.push_back(violation(s, std::string("dual formulation of ") + mt_axiom_name(a) +
                                       " disagrees"));
  });
}

long check_cbelow_calculus(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(4, [&](const FinSpace& s) {
    const std::size_t size = s.carrier_size();
    const Mask full = s.full();
    const auto rel = mt_completely_matrix(s);
    auto cb = [&](Mask a, Mask b) { return rel[static_cast<std::size_t>(a) * size + b] != 0; };

    for (Mask a = 0;; ++a) {
      if (!cb(0, a) || !cb(a, full))
        out.push_back(violation(s, "completely-below bounds law fails"));
      for (Mask b = 0;; ++b) {
        if (cb(a, b) && !subset_of(a, b))
          out.push_back(violation(s, "completely-below does not imply order"));
        if (cb(a, b) != cb(full & ~b, full & ~a))
          out.push_back(violation(s, "completely-below contraposition fails"));
        if (cb(a, b)) {
          for (Mask x = 0;; ++x) {
            if (subset_of(x, a) && !cb(x, b)) {
              out.push_back(violation(s, "completely-below squeeze fails below"));
              return;
            }
            if (subset_of(b, x) && !cb(a, x)) {
              out.push_back(violation(s, "completely-below squeeze fails above"));
              return;
            }
            if (x == full) break;
          }
          for (Mask a2 = 0;; ++a2) {
            for (Mask b2 = 0;; ++b2) {
              if (cb(a2, b2) && (!cb(a | a2, b | b2) || !cb(a & a2, b & b2))) {
                out.push_back(violation(s, "completely-below pairwise closure fails"));
                return;
              }
              if (b2 == full) break;
            }
            if (a2 == full) break;
          }
        }
        if (b == full) break;
      }
      if (a == full) break;
    }
  });
}

long check_cregular_ro_approximation(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    if (!mt_axiom(s, MtAxiom::T3Half).holds) return;
    const auto ro = family(s, FamilyKind::RO).members;
    const auto rel = mt_completely_matrix(s);
    const std::size_t size = s.carrier_size();
    for (Mask a : s.opens()) {
      Mask acc = 0;
      for (Mask b : ro)
        if (rel[static_cast<std::size_t>(b) * size + a]) acc |= b;
      if (acc != a) {
        out.push_back(violation(s, "regular opens do not approximate open " + hex(a)));
        return;
      }
    }
  });
}

long check_mt_cbelow_two_routes(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(4, [&](const FinSpace& s) {
    if (mt_completely_matrix(s) != mt_completely_by_chains(s, s.points() + 2))
      out.push_back(violation(s, "carrier completely-below routes disagree"));
  });
}

long check_vartheta_matches_axioms(const SuiteContext& ctx, std::vector<std::string>& out) {
  return ctx.for_spaces(kMaxPoints, [&](const FinSpace& s) {
    const VarthetaAnalysis va = vartheta_analysis(functor_P(s));
    const AtSpace at = functor_at(functor_P(s));
    if (va.injective != classical_t0(at.space))
      out.push_back(violation(s, "vartheta injectivity does not match T0 of the atom space"));
    if (va.surjective != mt_axiom(s, MtAxiom::WeaklySober).holds)
      out.push_back(violation(s, "vartheta surjectivity does not match weak sobriety"));
    const bool expected_homeo =
        mt_axiom(s, MtAxiom::WeaklySober).holds && classical_t0(at.space);
    if (va.homeomorphism != expected_homeo)
      out.push_back(violation(s, "vartheta homeomorphism verdict mismatch"));
    if (mt_axiom(s, MtAxiom::Sober).holds && !va.homeomorphism)
      out.push_back(violation(s, "sober algebra whose vartheta is not a homeomorphism"));
  });
}

long check_urysohn_families(const SuiteContext& ctx, std::vector<std::string>& out) {
  long instances = 0;
  ctx.for_spaces(4, [&](const FinSpace& s) {
    if (!mt_axiom(s, MtAxiom::T4).holds) return;
    for (Mask c : s.closeds())
      for (Mask a : s.opens()) {
        if (!subset_of(c, a)) continue;
        ++instances;
        const UrysohnFamily fam = urysohn_family(s, c, a, 4);
        if (!subset_of(c, fam.members.front()) || !subset_of(fam.members.back(), a)) {
          out.push_back(violation(s, "dyadic family misses its bounds"));
          return;
        }
        for (std::size_t p = 0; p < fam.members.size(); ++p) {
          if (!s.is_open(fam.members[p])) {
            out.push_back(violation(s, "dyadic family member is not open"));
            return;
          }
          for (std::size_t q = p + 1; q < fam.members.size(); ++q)
            if (!mt_rather(s, fam.members[p], fam.members[q])) {
              out.push_back(violation(s, "dyadic family is not rather-below ordered"));
              return;
            }
        }
      }
  });
  return instances;
}

long check_interpolation(const SuiteContext& ctx, std::vector<std::string>& out) {
  long instances = 0;
  ctx.for_spaces(3, [&](const FinSpace& s) {
    if (!mt_axiom(s, MtAxiom::T4).holds) return;
    const Mask full = s.full();
    for (Mask a = 0;; ++a) {
      for (Mask b = 0;; ++b) {
        if (mt_rather(s, a, b)) {
          ++instances;
          const Mask u = interpolate(s, a, b);
          if (!s.is_open(u) || !mt_rather(s, a, u) || !mt_rather(s, u, b)) {
            out.push_back(violation(s, "interpolant fails its sandwich"));
            return;
          }
        }
        if (b == full) break;
      }
      if (a == full) break;
    }
  });
  return instances;
}

long check_enumeration_counts(const SuiteContext& ctx, std::vector<std::string>& out) {
  static const long expected[] = {1, 1, 4, 29, 355, 6942};
  long instances = 0;
  for (int k = 0; k <= ctx.n && k <= 5; ++k) {
    ++instances;
    const long got = static_cast<long>(ctx.by_points[static_cast<std::size_t>(k)].size());
    if (got != expected[k])
      out.push_back("enumeration count at n=" + std::to_string(k) + " is " +
                    std::to_string(got) + ", expected " + std::to_string(expected[k]));
    if (k <= 4) {
      const long oracle = static_cast<long>(enumerate_topologies_by_families(k).size());
      if (oracle != expected[k])
        out.push_back("family-filter oracle count at n=" + std::to_string(k) + " is " +
                      std::to_string(oracle));
    }
  }
  return instances;
}

const std::vector<TheoremCheck>& checks() {
  static const std::vector<TheoremCheck> table = {
      {{"kuratowski",
        "the derived interior satisfies the four interior laws, both interior routes agree, "
        "and closure is the De Morgan dual of interior"},
       check_kuratowski_suite},
      {{"open-frame-closure",
        "the opens contain the bounds and are closed under binary meets and arbitrary joins; "
        "dually for the closeds"},
       check_open_frame_closure},
      {{"ro-rc-boolean",
        "the regular opens and regular closeds form complement-linked Boolean algebras, with "
        "joins given by interior-of-closure"},
       check_ro_rc_boolean},
      {{"finite-collapse",
        "on a finite algebra the saturated elements are the opens and the weakly locally "
        "closed elements are the locally closed ones"},
       check_finite_collapse},
      {{"rather-calculus",
        "rather-below implies order, has the bounds, squeezes, contraposes, and is closed "
        "under pairwise joins and meets"},
       check_rather_calculus},
      {{"eta-closure-identity",
        "for every atom, eta of its closure equals the topological closure of the "
        "corresponding point of the atom space"},
       check_eta_closure_identity},
      {{"points-two-routes",
        "frame points computed from meet-irreducibles coincide with brute-force filter "
        "enumeration (frames with at most 12 elements)"},
       check_points_two_routes},
      {{"rather-below-agrees-on-opens",
        "on open elements the algebra-side rather-below coincides with the frame-side one"},
       check_rather_on_opens},
      {{"frame-axiom-inclusions",
        "regular frames are Hausdorff, completely regular frames are regular, normal subfit "
        "frames are completely regular, and finite frames are spatial"},
       check_frame_axiom_inclusions},
      {{"frame-cbelow-two-routes",
        "on the open frame, the interpolative-core fixpoint equals bounded-depth dyadic "
        "chain search"},
       check_frame_cbelow_two_routes},
      {{"zeta-spatialization",
        "zeta is an isomorphism onto the opens of the point space for every finite frame"},
       check_zeta_spatialization},
      {{"envelope-section",
        "the Boolean envelope embeds the frame order-isomorphically and its open elements "
        "reproduce the frame"},
       check_envelope_section},
      {{"envelope-t-half-t1-subfit",
        "the envelope algebra of a frame is always T1/2, and is T1 exactly when the frame "
        "is subfit"},
       check_envelope_t_half_t1},
      {{"macneille-idempotent",
        "the cut completion of a finite lattice is isomorphic to the lattice"},
       check_macneille_idempotent},
      {{"envelope-boolean-iso",
        "for a Boolean frame the envelope embedding is onto the powerset of its atoms"},
       check_envelope_boolean_iso},
      {{"envelope-generic-agrees",
        "the generic envelope route (generated subalgebra, completion, lower extension) "
        "agrees with the join-irreducible shortcut"},
       check_envelope_generic_agrees},
      {{"eta-iso-spatial",
        "eta is one-to-one and preserves interior and closure on every finite algebra, and "
        "epsilon is a homeomorphism"},
       check_eta_iso_spatial},
      {{"unit-naturality",
        "the eta and epsilon naturality squares commute for every continuous map between "
        "spaces with at most 3 points"},
       check_unit_naturality},
      {{"delta-homeo-iff-sober",
        "delta is a homeomorphism onto the points of the open frame exactly for sober "
        "spaces"},
       check_delta_homeo_iff_sober},
      {{"o-p-equals-omega",
        "the open-element frame of the powerset algebra is the frame of opens of the space, "
        "on the nose"},
       check_o_p_equals_omega},
      {{"soberification-sober",
        "the point space of the open frame is sober, and sober spaces are fixed up to "
        "homeomorphism"},
       check_soberification},
      {{"ladder",
        "T4 => T3.5 => T3 => T2 => T1 => T1/2 => T0, T2 => sober, and sober = weakly sober "
        "+ T0"},
       check_ladder},
      {{"t1-iff-thalf-subfit", "an algebra is T1 iff it is T1/2 and its open frame is subfit"},
       check_t1_iff_thalf_subfit},
      {{"t2-implies-sober", "every Hausdorff algebra is sober"}, check_t2_implies_sober},
      {{"t2-implies-hausdorff-frame",
        "the open frame of a Hausdorff algebra is a Hausdorff frame"},
       check_t2_implies_hausdorff_frame},
      {{"t3-collapses-families",
        "in a regular algebra GO is the opens and GC is the closeds, hence regular implies "
        "Hausdorff"},
       check_t3_collapses_families},
      {{"t3half-iff-t1-cregular-frame",
        "an algebra is T3.5 iff it is T1 and its open frame is completely regular"},
       check_t3half_iff_cregular_frame},
      {{"t4-iff-t1-normal-frame",
        "an algebra is T4 iff it is T1 and its open frame is normal"},
       check_t4_iff_normal_frame},
      {{"t4-collapses-cbelow",
        "in a normal algebra completely-below equals rather-below, and normal implies "
        "completely regular and regular"},
       check_t4_collapses_cbelow},
      {{"t0-iff-boolean-generation",
        "an algebra is T0 iff its opens generate the carrier as a complete Boolean algebra"},
       check_t0_boolean_generation},
      {{"t1-iff-lattice-generation",
        "an algebra is T1 iff its opens generate the carrier as a complete lattice"},
       check_t1_lattice_generation},
      {{"thalf-iff-envelope-reconstruction",
        "an algebra is T1/2 iff it is isomorphic to the envelope algebra of its open frame"},
       check_thalf_envelope_reconstruction},
      {{"classical-agreement",
        "on powerset algebras each algebraic axiom agrees with the point-set implementation "
        "of the classical axiom"},
       check_classical_agreement},
      {{"dual-axiom-agreement",
        "each axiom agrees with its dual (meet-generation) formulation"},
       check_dual_axiom_agreement},
      {{"cbelow-calculus",
        "completely-below implies order, has the bounds, squeezes, contraposes, and is "
        "closed under pairwise joins and meets"},
       check_cbelow_calculus},
      {{"cregular-ro-approximation",
        "in a completely regular algebra every open is the join of the regular opens "
        "completely below it"},
       check_cregular_ro_approximation},
      {{"mt-cbelow-two-routes",
        "on the Boolean carrier the interpolative-core fixpoint equals bounded-depth dyadic "
        "chain search"},
       check_mt_cbelow_two_routes},
      {{"vartheta-matches-axioms",
        "vartheta is one-to-one iff the atom space is T0, onto iff the algebra is weakly "
        "sober, and a homeomorphism under sobriety"},
       check_vartheta_matches_axioms},
      {{"urysohn-families",
        "on every normal algebra and admissible closed/open pair the dyadic family is "
        "bounded correctly and rather-below ordered"},
       check_urysohn_families},
      {{"interpolation",
        "in a normal algebra every rather-below pair admits an open interpolant"},
       check_interpolation},
      {{"enumeration-counts",
        "the labeled topology counts match 1, 1, 4, 29, 355, 6942 and the family-filter "
        "oracle reproduces them"},
       check_enumeration_counts},
  };
  return table;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> table = [] {
    std::vector<TheoremInfo> out;
    for (const auto& c : checks()) out.push_back(c.info);
    return out;
  }();
  return table;
}

std::vector<TheoremReport> run_theorem_suite(int n) {
  SuiteContext ctx;
  ctx.n = n;
  ctx.by_points.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    ctx.by_points[static_cast<std::size_t>(k)] = enumerate_topologies(k);

  std::vector<TheoremReport> reports;
  reports.reserve(checks().size());
  for (const auto& check : checks()) {
    TheoremReport report;
    report.id = check.info.id;
    const auto start = std::chrono::steady_clock::now();
    report.instances = check.run(ctx, report.violations);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace mtkit
