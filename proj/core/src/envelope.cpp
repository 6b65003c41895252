#include "mtkit/envelope.hpp"

#include <algorithm>

#include "mtkit/family.hpp"
#include "mtkit/poset.hpp"

namespace mtkit {

Envelope boolean_envelope(const FiniteFrame& frame) {
  Envelope env;
  env.frame = frame;
  env.irreducibles = join_irreducibles(frame.base());
  const int n = static_cast<int>(env.irreducibles.size());
  if (n > kMaxPoints) throw BoundExceeded(n, kMaxPoints);

  env.embed.assign(static_cast<std::size_t>(frame.size()), 0);
  for (int a = 0; a < frame.size(); ++a) {
    Mask e = 0;
    for (int i = 0; i < n; ++i)
      if (frame.le(env.irreducibles[static_cast<std::size_t>(i)], a)) e |= point_mask(i);
    env.embed[static_cast<std::size_t>(a)] = e;
  }

  std::vector<Mask> opens = env.embed;
  env.carrier = validate_space(n, std::move(opens));

  // e is a bounded lattice embedding.
  if (env.embed[static_cast<std::size_t>(frame.bot())] != 0 ||
      env.embed[static_cast<std::size_t>(frame.top())] != env.carrier.full())
    throw std::logic_error("envelope embedding does not preserve the bounds");
  for (int a = 0; a < frame.size(); ++a)
    for (int b = 0; b < frame.size(); ++b) {
      const Mask ea = env.embed[static_cast<std::size_t>(a)];
      const Mask eb = env.embed[static_cast<std::size_t>(b)];
      if (env.embed[static_cast<std::size_t>(frame.meet(a, b))] != (ea & eb) ||
          env.embed[static_cast<std::size_t>(frame.join(a, b))] != (ea | eb))
        throw std::logic_error("envelope embedding is not a lattice homomorphism");
      if (a != b && ea == eb)
        throw std::logic_error("envelope embedding is not one-to-one");
    }

  // Fixpoints of box are exactly the embedded frame elements.
  const Mask full = env.carrier.full();
  for (Mask x = 0;; ++x) {
    const bool fix = env.box(x) == x;
    const bool in_image =
        std::binary_search(env.carrier.opens().begin(), env.carrier.opens().end(), x);
    if (fix != in_image)
      throw std::logic_error("box fixpoints differ from the embedded frame");
    if (x == full) break;
  }
  return env;
}

FinSpace mt_from_frame(const FiniteFrame& frame) {
  Envelope env = boolean_envelope(frame);

  // The opens of the result, ordered by inclusion, realize the input frame
  // via e.
  for (int a = 0; a < frame.size(); ++a)
    for (int b = 0; b < frame.size(); ++b)
      if (frame.le(a, b) != subset_of(env.embed[static_cast<std::size_t>(a)],
                                      env.embed[static_cast<std::size_t>(b)]))
        throw std::logic_error("result opens are not order-isomorphic to the frame");

  // The locally closed elements join-generate the carrier.
  const auto lc = family(env.carrier, FamilyKind::LC);
  if (!join_generates(lc.members, env.carrier))
    throw std::logic_error("envelope algebra is not join-generated by its locally closed elements");

  return env.carrier;
}

namespace {

// Interior of x relative to the family of embedded frame elements.
Mask largest_image_below(const std::vector<Mask>& image, Mask x) {
  Mask out = 0;
  for (Mask e : image)
    if (subset_of(e, x)) out |= e;
  return out;
}

}  // namespace

FinSpace mt_from_frame_generic(const FiniteFrame& frame) {
  // Step 1: embed the frame into the powerset of its join-irreducibles and
  // take the Boolean subalgebra it generates.
  const auto irr = join_irreducibles(frame.base());
  const int n = static_cast<int>(irr.size());
  if (n > kMaxPoints) throw BoundExceeded(n, kMaxPoints);
  const FinSpace ambient = discrete_space(n);

  std::vector<Mask> image;
  image.reserve(static_cast<std::size_t>(frame.size()));
  for (int a = 0; a < frame.size(); ++a) {
    Mask e = 0;
    for (int i = 0; i < n; ++i)
      if (frame.le(irr[static_cast<std::size_t>(i)], a)) e |= point_mask(i);
    image.push_back(e);
  }
  std::vector<Mask> sub = generated_complete_boolean(image, ambient);

  // Step 2: the interior operator on the subalgebra is the right adjoint of
  // the embedding: the largest embedded element below.
  std::vector<std::pair<Mask, Mask>> box_on_sub;
  box_on_sub.reserve(sub.size());
  for (Mask x : sub) box_on_sub.push_back({x, largest_image_below(image, x)});

  // Step 3: MacNeille completion of the subalgebra. Finite, so the cuts
  // reproduce the subalgebra; the atoms of the completion carry the result.
  std::vector<std::uint8_t> leq(sub.size() * sub.size(), 0);
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = 0; b < sub.size(); ++b)
      leq[a * sub.size() + b] = subset_of(sub[a], sub[b]) ? 1 : 0;
  const Completion comp = macneille(validate_poset(static_cast<int>(sub.size()), leq));
  const FiniteLattice& lat = comp.lattice;

  std::vector<int> atoms;
  for (int x = 0; x < lat.size(); ++x) {
    if (x == lat.bot()) continue;
    bool atom = true;
    for (int y = 0; y < lat.size() && atom; ++y)
      atom = y == x || y == lat.bot() || !lat.le(y, x);
    if (atom) atoms.push_back(x);
  }
  const int k = static_cast<int>(atoms.size());
  if (k > kMaxPoints) throw BoundExceeded(k, kMaxPoints);

  auto completion_elem_mask = [&](int x) {
    Mask out = 0;
    for (int i = 0; i < k; ++i)
      if (lat.le(atoms[static_cast<std::size_t>(i)], x)) out |= point_mask(i);
    return out;
  };

  // Step 4: the lower extension of box along the completion; its fixpoints
  // are the opens of the result.
  std::vector<std::pair<Mask, Mask>> box_for_extension;
  box_for_extension.reserve(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const int cut = comp.embed[i];
    Mask value = 0;
    for (std::size_t j = 0; j < sub.size(); ++j)
      if (sub[j] == box_on_sub[i].second) {
        value = completion_elem_mask(comp.embed[j]);
        break;
      }
    box_for_extension.push_back({completion_elem_mask(cut), value});
  }
  const LowerExtension ext(k, std::move(box_for_extension));

  std::vector<Mask> opens;
  const Mask full = full_mask(k);
  for (Mask x = 0;; ++x) {
    if (ext(x) == x) opens.push_back(x);
    if (x == full) break;
  }
  return validate_space(k, std::move(opens));
}

LowerExtension::LowerExtension(int n, std::vector<std::pair<Mask, Mask>> box_on_subalgebra)
    : n_(n), sub_(std::move(box_on_subalgebra)) {
  if (n < 0 || n > kMaxPoints) throw BoundExceeded(n, kMaxPoints);
  std::sort(sub_.begin(), sub_.end());
  const Mask full = full_mask(n);

  auto box_of = [&](Mask a) -> Mask {
    auto it = std::lower_bound(sub_.begin(), sub_.end(), std::make_pair(a, Mask{0}));
    if (it == sub_.end() || it->first != a)
      throw PreconditionViolated("box value requested outside the subalgebra");
    return it->second;
  };
  auto in_sub = [&](Mask a) {
    auto it = std::lower_bound(sub_.begin(), sub_.end(), std::make_pair(a, Mask{0}));
    return it != sub_.end() && it->first == a;
  };

  // The domain must be a Boolean subalgebra of the powerset.
  if (!in_sub(0) || !in_sub(full))
    throw PreconditionViolated("subalgebra must contain the bounds");
  for (const auto& [a, _] : sub_) {
    if (!subset_of(a, full)) throw PreconditionViolated("subalgebra element out of range");
    if (!in_sub(full & ~a))
      throw PreconditionViolated("subalgebra not closed under complement");
  }
  for (const auto& [a, _] : sub_)
    for (const auto& [b, _2] : sub_)
      if (!in_sub(a | b)) throw PreconditionViolated("subalgebra not closed under union");
  for (std::size_t i = 1; i < sub_.size(); ++i)
    if (sub_[i].first == sub_[i - 1].first)
      throw PreconditionViolated("duplicate subalgebra element");

  // box must be an interior operator on the subalgebra.
  if (box_of(full) != full) throw PreconditionViolated("box(top) must be top");
  for (const auto& [a, ba] : sub_) {
    if (!in_sub(ba)) throw PreconditionViolated("box value escapes the subalgebra");
    if (!subset_of(ba, a)) throw PreconditionViolated("box must be deflationary");
    if (!subset_of(ba, box_of(ba))) throw PreconditionViolated("box must be idempotent");
  }
  for (const auto& [a, ba] : sub_)
    for (const auto& [b, bb] : sub_)
      if (box_of(a & b) != (ba & bb))
        throw PreconditionViolated("box must preserve binary meets");

  // The extension satisfies the interior laws; exhaustive at small scale.
  if ((*this)(full) != full) throw std::logic_error("lower extension breaks box(top)=top");
  if (n <= 12) {
    for (Mask x = 0;; ++x) {
      const Mask bx = (*this)(x);
      if (!subset_of(bx, x)) throw std::logic_error("lower extension is not deflationary");
      if (!subset_of(bx, (*this)(bx))) throw std::logic_error("lower extension is not idempotent");
      if (x == full) break;
    }
  }
  if (n <= 8) {
    for (Mask x = 0;; ++x) {
      for (Mask y = x;; ++y) {
        if ((*this)(x & y) != ((*this)(x) & (*this)(y)))
          throw std::logic_error("lower extension does not preserve binary meets");
        if (y == full) break;
      }
      if (x == full) break;
    }
  }
  // Restriction to the subalgebra equals the given operator.
  for (const auto& [a, ba] : sub_)
    if ((*this)(a) != ba)
      throw std::logic_error("lower extension does not restrict to the given box");
}

Mask LowerExtension::operator()(Mask x) const {
  Mask out = 0;
  for (const auto& [a, ba] : sub_)
    if (subset_of(a, x)) out |= ba;
  return out;
}

}  // namespace mtkit
