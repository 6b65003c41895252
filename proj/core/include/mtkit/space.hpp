#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtkit/errors.hpp"
#include "mtkit/mask.hpp"

namespace mtkit {

/// A finite topological space: a validated family of open subsets of
/// {0..n-1}. Doubles as the powerset MT-algebra of the space, with the
/// interior operator derived from the open family. Immutable after
/// validation; all operations are pure.
class FinSpace {
 public:
  /// The empty space (0 points, one open).
  FinSpace() : opens_{0}, closeds_{0} {}

  int points() const { return n_; }
  Mask full() const { return full_mask(n_); }
  std::size_t carrier_size() const { return std::size_t{1} << n_; }

  /// Open masks, sorted ascending by numeric value.
  const std::vector<Mask>& opens() const { return opens_; }
  /// Closed masks (complements of opens), sorted ascending.
  const std::vector<Mask>& closeds() const { return closeds_; }

  bool is_open(Mask a) const;
  bool is_closed(Mask a) const;

  /// Largest open below a. Uses the precomputed table when present,
  /// otherwise the specialization preorder (x in box(a) iff min_open(x) <= a).
  Mask interior(Mask a) const;
  /// Interior straight from the defining join: union of all opens below a.
  Mask interior_by_scan(Mask a) const;

  /// Smallest closed above a, computed as the De Morgan dual of interior.
  Mask closure(Mask a) const;
  /// Closure straight from the defining meet: intersection of closeds above a.
  Mask closure_by_scan(Mask a) const;

  /// Intersection of all opens containing point x.
  Mask min_open(int x) const { return min_open_[static_cast<std::size_t>(x)]; }

  /// Specialization preorder: x below y iff x lies in the closure of {y}.
  bool specializes(int x, int y) const;

  /// Canonical id: the sorted open masks rendered in hexadecimal, joined
  /// with commas. Unique per open family, stable across runs.
  std::string id() const;

  bool operator==(const FinSpace& other) const {
    return n_ == other.n_ && opens_ == other.opens_;
  }

 private:
  friend FinSpace validate_space(int n, std::vector<Mask> opens);

  int n_ = 0;
  std::vector<Mask> opens_;
  std::vector<Mask> closeds_;
  std::vector<Mask> min_open_;
  std::vector<Mask> interior_table_;  // full carrier table, only when small
};

/// Checks that `opens` is a topology on {0..n-1} and derives the interior
/// structure. Throws NotATopology with a witness pair when a union or
/// intersection escapes the family or the empty/full set is missing, and
/// BoundExceeded when n is outside [0, kMaxPoints].
FinSpace validate_space(int n, std::vector<Mask> opens);

/// Convenience constructor taking opens as point lists.
FinSpace validate_space_from_sets(int n, const std::vector<std::vector<int>>& opens);

FinSpace discrete_space(int n);
FinSpace indiscrete_space(int n);

/// Alexandrov space of a preorder given as an n*n adjacency matrix
/// (leq[x*n+y] != 0 meaning x below y): opens are the up-sets.
FinSpace space_from_preorder(int n, const std::vector<std::uint8_t>& leq);

/// Point bijection a -> b carrying opens onto opens, found by backtracking;
/// empty when the spaces are not homeomorphic (and n > 0).
std::vector<int> find_homeomorphism(const FinSpace& a, const FinSpace& b);
bool homeomorphic(const FinSpace& a, const FinSpace& b);

struct KuratowskiViolation {
  std::string law;
  Mask a, b;
};

/// Checks the four interior laws (top fixed, binary meets preserved,
/// deflationary, idempotent) by exhaustive scan over the carrier.
std::optional<KuratowskiViolation> check_kuratowski(const FinSpace& space);

}  // namespace mtkit
