#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mtkit/errors.hpp"

namespace mtkit {

/// An explicit finite bounded lattice: order relation plus meet/join tables.
class FiniteLattice {
 public:
  int size() const { return m_; }
  bool le(int a, int b) const { return leq_[idx(a, b)] != 0; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int bot() const { return bot_; }
  int top() const { return top_; }

  int meet_of(std::span<const int> xs) const {
    int acc = top_;
    for (int x : xs) acc = meet(acc, x);
    return acc;
  }
  int join_of(std::span<const int> xs) const {
    int acc = bot_;
    for (int x : xs) acc = join(acc, x);
    return acc;
  }

  bool operator==(const FiniteLattice& other) const {
    return m_ == other.m_ && leq_ == other.leq_;
  }

 private:
  friend FiniteLattice validate_lattice(int m, const std::vector<std::uint8_t>& leq);

  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(b);
  }

  int m_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_, join_;
  int bot_ = 0, top_ = 0;
};

/// Checks that leq (an m*m matrix) is a partial order with all binary meets
/// and joins, and fills the tables. Throws NotALattice with a witness pair.
FiniteLattice validate_lattice(int m, const std::vector<std::uint8_t>& leq);

/// Same, from an explicit list of related pairs (reflexivity not implied).
FiniteLattice validate_lattice_from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);

/// A finite frame: a finite lattice validated distributive. At this scale
/// the join-infinite distributive law reduces to the binary one.
class FiniteFrame {
 public:
  const FiniteLattice& base() const { return base_; }

  int size() const { return base_.size(); }
  bool le(int a, int b) const { return base_.le(a, b); }
  int meet(int a, int b) const { return base_.meet(a, b); }
  int join(int a, int b) const { return base_.join(a, b); }
  int bot() const { return base_.bot(); }
  int top() const { return base_.top(); }
  int meet_of(std::span<const int> xs) const { return base_.meet_of(xs); }
  int join_of(std::span<const int> xs) const { return base_.join_of(xs); }

  bool operator==(const FiniteFrame& other) const { return base_ == other.base_; }

 private:
  friend FiniteFrame validate_frame(FiniteLattice lattice);
  FiniteLattice base_;
};

/// Throws NotDistributive with a witness triple.
FiniteFrame validate_frame(FiniteLattice lattice);

/// Heyting implication a -> b = join of { c | c meet a <= b }. On a finite
/// distributive lattice this is the residual of meet.
int heyting(const FiniteLattice& lat, int a, int b);

/// Elements that are not the join of two strictly smaller ones (bottom
/// excluded).
std::vector<int> join_irreducibles(const FiniteLattice& lat);
/// Dual: not the meet of two strictly bigger ones (top excluded).
std::vector<int> meet_irreducibles(const FiniteLattice& lat);

/// Order isomorphism search by backtracking; returns the element bijection
/// a -> b if one exists. Intended for desk-scale certificates.
std::vector<int> find_lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
inline bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return !find_lattice_isomorphism(a, b).empty() || (a.size() == 0 && b.size() == 0);
}

}  // namespace mtkit
