#pragma once

#include <map>
#include <vector>

#include "swfcheck/ballot.hpp"
#include "swfcheck/rational.hpp"
#include "swfcheck/ranking.hpp"

namespace swf {

// One ranking per voter, voter ids 0..n-1.
class FiniteElection {
 public:
  explicit FiniteElection(std::vector<Ranking> votes);

  int n() const { return int(votes_.size()); }
  int k() const { return votes_.front().k(); }
  const Ranking& vote(int v) const { return votes_[v]; }
  const std::vector<Ranking>& votes() const { return votes_; }

  bool operator==(const FiniteElection&) const = default;

 private:
  std::vector<Ranking> votes_;
};

// Nonnegative rational weight per ranking. Covers both worlds: counting
// profiles (total = number of voters) and measure-style profiles (total = 1).
// Zero-weight entries are never stored.
class AnonymousProfile {
 public:
  explicit AnonymousProfile(int k) : k_(k) {}
  AnonymousProfile(int k, std::map<Ranking, Rat> weights);

  int k() const { return k_; }
  const std::map<Ranking, Rat>& weights() const { return weights_; }
  Rat weight(const Ranking& r) const;
  Rat total() const;

  void add(const Ranking& r, const Rat& w);

  bool operator==(const AnonymousProfile&) const = default;

 private:
  int k_;
  std::map<Ranking, Rat> weights_;
};

// Nonnegative rational weight per gap value in {1-k..-1, 1..k-1}.
// For k = 3 the canonical coordinate order is (a2, a1, a-1, a-2).
class RelativeProfile {
 public:
  explicit RelativeProfile(int k);

  // Coordinates in the canonical k=3 order (a2, a1, a-1, a-2).
  static RelativeProfile from_alpha3(const std::vector<Rat>& coords);

  int k() const { return k_; }
  Rat weight(int gap) const;
  void set(int gap, const Rat& w);
  void add(int gap, const Rat& w);
  Rat total() const;

  // (a2, a1, a-1, a-2) for k = 3; descending gap value in general.
  std::vector<Rat> coords() const;
  std::vector<int> gap_values() const;  // descending, matching coords()

  bool operator==(const RelativeProfile&) const = default;

 private:
  int index(int gap) const;
  int k_;
  std::vector<Rat> weight_;  // indexed by gap + k - 1; the gap-0 slot stays zero
};

// Counts how many voters cast each ranking. Invariant under any relabelling
// of the voters.
AnonymousProfile tau(const FiniteElection& e);

// Scales the weights so the total becomes 1.
AnonymousProfile normalize(const AnonymousProfile& p);
RelativeProfile normalize(const RelativeProfile& a);

// Pushes the profile down to the gap distribution for the pair (i, j):
// weight(m) = sum of p.weight(r) over rankings r with gap(r,i,j) = m.
RelativeProfile project(const AnonymousProfile& p, int i, int j);

// Gap reversal: the weight at gap m moves to gap -m. Involution; swapping
// the pair (i, j) to (j, i) projects through this map.
RelativeProfile rho(const RelativeProfile& a);

// Dominance of upper partial sums over gap values. Requires equal totals;
// unequal totals are a modelling bug, not a comparison result.
bool majorizes(const RelativeProfile& a, const RelativeProfile& b);

// Voterwise promotion of (cj, ci) by (e2, e1).
bool promotes_elections(const FiniteElection& e2, const FiniteElection& e1, int j, int i);

}  // namespace swf
