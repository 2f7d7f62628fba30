#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swfcheck/ranking.hpp"

namespace swf {

// The shared menu of rankings every voter chooses from. Always holds more
// than one ranking, all over the same candidate count.
class Ballot {
 public:
  explicit Ballot(std::vector<Ranking> rankings);

  // All k! rankings, 2 <= k <= 8.
  static Ballot full(int k);
  // The three cyclic rotations of c1>c2>c3.
  static Ballot condorcet();

  int k() const { return k_; }
  int size() const { return int(rankings_.size()); }
  const std::vector<Ranking>& rankings() const { return rankings_; }
  bool contains(const Ranking& r) const;

  // Gap values {gap(r,i,j) : r in ballot}, ascending.
  std::vector<int> relative_ballot(int i, int j) const;

  bool operator==(const Ballot&) const = default;

 private:
  int k_;
  std::vector<Ranking> rankings_;  // sorted, unique
};

// First lexicographic witness that a ballot fails the increasing property:
// a ranking with gap m for the pair (i, j) that no gap-m' ranking promotes
// down to.
struct IncreasingFailure {
  int i, j;
  int m, m_prime;
  Ranking ranking;
};

// First lexicographic witness that a ballot fails the intermediate property:
// a promotion pair whose gap interval contains m, with no two-sided
// promotable ranking at gap m.
struct IntermediateFailure {
  int i, j;
  Ranking r_minus, r_plus;
  int m;
};

// First pair of candidate pairs whose relative ballots intersect but no
// ballot-preserving candidate permutation carries one pair to the other.
struct SeparableFailure {
  int i, j;
  int i_prime, j_prime;
};

// Exhaustive checks of the three ballot-domain properties. Empty optional
// means the property holds.
std::optional<IncreasingFailure> increasing_failure(const Ballot& b);
std::optional<IntermediateFailure> intermediate_failure(const Ballot& b);
std::optional<SeparableFailure> separable_failure(const Ballot& b);

inline bool is_increasing(const Ballot& b) { return !increasing_failure(b).has_value(); }
inline bool is_intermediate(const Ballot& b) { return !intermediate_failure(b).has_value(); }
inline bool is_separable(const Ballot& b) { return !separable_failure(b).has_value(); }

}  // namespace swf
