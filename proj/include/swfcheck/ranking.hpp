#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "swfcheck/outcome.hpp"

namespace swf {

// Candidates are 0-indexed ints internally; all text I/O uses the 1-indexed
// names c1..ck. Index arithmetic that walks around the candidate cycle goes
// through cyc().
inline int cyc(int i, int k) { return ((i % k) + k) % k; }

std::string candidate_name(int index);
int parse_candidate(std::string_view name, int k);

// A total order of k candidates, kept as rank_of[c] = rank with ranks
// 0..k-1 and higher rank meaning better placed.
class Ranking {
 public:
  explicit Ranking(std::vector<int> rank_of);

  // Candidates listed top first, e.g. {0,1,2} is the order c1 > c2 > c3.
  static Ranking from_top_order(const std::vector<int>& top_down);
  // Parses "c1>c2>c3" (top first, every candidate exactly once).
  static Ranking parse(std::string_view text);

  int k() const { return int(rank_of_.size()); }
  int rank_of(int candidate) const { return rank_of_[candidate]; }

  // Signed placement gap r(ci) - r(cj); never zero for distinct candidates.
  int gap(int i, int j) const;

  std::vector<int> top_order() const;
  std::string str() const;

  auto operator<=>(const Ranking&) const = default;

 private:
  std::vector<int> rank_of_;
};

// An ordered partition of the candidates into tiers, top tier first.
class WeakOrder {
 public:
  // tier_of[c] = tier index, 0 is the top tier; indices must be exactly
  // 0..t-1 for some t with every tier nonempty.
  explicit WeakOrder(std::vector<int> tier_of);

  static WeakOrder from_tiers(const std::vector<std::vector<int>>& tiers, int k);
  static WeakOrder single_tier(int k);
  // Parses "c1=c2>c3" (tiers joined by '>', ties inside a tier by '=').
  static WeakOrder parse(std::string_view text);

  int k() const { return int(tier_of_.size()); }
  int tier_count() const { return tiers_; }
  int tier_of(int candidate) const { return tier_of_[candidate]; }
  std::vector<std::vector<int>> tiers() const;

  // W when ci sits strictly above cj, L when strictly below, T when tied.
  RelOutcome rel(int i, int j) const;

  std::string str() const;

  bool operator==(const WeakOrder&) const = default;

 private:
  std::vector<int> tier_of_;
  int tiers_ = 0;
};

// Whether (cj, ci) is promoted by (r2, r1): going from r1 to r2, cj may only
// improve against ci and against third candidates, ci may only lose ground,
// and all other candidates keep their relative order.
bool promotes(const Ranking& r2, const Ranking& r1, int j, int i);

// All k! rankings, sorted; k must lie in [2, 8].
std::vector<Ranking> all_rankings(int k);

// All ordered set partitions of k candidates; k must lie in [1, 6].
std::vector<WeakOrder> all_weak_orders(int k);

// All k! candidate permutations as vectors p with p[c] = image of c.
std::vector<std::vector<int>> all_permutations(int k);

// Relabels candidates: candidate rho[c] in the result is placed exactly where
// c was. This is the orientation under which score-symmetric rules are
// neutral and pairwise projections satisfy
// rel(result, rho[i], rho[j]) == rel(input, i, j).
Ranking apply_permutation(const std::vector<int>& rho, const Ranking& r);
WeakOrder apply_permutation(const std::vector<int>& rho, const WeakOrder& w);

}  // namespace swf
