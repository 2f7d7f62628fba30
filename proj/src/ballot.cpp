#include "swfcheck/ballot.hpp"

#include <algorithm>

#include "swfcheck/errors.hpp"

namespace swf {

Ballot::Ballot(std::vector<Ranking> rankings) : rankings_(std::move(rankings)) {
  std::sort(rankings_.begin(), rankings_.end());
  rankings_.erase(std::unique(rankings_.begin(), rankings_.end()), rankings_.end());
  if (rankings_.size() < 2) throw std::invalid_argument("a ballot needs more than one ranking");
  k_ = rankings_.front().k();
  for (const auto& r : rankings_)
    if (r.k() != k_) throw std::invalid_argument("ballot mixes candidate counts");
}

Ballot Ballot::full(int k) { return Ballot(all_rankings(k)); }

Ballot Ballot::condorcet() {
  return Ballot({Ranking::from_top_order({0, 1, 2}), Ranking::from_top_order({1, 2, 0}),
                 Ranking::from_top_order({2, 0, 1})});
}

bool Ballot::contains(const Ranking& r) const {
  return std::binary_search(rankings_.begin(), rankings_.end(), r);
}

std::vector<int> Ballot::relative_ballot(int i, int j) const {
  if (i == j) throw std::invalid_argument("relative ballot requires distinct candidates");
  std::set<int> gaps;
  for (const auto& r : rankings_) gaps.insert(r.gap(i, j));
  return {gaps.begin(), gaps.end()};
}

std::optional<IncreasingFailure> increasing_failure(const Ballot& b) {
  int k = b.k();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      auto gaps = b.relative_ballot(i, j);
      for (int m : gaps) {
        for (int m_prime : gaps) {
          if (m <= m_prime) continue;
          for (const auto& r : b.rankings()) {
            if (r.gap(i, j) != m) continue;
            bool found = false;
            for (const auto& r_prime : b.rankings()) {
              if (r_prime.gap(i, j) == m_prime && promotes(r_prime, r, j, i)) {
                found = true;
                break;
              }
            }
            if (!found) return IncreasingFailure{i, j, m, m_prime, r};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<IntermediateFailure> intermediate_failure(const Ballot& b) {
  int k = b.k();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      auto gaps = b.relative_ballot(i, j);
      for (const auto& r_minus : b.rankings()) {
        for (const auto& r_plus : b.rankings()) {
          if (!promotes(r_minus, r_plus, j, i)) continue;
          for (int m : gaps) {
            if (!(r_minus.gap(i, j) < m && m < r_plus.gap(i, j))) continue;
            bool found = false;
            for (const auto& r : b.rankings()) {
              if (r.gap(i, j) != m) continue;
              if (promotes(r_minus, r, j, i) && promotes(r, r_plus, j, i)) {
                found = true;
                break;
              }
            }
            if (!found) return IntermediateFailure{i, j, r_minus, r_plus, m};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool preserves_ballot(const std::vector<int>& rho, const Ballot& b) {
  for (const auto& r : b.rankings())
    if (!b.contains(apply_permutation(rho, r))) return false;
  return true;
}

}  // namespace

std::optional<SeparableFailure> separable_failure(const Ballot& b) {
  int k = b.k();
  auto perms = all_permutations(k);
  std::vector<std::vector<int>> stabilizer;
  for (const auto& rho : perms)
    if (preserves_ballot(rho, b)) stabilizer.push_back(rho);

  // On a ballot domain the relative-election sets for two candidate pairs
  // intersect exactly when their relative ballots do, so the finite gap-set
  // intersection decides when a mapping permutation must exist.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      auto gaps_ij = b.relative_ballot(i, j);
      for (int ip = 0; ip < k; ++ip) {
        for (int jp = 0; jp < k; ++jp) {
          if (ip == jp) continue;
          auto gaps_pq = b.relative_ballot(ip, jp);
          bool intersect = false;
          for (int g : gaps_ij)
            if (std::binary_search(gaps_pq.begin(), gaps_pq.end(), g)) {
              intersect = true;
              break;
            }
          if (!intersect) continue;
          bool found = false;
          for (const auto& rho : stabilizer) {
            if (rho[i] == ip && rho[j] == jp) {
              found = true;
              break;
            }
          }
          if (!found) return SeparableFailure{i, j, ip, jp};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace swf
