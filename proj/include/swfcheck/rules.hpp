#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "swfcheck/outcome.hpp"
#include "swfcheck/profile.hpp"

namespace swf {

// Unweighted Borda rule with constant voter weight w. Positive w is the
// usual Borda count, negative w reverses it, w = 0 ties everything.
struct UnweightedBorda {
  Rat w;
};

// Finite Borda rule with one weight per voter; evaluated on elections only,
// since per-voter weights do not factor through the anonymous profile.
struct WeightedBordaFinite {
  std::vector<Rat> weights;
};

// Three-candidate rule scored by a linear Borda part plus a quadratic
// interaction between the two cyclic ranking orbits. X >= 2 keeps the rule
// positively responsive.
struct Maskin {
  Rat X;
};

// Always returns a single tier.
struct Tie {};

// Rule on the Condorcet-cycle ballot determined by a verdict table
// g: {0..n} -> {W,T,L}; the adjacent-pair verdict reads the table at the
// opposing-block size and the full order is assembled pairwise.
struct CondorcetG {
  std::vector<RelOutcome> g;  // indexed 0..n
  int n;
};

class Rule {
 public:
  using Variant = std::variant<UnweightedBorda, WeightedBordaFinite, Maskin, Tie, CondorcetG>;

  Rule(UnweightedBorda r) : v_(std::move(r)) {}
  Rule(WeightedBordaFinite r) : v_(std::move(r)) {}
  Rule(Maskin r);
  Rule(Tie r) : v_(r) {}
  Rule(CondorcetG r);

  static Rule borda(const Rat& w) { return Rule(UnweightedBorda{w}); }
  static Rule maskin(const Rat& X = Rat(2)) { return Rule(Maskin{X}); }
  static Rule tie() { return Rule(Tie{}); }

  const Variant& variant() const { return v_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }
  std::string describe() const;

 private:
  Variant v_;
};

// Weighted Borda score of candidate i: sum over voters of rank times weight.
Rat borda_score(const std::vector<Rat>& weights, const FiniteElection& e, int i);

// Unit-weight Borda differential of a relative profile: sum of gap * weight.
// At k = 3 this is 2*a2 + a1 - a-1 - 2*a-2.
Rat borda_diff_unweighted(const RelativeProfile& a);

// Relative score of the quadratic cyclic-interaction rule on a normalized
// three-candidate relative profile:
//   (X + a1 + a-2)(a1 - 2*a-2) + (X + a2 + a-1)(2*a2 - a-1).
Rat maskin_g(const RelativeProfile& a, const Rat& X);

// Full score of candidate i on a normalized three-candidate profile:
//   X * sum_r r(ci) e_r  +  sum_r sum_{s in cyclic orbit of r} r(ci) e_r e_s.
// Pairwise differences reproduce maskin_g of the pair projection exactly.
Rat maskin_G(const AnonymousProfile& p, int i, const Rat& X);

// Builds the weak order whose pairwise verdicts match `rel` exactly.
// `rel` must hold a verdict for every ordered pair of distinct candidates.
// Throws assembly_error when antisymmetry fails or some triple of verdicts
// is inconsistent, naming the offending pair or triple.
WeakOrder assemble_weak_order(
    const std::map<std::pair<int, int>, RelOutcome>& rel, int k);

// Applies a rule to an anonymous profile. Count profiles are normalized
// internally where the rule needs it. Throws incompat_error when the rule
// cannot read the profile (wrong k, per-voter weights, off-ballot support).
WeakOrder evaluate(const Rule& rule, const AnonymousProfile& p);

// Applies a rule voter-aware; anonymous rules route through tau.
WeakOrder evaluate_election(const Rule& rule, const FiniteElection& e);

// The pairwise verdict a rule assigns to a relative profile, independent of
// which candidate pair produced it. Defined for the rules that factor
// through the gap distribution (everything except per-voter weights).
RelOutcome relative_verdict(const Rule& rule, const RelativeProfile& a);

// Exact pairwise score differential (candidate i minus candidate j) on the
// normalized profile, for the score-based rules.
std::optional<Rat> pairwise_differential(const Rule& rule, const AnonymousProfile& p, int i, int j);

struct WeaklyBordaCounterexample {
  AnonymousProfile profile;
  int i, j;
  RelOutcome borda_verdict;
  RelOutcome rule_verdict;
};

// Searches the given profiles for a pair where the w-weighted Borda rule is
// decisive and `rule` contradicts it. w = 0 is rejected: nothing is weakly
// Borda with respect to the tie rule.
std::optional<WeaklyBordaCounterexample> weakly_borda_witness(
    const Rule& rule, const Rat& w, const std::vector<AnonymousProfile>& profiles);

struct DisagreementWitness {
  std::vector<long long> alpha;  // (a2, a1, a-1, a-2), integers summing to n
  Rat g_value;                   // score of the normalized witness
  Rat borda_value;               // integer Borda differential
  AnonymousProfile profile;      // a 6-ranking profile projecting to alpha
};

// Scans integer gap distributions of total n, lexicographically with a2
// outermost, for a sign disagreement between the quadratic rule at X and the
// positive unit Borda differential (both strictly nonzero).
std::optional<DisagreementWitness> disagreement_search(long long n, const Rat& X);

}  // namespace swf
