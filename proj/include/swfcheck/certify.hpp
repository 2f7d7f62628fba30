#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "swfcheck/ballot.hpp"
#include "swfcheck/profile.hpp"
#include "swfcheck/rules.hpp"

namespace swf {

using Swf = std::function<WeakOrder(const FiniteElection&)>;
using RelEvaluator = std::function<RelOutcome(const RelativeProfile&)>;

inline Swf as_swf(const Rule& rule) {
  return [rule](const FiniteElection& e) { return evaluate_election(rule, e); };
}

inline RelEvaluator as_rel_evaluator(const Rule& rule) {
  return [rule](const RelativeProfile& a) { return relative_verdict(rule, a); };
}

// Outcome of one axiom check. The counterexample is null exactly when the
// check passed; when present it carries enough structure (elections as
// ranking-string lists, pairs as candidate names) to replay the failure
// against the definition.
struct CheckReport {
  std::string check;
  bool passed = false;
  nlohmann::json counterexample;  // null iff passed
  nlohmann::json details;         // optional extras (counts, cross-checks)

  nlohmann::json to_json() const;
};

// Hard cap on exhaustive election enumerations.
constexpr long long kEnumerationGuard = 10'000'000;

// Gap-aware independence: within every class of elections sharing a relative
// election for a pair, the pairwise result must be constant.
CheckReport check_miia(const Swf& f, const Ballot& b, int n);

// Result depends only on how many voters chose each ranking.
CheckReport check_anonymity(const Swf& f, const Ballot& b, int n);

// For every ballot-preserving candidate permutation, permuting the votes
// permutes the result.
CheckReport check_neutrality(const Swf& f, const Ballot& b, int n);

// Unanimous strict preference forces the strict pairwise result.
CheckReport check_pareto(const Swf& f, const Ballot& b, int n);

// Monotonicity of a pairwise verdict map along supplied majorization-ordered
// profile pairs (first element must majorize the second).
CheckReport check_prm(const RelEvaluator& f,
                      const std::vector<std::pair<RelativeProfile, RelativeProfile>>& pairs);

// Exhaustive PRm over all integer relative profiles of total n on the
// ballot's pair supports.
CheckReport check_prm_exhaustive(const RelEvaluator& f, const Ballot& b, int n);

// Raw positive responsiveness over all voterwise-promoted election pairs.
// When a pairwise evaluator is supplied, the exhaustive PRm verdict is
// cross-checked and reported under details["prm_agrees"].
CheckReport check_pr_raw(const Swf& f, const Ballot& b, int n,
                         const RelEvaluator* rel = nullptr);

// Deterministic stream of majorization-ordered normalized profile pairs for
// k = 3, built by upward gap shifts from a random base profile.
std::vector<std::pair<RelativeProfile, RelativeProfile>> random_ordered_pairs(
    int count, unsigned long long seed);

// A point on the monotone shift path between two relative profiles.
struct IvmCertificate {
  explicit IvmCertificate(int k) : at(k), bracket_lo(k), bracket_hi(k) {}

  bool exact = false;          // true: zero found exactly at `at`
  RelativeProfile at;          // exact zero, or bracket midpoint representative
  RelativeProfile bracket_lo;  // g < 0 side (equals `at` when exact)
  RelativeProfile bracket_hi;  // g > 0 side (equals `at` when exact)
  Rat width;                   // parameter distance between bracket ends
  Rat g_lo, g_hi;              // evaluator values at the bracket ends
};

// Certifies the intermediate-value property along the monotone shift path
// from a_lo up to a_hi: requires majorizes(a_hi, a_lo), g(a_lo) < 0 and
// g(a_hi) > 0, and returns either an exact rational zero on the path or a
// sign-change bracket of parameter width <= width.
IvmCertificate ivm_bracket(const std::function<Rat(const RelativeProfile&)>& g_fn,
                           const RelativeProfile& a_lo, const RelativeProfile& a_hi,
                           const Rat& width);

// A verdict table on {0..l}.
struct GFunction {
  std::vector<RelOutcome> values;

  int l() const { return int(values.size()) - 1; }
  std::string str() const;
  bool operator==(const GFunction&) const = default;
};

struct NumberlineSolution {
  GFunction g;
  // Sign kappa in {-1, 0, +1} such that g(i) = phi(kappa * (3i - m)) for all
  // i, when the table has that threshold shape.
  std::optional<int> kappa;
};

// All verdict tables on {0..l} whose every index triple summing to m yields
// a consistent multiset, each annotated with its threshold shape. Bounds:
// 1 <= l <= 14, l <= m <= 2l.
std::vector<NumberlineSolution> numberline_solutions(int l, int m);

enum class CcRuleLabel { PositiveBorda, NegativeBorda, TieRule };
std::string to_string(CcRuleLabel label);

struct CcClassifiedRule {
  GFunction g;
  CcRuleLabel label;
};

// Classifies the SWFs on the n-voter Condorcet-cycle ballot that are
// anonymous, neutral and gap-independent: enumerates the consistent verdict
// tables, optionally filters by Pareto (g(n) = L) and by positive
// responsiveness (g non-increasing), and labels each survivor.
std::vector<CcClassifiedRule> classify_cc(int n, bool require_pareto, bool require_pr);

// Wraps a verdict table as an evaluable rule on n-voter cycle profiles.
Rule cc_rule_from_g(const GFunction& g);

}  // namespace swf
