#include "swfcheck/rules.hpp"

#include <algorithm>
#include <numeric>

#include "swfcheck/errors.hpp"

namespace swf {

namespace {

std::string pair_name(int i, int j) {
  return "(" + candidate_name(i) + "," + candidate_name(j) + ")";
}

// Weak order from exact scores: higher score means higher tier.
WeakOrder order_by_scores(const std::vector<Rat>& scores) {
  int k = int(scores.size());
  std::vector<int> by_score(k);
  std::iota(by_score.begin(), by_score.end(), 0);
  std::stable_sort(by_score.begin(), by_score.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  std::vector<int> tier_of(k, 0);
  int tier = 0;
  for (int pos = 0; pos < k; ++pos) {
    if (pos > 0 && scores[by_score[pos]] != scores[by_score[pos - 1]]) ++tier;
    tier_of[by_score[pos]] = tier;
  }
  return WeakOrder(std::move(tier_of));
}

std::vector<Rat> unweighted_borda_scores(const AnonymousProfile& p, const Rat& w) {
  std::vector<Rat> scores(p.k());
  for (const auto& [r, weight] : p.weights())
    for (int c = 0; c < p.k(); ++c) scores[c] += Rat(r.rank_of(c)) * weight * w;
  return scores;
}

// The two cyclic orbits of the six three-candidate rankings. Membership is
// decided by whether the top-down candidate list is an even rotation pattern.
const std::vector<int>& cyclic_orbit_perm() {
  static const std::vector<int> rot{1, 2, 0};  // c1->c2, c2->c3, c3->c1
  return rot;
}

std::vector<Ranking> cyclic_orbit(const Ranking& r) {
  const auto& rot = cyclic_orbit_perm();
  Ranking a = apply_permutation(rot, r);
  Ranking b = apply_permutation(rot, a);
  return {r, a, b};
}

void require_normalized(const Rat& total, const char* who) {
  if (total != Rat(1))
    throw std::invalid_argument(std::string(who) + " needs a normalized profile (total 1), got total " +
                                total.str());
}

// Verdict table lookup for a Condorcet-cycle rule: the relative profile must
// sit on one adjacent-pair gap support, {1,-2} or {2,-1}.
RelOutcome condorcet_g_verdict(const CondorcetG& cg, const RelativeProfile& a) {
  if (a.k() != 3) throw incompat_error("cycle-table rule needs k = 3");
  Rat total = a.total();
  if (!(total == Rat(cg.n)))
    throw incompat_error("cycle-table rule for n=" + std::to_string(cg.n) + " got total " + total.str());
  auto as_index = [&](const Rat& w) -> long long {
    if (!w.is_integer()) throw incompat_error("cycle-table rule needs integer gap counts");
    return (long long)(w.num());
  };
  if (a.weight(2).is_zero() && a.weight(-1).is_zero()) {
    // support {1, -2}: read the table at the size of the opposing block
    return cg.g[size_t(as_index(a.weight(-2)))];
  }
  if (a.weight(1).is_zero() && a.weight(-2).is_zero()) {
    return negate(cg.g[size_t(as_index(a.weight(2)))]);
  }
  throw incompat_error("cycle-table rule saw gaps outside one cyclic pair support");
}

}  // namespace

Rule::Rule(Maskin r) : v_(std::move(r)) {
  const auto& m = std::get<Maskin>(v_);
  if (m.X < Rat(2))
    throw std::invalid_argument("interaction rule needs X >= 2, got " + m.X.str());
}

Rule::Rule(CondorcetG r) : v_(std::move(r)) {
  const auto& cg = std::get<CondorcetG>(v_);
  if (cg.n < 0 || int(cg.g.size()) != cg.n + 1)
    throw std::invalid_argument("verdict table must cover 0..n");
}

std::string Rule::describe() const {
  if (auto* b = get_if<UnweightedBorda>()) return "borda(w=" + b->w.str() + ")";
  if (get_if<WeightedBordaFinite>()) return "weighted-borda";
  if (auto* m = get_if<Maskin>()) return "maskin(X=" + m->X.str() + ")";
  if (get_if<Tie>()) return "tie";
  if (auto* cg = get_if<CondorcetG>()) {
    std::string g;
    for (auto v : cg->g) g.push_back(to_char(v));
    return "cc-g(n=" + std::to_string(cg->n) + ",g=" + g + ")";
  }
  return "?";
}

Rat borda_score(const std::vector<Rat>& weights, const FiniteElection& e, int i) {
  if (int(weights.size()) != e.n())
    throw incompat_error("weight count " + std::to_string(weights.size()) + " does not match " +
                         std::to_string(e.n()) + " voters");
  Rat score;
  for (int v = 0; v < e.n(); ++v) score += Rat(e.vote(v).rank_of(i)) * weights[v];
  return score;
}

Rat borda_diff_unweighted(const RelativeProfile& a) {
  Rat d;
  for (int gap : a.gap_values()) d += Rat(gap) * a.weight(gap);
  return d;
}

Rat maskin_g(const RelativeProfile& a, const Rat& X) {
  if (a.k() != 3) throw incompat_error("maskin_g needs k = 3");
  require_normalized(a.total(), "maskin_g");
  Rat a2 = a.weight(2), a1 = a.weight(1), am1 = a.weight(-1), am2 = a.weight(-2);
  return (X + a1 + am2) * (a1 - Rat(2) * am2) + (X + a2 + am1) * (Rat(2) * a2 - am1);
}

Rat maskin_G(const AnonymousProfile& p, int i, const Rat& X) {
  if (p.k() != 3) throw incompat_error("maskin_G needs k = 3");
  require_normalized(p.total(), "maskin_G");
  Rat linear, quadratic;
  for (const auto& [r, w] : p.weights()) {
    linear += Rat(r.rank_of(i)) * w;
    Rat orbit_mass;
    for (const auto& s : cyclic_orbit(r)) orbit_mass += p.weight(s);
    quadratic += Rat(r.rank_of(i)) * w * orbit_mass;
  }
  return X * linear + quadratic;
}

WeakOrder assemble_weak_order(const std::map<std::pair<int, int>, RelOutcome>& rel, int k) {
  auto verdict = [&](int i, int j) {
    auto it = rel.find({i, j});
    if (it == rel.end())
      throw std::invalid_argument("missing pairwise verdict for " + pair_name(i, j));
    return it->second;
  };

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (verdict(i, j) != negate(verdict(j, i)))
        throw assembly_error("antisymmetry violated at pair " + pair_name(i, j));

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        if (!is_consistent(verdict(i, j), verdict(j, l), verdict(l, i)))
          throw assembly_error("inconsistent verdict triple at (" + candidate_name(i) + "," +
                               candidate_name(j) + "," + candidate_name(l) + ")");

  // Tie components are cliques once every triple is consistent; merge them,
  // then order the blocks by wins, which now form a transitive tournament.
  std::vector<int> group(k);
  std::iota(group.begin(), group.end(), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || verdict(i, j) != RelOutcome::T) continue;
      int keep = std::min(group[i], group[j]);
      int drop = std::max(group[i], group[j]);
      if (keep == drop) continue;
      for (int c = 0; c < k; ++c)
        if (group[c] == drop) group[c] = keep;
    }
  }

  std::vector<int> reps;
  for (int c = 0; c < k; ++c)
    if (group[c] == c) reps.push_back(c);

  std::vector<int> wins(k, 0);
  for (int a : reps)
    for (int b : reps)
      if (a != b && verdict(a, b) == RelOutcome::W) ++wins[a];

  std::vector<int> order = reps;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return wins[a] > wins[b]; });

  std::vector<int> tier_of(k);
  for (size_t t = 0; t < order.size(); ++t)
    for (int c = 0; c < k; ++c)
      if (group[c] == order[t]) tier_of[c] = int(t);
  WeakOrder result{std::move(tier_of)};

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && result.rel(i, j) != verdict(i, j))
        throw assembly_error("verdicts do not form a weak order (seen at " + pair_name(i, j) + ")");
  return result;
}

WeakOrder evaluate(const Rule& rule, const AnonymousProfile& p) {
  if (p.total().sign() <= 0) throw incompat_error("profile with zero total");
  if (auto* b = rule.get_if<UnweightedBorda>()) {
    return order_by_scores(unweighted_borda_scores(p, b->w));
  }
  if (rule.get_if<WeightedBordaFinite>()) {
    throw incompat_error("per-voter Borda weights cannot be applied to an anonymous profile");
  }
  if (auto* m = rule.get_if<Maskin>()) {
    if (p.k() != 3) throw incompat_error("interaction rule needs k = 3");
    AnonymousProfile q = p.total() == Rat(1) ? p : normalize(p);
    std::vector<Rat> scores(3);
    for (int c = 0; c < 3; ++c) scores[c] = maskin_G(q, c, m->X);
    return order_by_scores(scores);
  }
  if (rule.get_if<Tie>()) {
    return WeakOrder::single_tier(p.k());
  }
  if (auto* cg = rule.get_if<CondorcetG>()) {
    if (p.k() != 3) throw incompat_error("cycle-table rule needs k = 3");
    Ballot cc = Ballot::condorcet();
    for (const auto& [r, w] : p.weights()) {
      if (!cc.contains(r))
        throw incompat_error("cycle-table rule got weight on off-ballot ranking " + r.str());
      if (!w.is_integer()) throw incompat_error("cycle-table rule needs integer counts");
    }
    std::map<std::pair<int, int>, RelOutcome> rel;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) rel[{i, j}] = condorcet_g_verdict(*cg, project(p, i, j));
    return assemble_weak_order(rel, 3);
  }
  throw incompat_error("unknown rule");
}

WeakOrder evaluate_election(const Rule& rule, const FiniteElection& e) {
  if (auto* wb = rule.get_if<WeightedBordaFinite>()) {
    std::vector<Rat> scores(e.k());
    for (int c = 0; c < e.k(); ++c) scores[c] = borda_score(wb->weights, e, c);
    return order_by_scores(scores);
  }
  return evaluate(rule, tau(e));
}

RelOutcome relative_verdict(const Rule& rule, const RelativeProfile& a) {
  if (auto* b = rule.get_if<UnweightedBorda>()) {
    return phi(b->w * borda_diff_unweighted(a));
  }
  if (rule.get_if<WeightedBordaFinite>()) {
    throw incompat_error("per-voter Borda weights have no profile-level pairwise verdict");
  }
  if (auto* m = rule.get_if<Maskin>()) {
    RelativeProfile q = a.total() == Rat(1) ? a : normalize(a);
    return phi(maskin_g(q, m->X));
  }
  if (rule.get_if<Tie>()) {
    return RelOutcome::T;
  }
  if (auto* cg = rule.get_if<CondorcetG>()) {
    return condorcet_g_verdict(*cg, a);
  }
  throw incompat_error("unknown rule");
}

std::optional<Rat> pairwise_differential(const Rule& rule, const AnonymousProfile& p, int i, int j) {
  if (auto* b = rule.get_if<UnweightedBorda>()) {
    AnonymousProfile q = p.total() == Rat(1) ? p : normalize(p);
    return b->w * borda_diff_unweighted(project(q, i, j));
  }
  if (auto* m = rule.get_if<Maskin>()) {
    AnonymousProfile q = p.total() == Rat(1) ? p : normalize(p);
    return maskin_g(project(q, i, j), m->X);
  }
  return std::nullopt;
}

std::optional<WeaklyBordaCounterexample> weakly_borda_witness(
    const Rule& rule, const Rat& w, const std::vector<AnonymousProfile>& profiles) {
  if (w.is_zero())
    throw std::invalid_argument("weak-Borda comparison is undefined against the tie rule (w = 0)");
  for (const auto& p : profiles) {
    WeakOrder result = evaluate(rule, p);
    for (int i = 0; i < p.k(); ++i) {
      for (int j = 0; j < p.k(); ++j) {
        if (i == j) continue;
        RelOutcome borda = phi(w * borda_diff_unweighted(project(p, i, j)));
        if (borda == RelOutcome::T) continue;
        if (result.rel(i, j) != borda)
          return WeaklyBordaCounterexample{p, i, j, borda, result.rel(i, j)};
      }
    }
  }
  return std::nullopt;
}

std::optional<DisagreementWitness> disagreement_search(long long n, const Rat& X) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  // Rankings realizing each gap for the pair (c1, c2).
  const Ranking by_gap2 = Ranking::parse("c1>c3>c2");
  const Ranking by_gap1 = Ranking::parse("c1>c2>c3");
  const Ranking by_gap_m1 = Ranking::parse("c2>c1>c3");
  const Ranking by_gap_m2 = Ranking::parse("c2>c3>c1");

  for (long long a2 = 0; a2 <= n; ++a2) {
    for (long long a1 = 0; a1 + a2 <= n; ++a1) {
      for (long long am1 = 0; am1 + a1 + a2 <= n; ++am1) {
        long long am2 = n - a2 - a1 - am1;
        RelativeProfile alpha = RelativeProfile::from_alpha3(
            {Rat(a2), Rat(a1), Rat(am1), Rat(am2)});
        Rat b = borda_diff_unweighted(alpha);
        if (b.is_zero()) continue;
        Rat g = maskin_g(normalize(alpha), X);
        if (g.is_zero()) continue;
        if (g.sign() == b.sign()) continue;
        AnonymousProfile profile(3);
        profile.add(by_gap2, Rat(a2));
        profile.add(by_gap1, Rat(a1));
        profile.add(by_gap_m1, Rat(am1));
        profile.add(by_gap_m2, Rat(am2));
        return DisagreementWitness{{a2, a1, am1, am2}, g, b, profile};
      }
    }
  }
  return std::nullopt;
}

}  // namespace swf
