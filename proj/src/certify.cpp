#include "swfcheck/certify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "swfcheck/errors.hpp"

namespace swf {

namespace {

using nlohmann::json;

json election_json(const FiniteElection& e) {
  json votes = json::array();
  for (const auto& r : e.votes()) votes.push_back(r.str());
  return votes;
}

json relative_profile_json(const RelativeProfile& a) {
  json alpha = json::object();
  for (int gap : a.gap_values()) alpha[std::to_string(gap)] = a.weight(gap).str();
  return alpha;
}

std::string outcome_str(RelOutcome r) { return std::string(1, to_char(r)); }

long long checked_pow(long long base, int exp, long long limit) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

void require_enumerable(long long ballot_size, int n, const char* who) {
  if (n < 1) throw std::invalid_argument("need at least one voter");
  if (checked_pow(ballot_size, n, kEnumerationGuard) > kEnumerationGuard)
    throw guard_error(std::string(who) + ": |ballot|^n exceeds the enumeration guard of " +
                      std::to_string(kEnumerationGuard));
}

// Calls fn for every n-voter election over the ballot, in odometer order
// (voter 0 slowest), so counterexamples are deterministic.
template <class Fn>
void for_each_election(const Ballot& b, int n, Fn&& fn) {
  std::vector<int> idx(n, 0);
  std::vector<Ranking> votes;
  votes.reserve(n);
  while (true) {
    votes.clear();
    for (int v = 0; v < n; ++v) votes.push_back(b.rankings()[idx[v]]);
    fn(FiniteElection(votes));
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == b.size() - 1) idx[pos--] = 0;
    if (pos < 0) return;
    ++idx[pos];
  }
}

CheckReport pass(std::string check) {
  CheckReport r;
  r.check = std::move(check);
  r.passed = true;
  r.counterexample = nullptr;
  return r;
}

CheckReport fail(std::string check, json counterexample) {
  CheckReport r;
  r.check = std::move(check);
  r.passed = false;
  r.counterexample = std::move(counterexample);
  return r;
}

}  // namespace

json CheckReport::to_json() const {
  json out{{"check", check}, {"passed", passed}, {"counterexample", counterexample}};
  if (!details.is_null()) out["details"] = details;
  return out;
}

CheckReport check_miia(const Swf& f, const Ballot& b, int n) {
  require_enumerable(b.size(), n, "check_miia");
  int k = b.k();
  // Per ordered pair: relative election (per-voter gap vector) -> first seen
  // (election, pairwise outcome).
  std::vector<std::map<std::vector<int>, std::pair<FiniteElection, RelOutcome>>> seen(
      size_t(k) * k);
  std::optional<CheckReport> failure;
  for_each_election(b, n, [&](const FiniteElection& e) {
    if (failure) return;
    WeakOrder result = f(e);
    for (int i = 0; i < k && !failure; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        std::vector<int> gaps(n);
        for (int v = 0; v < n; ++v) gaps[v] = e.vote(v).gap(i, j);
        RelOutcome outcome = result.rel(i, j);
        auto& groups = seen[size_t(i) * k + j];
        auto it = groups.find(gaps);
        if (it == groups.end()) {
          groups.emplace(std::move(gaps), std::make_pair(e, outcome));
        } else if (it->second.second != outcome) {
          failure = fail("miia", json{{"pair", {candidate_name(i), candidate_name(j)}},
                                      {"election_a", election_json(it->second.first)},
                                      {"election_b", election_json(e)},
                                      {"outcome_a", outcome_str(it->second.second)},
                                      {"outcome_b", outcome_str(outcome)}});
          break;
        }
      }
    }
  });
  return failure ? *failure : pass("miia");
}

CheckReport check_anonymity(const Swf& f, const Ballot& b, int n) {
  require_enumerable(b.size(), n, "check_anonymity");
  // Elections share a tau-fiber exactly when their sorted vote lists match,
  // and anonymity is equality of results within each fiber.
  std::map<std::vector<Ranking>, std::pair<FiniteElection, WeakOrder>> fibers;
  std::optional<CheckReport> failure;
  for_each_election(b, n, [&](const FiniteElection& e) {
    if (failure) return;
    WeakOrder result = f(e);
    std::vector<Ranking> key = e.votes();
    std::sort(key.begin(), key.end());
    auto it = fibers.find(key);
    if (it == fibers.end()) {
      fibers.emplace(std::move(key), std::make_pair(e, result));
    } else if (!(it->second.second == result)) {
      failure = fail("anonymity", json{{"election_a", election_json(it->second.first)},
                                       {"election_b", election_json(e)},
                                       {"result_a", it->second.second.str()},
                                       {"result_b", result.str()}});
    }
  });
  return failure ? *failure : pass("anonymity");
}

CheckReport check_neutrality(const Swf& f, const Ballot& b, int n) {
  require_enumerable(b.size(), n, "check_neutrality");
  int k = b.k();
  std::vector<std::vector<int>> stabilizer;
  for (const auto& perm : all_permutations(k)) {
    bool preserves = true;
    for (const auto& r : b.rankings())
      if (!b.contains(apply_permutation(perm, r))) {
        preserves = false;
        break;
      }
    if (preserves) stabilizer.push_back(perm);
  }
  std::optional<CheckReport> failure;
  for_each_election(b, n, [&](const FiniteElection& e) {
    if (failure) return;
    WeakOrder result = f(e);
    for (const auto& perm : stabilizer) {
      std::vector<Ranking> permuted;
      permuted.reserve(n);
      for (const auto& r : e.votes()) permuted.push_back(apply_permutation(perm, r));
      WeakOrder lhs = f(FiniteElection(permuted));
      WeakOrder rhs = apply_permutation(perm, result);
      if (!(lhs == rhs)) {
        json names = json::array();
        for (int c = 0; c < k; ++c) names.push_back(candidate_name(perm[c]));
        failure = fail("neutrality", json{{"rho", names},
                                          {"election", election_json(e)},
                                          {"permuted_result", lhs.str()},
                                          {"expected", rhs.str()}});
        return;
      }
    }
  });
  return failure ? *failure : pass("neutrality");
}

CheckReport check_pareto(const Swf& f, const Ballot& b, int n) {
  require_enumerable(b.size(), n, "check_pareto");
  int k = b.k();
  std::optional<CheckReport> failure;
  for_each_election(b, n, [&](const FiniteElection& e) {
    if (failure) return;
    WeakOrder result = f(e);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        bool unanimous = true;
        for (int v = 0; v < n; ++v)
          if (e.vote(v).gap(i, j) <= 0) {
            unanimous = false;
            break;
          }
        if (unanimous && result.rel(i, j) != RelOutcome::W) {
          failure = fail("pareto", json{{"pair", {candidate_name(i), candidate_name(j)}},
                                        {"election", election_json(e)},
                                        {"outcome", outcome_str(result.rel(i, j))},
                                        {"result", result.str()}});
          return;
        }
      }
    }
  });
  return failure ? *failure : pass("pareto");
}

CheckReport check_prm(const RelEvaluator& f,
                      const std::vector<std::pair<RelativeProfile, RelativeProfile>>& pairs) {
  for (const auto& [a1, a2] : pairs) {
    if (!majorizes(a1, a2))
      throw std::invalid_argument("check_prm pair is not majorization-ordered");
    RelOutcome f1 = f(a1), f2 = f(a2);
    if (!rel_ge(f1, f2))
      return fail("prm", json{{"a1", relative_profile_json(a1)},
                              {"a2", relative_profile_json(a2)},
                              {"f1", outcome_str(f1)},
                              {"f2", outcome_str(f2)}});
  }
  CheckReport r = pass("prm");
  r.details = json{{"pairs_checked", pairs.size()}};
  return r;
}

namespace {

// All integer-weight relative profiles of total n supported on `gaps`.
std::vector<RelativeProfile> integer_profiles_on(const std::vector<int>& gaps, int k, int n) {
  std::vector<RelativeProfile> out;
  std::vector<long long> counts(gaps.size(), 0);
  std::function<void(size_t, long long)> rec = [&](size_t pos, long long left) {
    if (pos + 1 == counts.size()) {
      counts[pos] = left;
      RelativeProfile a(k);
      for (size_t t = 0; t < gaps.size(); ++t) a.set(gaps[t], Rat((long long)counts[t]));
      out.push_back(a);
      return;
    }
    for (long long c = 0; c <= left; ++c) {
      counts[pos] = c;
      rec(pos + 1, left - c);
    }
  };
  rec(0, n);
  return out;
}

std::vector<std::vector<int>> distinct_pair_supports(const Ballot& b) {
  std::set<std::vector<int>> supports;
  for (int i = 0; i < b.k(); ++i)
    for (int j = 0; j < b.k(); ++j)
      if (i != j) supports.insert(b.relative_ballot(i, j));
  return {supports.begin(), supports.end()};
}

}  // namespace

CheckReport check_prm_exhaustive(const RelEvaluator& f, const Ballot& b, int n) {
  long long checked = 0;
  for (const auto& gaps : distinct_pair_supports(b)) {
    auto profiles = integer_profiles_on(gaps, b.k(), n);
    if ((long long)profiles.size() * (long long)profiles.size() > kEnumerationGuard)
      throw guard_error("check_prm_exhaustive: profile pair count exceeds the enumeration guard");
    for (const auto& a1 : profiles) {
      for (const auto& a2 : profiles) {
        if (!majorizes(a1, a2)) continue;
        ++checked;
        RelOutcome f1 = f(a1), f2 = f(a2);
        if (!rel_ge(f1, f2))
          return fail("prm", json{{"a1", relative_profile_json(a1)},
                                  {"a2", relative_profile_json(a2)},
                                  {"f1", outcome_str(f1)},
                                  {"f2", outcome_str(f2)}});
      }
    }
  }
  CheckReport r = pass("prm");
  r.details = json{{"pairs_checked", checked}};
  return r;
}

CheckReport check_pr_raw(const Swf& f, const Ballot& b, int n, const RelEvaluator* rel) {
  if (checked_pow(b.size(), 2 * n, kEnumerationGuard) > kEnumerationGuard)
    throw guard_error("check_pr_raw: |ballot|^(2n) exceeds the enumeration guard");
  int k = b.k();

  std::vector<FiniteElection> elections;
  for_each_election(b, n, [&](const FiniteElection& e) { elections.push_back(e); });
  std::vector<WeakOrder> results;
  results.reserve(elections.size());
  for (const auto& e : elections) results.push_back(f(e));

  std::optional<CheckReport> failure;
  for (size_t x = 0; x < elections.size() && !failure; ++x) {
    for (size_t y = 0; y < elections.size() && !failure; ++y) {
      for (int i = 0; i < k && !failure; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          if (!promotes_elections(elections[y], elections[x], j, i)) continue;
          RelOutcome f1 = results[x].rel(i, j);
          RelOutcome f2 = results[y].rel(i, j);
          if (!rel_ge(f1, f2)) {
            failure = fail("pr", json{{"pair", {candidate_name(i), candidate_name(j)}},
                                      {"election_1", election_json(elections[x])},
                                      {"election_2", election_json(elections[y])},
                                      {"f1", outcome_str(f1)},
                                      {"f2", outcome_str(f2)}});
            break;
          }
        }
      }
    }
  }

  CheckReport report = failure ? *failure : pass("pr");
  if (rel) {
    CheckReport prm = check_prm_exhaustive(*rel, b, n);
    report.details = json{{"prm_passed", prm.passed}, {"prm_agrees", prm.passed == report.passed}};
  }
  return report;
}

std::vector<std::pair<RelativeProfile, RelativeProfile>> random_ordered_pairs(
    int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<RelativeProfile, RelativeProfile>> out;
  out.reserve(count);
  const long long D = 64;
  // Upward shift directions (source gap, destination gap).
  const int src[3] = {1, -1, -2};
  const int dst[3] = {2, 1, -1};
  while (int(out.size()) < count) {
    long long cuts[3] = {(long long)(rng() % (D + 1)), (long long)(rng() % (D + 1)),
                         (long long)(rng() % (D + 1))};
    std::sort(cuts, cuts + 3);
    Rat parts[4] = {Rat(cuts[0]) / Rat(D), Rat(cuts[1] - cuts[0]) / Rat(D),
                    Rat(cuts[2] - cuts[1]) / Rat(D), Rat(D - cuts[2]) / Rat(D)};
    RelativeProfile lo = RelativeProfile::from_alpha3({parts[0], parts[1], parts[2], parts[3]});
    RelativeProfile hi = lo;
    int shifts = int(rng() % 4);
    for (int s = 0; s < shifts; ++s) {
      int t = int(rng() % 3);
      Rat avail = hi.weight(src[t]);
      if (avail.is_zero()) continue;
      Rat delta = avail * Rat((long long)(rng() % 17)) / Rat(16);
      hi.set(src[t], hi.weight(src[t]) - delta);
      hi.add(dst[t], delta);
    }
    out.emplace_back(hi, lo);
  }
  return out;
}

namespace {

using detail::u128;

u128 isqrt_u128(u128 x) {
  if (x < 2) return x;
  u128 r = x, prev = 0;
  // Newton iteration from a power-of-two overestimate.
  u128 guess = 1;
  while (guess * guess < x && guess < (u128(1) << 63)) guess <<= 1;
  r = guess;
  while (true) {
    u128 next = (r + x / r) / 2;
    if (next >= r) break;
    prev = r;
    r = next;
  }
  (void)prev;
  return r;
}

// sqrt of a nonnegative rational when it is rational, nullopt otherwise.
std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x.sign() < 0) return std::nullopt;
  u128 num = detail::uabs(x.num()), den = detail::uabs(x.den());
  u128 sn = isqrt_u128(num), sd = isqrt_u128(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat::from_int128(Rat::Int(sn), Rat::Int(sd));
}

struct PathSegment {
  RelativeProfile start;
  int src_gap;
  int dst_gap;
  Rat length;  // mass moved across the whole segment
};

RelativeProfile segment_point(const PathSegment& seg, const Rat& delta) {
  RelativeProfile p = seg.start;
  p.set(seg.src_gap, p.weight(seg.src_gap) - delta);
  p.add(seg.dst_gap, delta);
  return p;
}

// Decomposes the climb from `lo` to `hi` into mass moves between adjacent
// gap values, lowest gaps first. Majorization of hi over lo makes every
// move amount nonnegative.
std::vector<PathSegment> shift_path(const RelativeProfile& lo, const RelativeProfile& hi) {
  std::vector<PathSegment> segments;
  RelativeProfile cur = lo;
  auto gaps = lo.gap_values();                  // descending
  std::reverse(gaps.begin(), gaps.end());       // ascending
  for (size_t t = 0; t + 1 < gaps.size(); ++t) {
    Rat delta = cur.weight(gaps[t]) - hi.weight(gaps[t]);
    if (delta.sign() < 0)
      throw std::invalid_argument("shift path needs majorization-ordered endpoints");
    if (delta.sign() == 0) continue;
    PathSegment seg{cur, gaps[t], gaps[t + 1], delta};
    cur = segment_point(seg, delta);
    segments.push_back(std::move(seg));
  }
  return segments;
}

}  // namespace

IvmCertificate ivm_bracket(const std::function<Rat(const RelativeProfile&)>& g_fn,
                           const RelativeProfile& a_lo, const RelativeProfile& a_hi,
                           const Rat& width) {
  if (!majorizes(a_hi, a_lo))
    throw std::invalid_argument("ivm_bracket: a_hi must majorize a_lo");
  Rat g_lo = g_fn(a_lo), g_hi = g_fn(a_hi);
  if (!(g_lo.sign() < 0 && g_hi.sign() > 0))
    throw std::invalid_argument("ivm_bracket: need g(a_lo) < 0 < g(a_hi), got " + g_lo.str() +
                                " and " + g_hi.str());
  if (width.sign() <= 0) throw std::invalid_argument("ivm_bracket: width must be positive");

  auto exact_at = [&](const RelativeProfile& p) {
    IvmCertificate c(a_lo.k());
    c.exact = true;
    c.at = p;
    c.bracket_lo = p;
    c.bracket_hi = p;
    c.width = Rat(0);
    c.g_lo = Rat(0);
    c.g_hi = Rat(0);
    return c;
  };

  for (const auto& seg : shift_path(a_lo, a_hi)) {
    Rat v0 = g_fn(seg.start);
    if (v0.is_zero()) return exact_at(seg.start);
    RelativeProfile end = segment_point(seg, seg.length);
    Rat v1 = g_fn(end);
    if (v1.is_zero()) return exact_at(end);
    if (v0.sign() > 0 || v1.sign() < 0) continue;  // no crossing in this segment

    // Try for an exact rational zero first, reading the segment as a
    // quadratic through three exact samples; any candidate is verified by
    // evaluation, so a non-quadratic evaluator just falls through.
    Rat half = seg.length / Rat(2);
    Rat vm = g_fn(segment_point(seg, half));
    if (vm.is_zero()) return exact_at(segment_point(seg, half));
    Rat u = vm - v0, v = v1 - v0;
    Rat c2 = (Rat(2) * (v - Rat(2) * u)) / (seg.length * seg.length);
    Rat c1 = (v - c2 * seg.length * seg.length) / seg.length;
    Rat c0 = v0;
    std::vector<Rat> candidates;
    if (c2.is_zero()) {
      if (!c1.is_zero()) candidates.push_back(-c0 / c1);
    } else {
      Rat disc = c1 * c1 - Rat(4) * c0 * c2;
      if (auto root = rational_sqrt(disc)) {
        candidates.push_back((-c1 - *root) / (Rat(2) * c2));
        candidates.push_back((-c1 + *root) / (Rat(2) * c2));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const Rat& delta : candidates) {
      if (delta.sign() < 0 || delta > seg.length) continue;
      RelativeProfile p = segment_point(seg, delta);
      if (g_fn(p).is_zero()) return exact_at(p);
    }

    // Bisection on the parameter, keeping a strict sign change.
    Rat lo_d(0), hi_d = seg.length;
    Rat g_at_lo = v0, g_at_hi = v1;
    while (hi_d - lo_d > width) {
      Rat mid = (lo_d + hi_d) / Rat(2);
      Rat gm = g_fn(segment_point(seg, mid));
      if (gm.is_zero()) return exact_at(segment_point(seg, mid));
      if (gm.sign() < 0) {
        lo_d = mid;
        g_at_lo = gm;
      } else {
        hi_d = mid;
        g_at_hi = gm;
      }
    }
    IvmCertificate c(a_lo.k());
    c.exact = false;
    c.bracket_lo = segment_point(seg, lo_d);
    c.bracket_hi = segment_point(seg, hi_d);
    c.at = segment_point(seg, (lo_d + hi_d) / Rat(2));
    c.width = hi_d - lo_d;
    c.g_lo = g_at_lo;
    c.g_hi = g_at_hi;
    return c;
  }
  throw std::logic_error("ivm_bracket: no sign change found along the shift path");
}

std::string GFunction::str() const {
  std::string out;
  for (auto v : values) out.push_back(to_char(v));
  return out;
}

namespace {

std::optional<int> threshold_kappa(const std::vector<RelOutcome>& g, int m) {
  for (int kappa : {-1, 0, 1}) {
    bool match = true;
    for (int i = 0; i < int(g.size()); ++i) {
      if (g[i] != phi(Rat(kappa * (3 * i - m)))) {
        match = false;
        break;
      }
    }
    if (match) return kappa;
  }
  return std::nullopt;
}

}  // namespace

std::vector<NumberlineSolution> numberline_solutions(int l, int m) {
  if (l < 1 || l > 14)
    throw guard_error("numberline_solutions supports 1 <= l <= 14, got l=" + std::to_string(l));
  if (m < l || m > 2 * l)
    throw guard_error("numberline_solutions needs l <= m <= 2l, got l=" + std::to_string(l) +
                      " m=" + std::to_string(m));

  std::vector<NumberlineSolution> out;
  std::vector<RelOutcome> g(l + 1, RelOutcome::L);
  const RelOutcome choices[3] = {RelOutcome::L, RelOutcome::T, RelOutcome::W};

  // Depth-first assignment with incremental pruning: once g(t) is placed,
  // every triple {i, j, t} with i + j = m - t and i <= j <= t is decided.
  std::function<void(int)> assign = [&](int t) {
    if (t > l) {
      out.push_back({GFunction{g}, threshold_kappa(g, m)});
      return;
    }
    for (RelOutcome choice : choices) {
      g[t] = choice;
      bool ok = true;
      for (int i = std::max(0, m - 2 * t); ok && 2 * i <= m - t; ++i) {
        int j = m - t - i;
        if (j > t) continue;
        if (!is_consistent(g[i], g[j], g[t])) ok = false;
      }
      if (ok) assign(t + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end(), [](const NumberlineSolution& a, const NumberlineSolution& b) {
    return a.g.values < b.g.values;
  });
  return out;
}

std::string to_string(CcRuleLabel label) {
  switch (label) {
    case CcRuleLabel::PositiveBorda: return "positive-borda";
    case CcRuleLabel::NegativeBorda: return "negative-borda";
    case CcRuleLabel::TieRule: return "tie";
  }
  return "?";
}

std::vector<CcClassifiedRule> classify_cc(int n, bool require_pareto, bool require_pr) {
  std::vector<CcClassifiedRule> out;
  for (const auto& sol : numberline_solutions(n, n)) {
    const auto& g = sol.g.values;
    if (require_pareto) {
      if (g[n] != RelOutcome::L) continue;
      if (g[0] != RelOutcome::W)
        throw std::logic_error("pareto survivor fails the unanimity cross-check");
    }
    if (require_pr) {
      bool non_increasing = true;
      for (int i = 0; i + 1 <= n; ++i)
        if (int(g[i + 1]) > int(g[i])) {
          non_increasing = false;
          break;
        }
      if (!non_increasing) continue;
    }
    if (!sol.kappa)
      throw std::logic_error("consistent verdict table without threshold shape");
    CcRuleLabel label = *sol.kappa == 0
                            ? CcRuleLabel::TieRule
                            : (*sol.kappa < 0 ? CcRuleLabel::PositiveBorda : CcRuleLabel::NegativeBorda);
    out.push_back({sol.g, label});
  }
  std::sort(out.begin(), out.end(), [](const CcClassifiedRule& a, const CcClassifiedRule& b) {
    return int(a.label) < int(b.label);
  });
  return out;
}

Rule cc_rule_from_g(const GFunction& g) { return Rule(CondorcetG{g.values, g.l()}); }

}  // namespace swf
