// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is exact rational equality; runtime budgets are enforced
// with wall-clock timing around the computation itself.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "swfcheck/certify.hpp"
#include "swfcheck/errors.hpp"
#include "swfcheck/json_io.hpp"

using namespace swf;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

Ranking rk(const char* text) { return Ranking::parse(text); }

RelativeProfile alpha3(const char* a2, const char* a1, const char* am1, const char* am2) {
  return RelativeProfile::from_alpha3(
      {Rat::parse(a2), Rat::parse(a1), Rat::parse(am1), Rat::parse(am2)});
}

AnonymousProfile witness31() {
  AnonymousProfile p(3);
  p.add(rk("c1>c2>c3"), Rat(19));
  p.add(rk("c2>c1>c3"), Rat(4));
  p.add(rk("c2>c3>c1"), Rat(8));
  return p;
}

bool criterion_witness31(std::string& detail) {
  auto p = witness31();
  Rat g = *pairwise_differential(Rule::maskin(), p, 0, 1);
  Rat b = *pairwise_differential(Rule::borda(Rat(1)), p, 0, 1);
  RelOutcome gv = evaluate(Rule::maskin(), p).rel(0, 1);
  RelOutcome bv = evaluate(Rule::borda(Rat(1)), p).rel(0, 1);
  detail = "g=" + g.str() + " (" + std::string(1, to_char(gv)) + "), b=" + b.str() + " (" +
           std::string(1, to_char(bv)) + ")";
  return g == Rat::of(3, 961) && b == Rat::of(-1, 31) && gv == RelOutcome::W && bv == RelOutcome::L;
}

bool criterion_cc_classification(std::string& detail) {
  for (int n = 1; n <= 12; ++n) {
    auto all = classify_cc(n, false, false);
    if (all.size() != 3) {
      detail = "n=" + std::to_string(n) + ": expected 3 rules, got " + std::to_string(all.size());
      return false;
    }
    std::set<CcRuleLabel> labels;
    for (const auto& r : all) labels.insert(r.label);
    if (labels.size() != 3) {
      detail = "n=" + std::to_string(n) + ": labels not distinct";
      return false;
    }
    auto pareto = classify_cc(n, true, false);
    if (pareto.size() != 1 || pareto[0].label != CcRuleLabel::PositiveBorda) {
      detail = "n=" + std::to_string(n) + ": pareto filter kept " + std::to_string(pareto.size());
      return false;
    }
    auto pr = classify_cc(n, false, true);
    if (pr.size() != 2 || pr[0].label != CcRuleLabel::PositiveBorda ||
        pr[1].label != CcRuleLabel::TieRule) {
      detail = "n=" + std::to_string(n) + ": pr filter kept " + std::to_string(pr.size());
      return false;
    }
  }
  detail = "n=1..12: 3 rules each, pareto keeps positive borda, pr keeps positive borda + tie";
  return true;
}

bool criterion_numberline(std::string& detail) {
  int runs = 0;
  for (int l = 1; l <= 12; ++l) {
    for (int m = l; m <= 2 * l; ++m) {
      auto sols = numberline_solutions(l, m);
      ++runs;
      if (sols.size() != 3) {
        detail = "l=" + std::to_string(l) + " m=" + std::to_string(m) + ": got " +
                 std::to_string(sols.size()) + " solutions";
        return false;
      }
      for (const auto& sol : sols) {
        if (!sol.kappa) {
          detail = "non-threshold solution " + sol.g.str() + " at l=" + std::to_string(l) +
                   " m=" + std::to_string(m);
          return false;
        }
        for (int i = 0; i <= l; ++i) {
          if (sol.g.values[i] != phi(Rat(*sol.kappa * (3 * i - m)))) {
            detail = "threshold mismatch at l=" + std::to_string(l) + " m=" + std::to_string(m);
            return false;
          }
        }
        if (m % 3 == 0 && sol.g.values[m / 3] != RelOutcome::T) {
          detail = "missing tie at m/3 for l=" + std::to_string(l) + " m=" + std::to_string(m);
          return false;
        }
      }
    }
  }
  detail = std::to_string(runs) + " (l, m) cases, 3 threshold solutions each";
  return true;
}

bool criterion_axiom_suite(std::string& detail) {
  struct Setting {
    Ballot ballot;
    int n;
    const char* label;
  };
  const Setting settings[] = {{Ballot::condorcet(), 3, "cycle ballot, n=3"},
                              {Ballot::full(3), 2, "full ballot, n=2"}};
  Rule rule = Rule::maskin();
  auto swf_fn = as_swf(rule);
  auto rel = as_rel_evaluator(rule);
  for (const auto& s : settings) {
    CheckReport reports[] = {
        check_miia(swf_fn, s.ballot, s.n), check_anonymity(swf_fn, s.ballot, s.n),
        check_neutrality(swf_fn, s.ballot, s.n), check_pareto(swf_fn, s.ballot, s.n),
        check_pr_raw(swf_fn, s.ballot, s.n, &rel)};
    for (const auto& r : reports) {
      if (!r.passed) {
        detail = std::string(s.label) + ": " + r.check + " failed";
        return false;
      }
    }
  }
  detail = "miia, anonymity, neutrality, pareto, pr all pass on both settings";
  return true;
}

bool criterion_prm(std::string& detail) {
  auto pairs = random_ordered_pairs(100000, 20240831);
  auto report = check_prm(as_rel_evaluator(Rule::maskin()), pairs);
  if (!report.passed) {
    detail = "interaction rule violated monotonicity: " + report.counterexample.dump();
    return false;
  }
  std::vector<std::pair<RelativeProfile, RelativeProfile>> canonical{
      {alpha3("0", "1", "0", "0"), alpha3("0", "0", "0", "1")}};
  auto negative = check_prm(as_rel_evaluator(Rule::borda(Rat(-1))), canonical);
  if (negative.passed) {
    detail = "negative borda unexpectedly passed the canonical pair";
    return false;
  }
  detail = "100000 ordered pairs clean; negative borda fails the canonical pair";
  return true;
}

bool criterion_pareto_floor(std::string& detail) {
  Rat min_seen;
  bool first = true;
  RelativeProfile argmin(3);
  for (int t = 0; t <= 64; ++t) {
    auto a = RelativeProfile::from_alpha3(
        {Rat::of(64 - t, 64), Rat::of(t, 64), Rat(0), Rat(0)});
    Rat g = maskin_g(a, Rat(2));
    if (g < Rat::of(1, 2)) {
      detail = "value below 1/2 at a1=" + Rat::of(t, 64).str();
      return false;
    }
    if (first || g < min_seen) {
      min_seen = g;
      argmin = a;
      first = false;
    }
  }
  if (min_seen != Rat(3) || argmin.weight(1) != Rat(1)) {
    detail = "minimum " + min_seen.str() + " at a1=" + argmin.weight(1).str();
    return false;
  }
  detail = "grid minimum 3 at a1=1, all 65 values >= 1/2";
  return true;
}

bool criterion_identities(std::string& detail) {
  std::mt19937_64 rng(97);
  auto rankings = all_rankings(3);
  for (int t = 0; t < 10000; ++t) {
    long long parts[6];
    long long total = 0;
    for (auto& part : parts) {
      part = 1 + (long long)(rng() % 89);
      total += part;
    }
    AnonymousProfile p(3);
    for (size_t r = 0; r < rankings.size(); ++r) p.add(rankings[r], Rat::of(parts[r], total));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        auto a = project(p, i, j);
        if (maskin_G(p, i, Rat(2)) - maskin_G(p, j, Rat(2)) != maskin_g(a, Rat(2))) {
          detail = "score difference mismatch at trial " + std::to_string(t);
          return false;
        }
        if (maskin_g(rho(a), Rat(2)) != -maskin_g(a, Rat(2))) {
          detail = "reversal antisymmetry mismatch at trial " + std::to_string(t);
          return false;
        }
      }
    }
  }
  detail = "10000 profiles x 6 pairs: score-difference and reversal identities exact";
  return true;
}

bool criterion_ballot_lemmas(std::string& detail) {
  struct Entry {
    Ballot ballot;
    const char* label;
  };
  const Entry entries[] = {{Ballot::full(3), "full k=3"},
                           {Ballot::full(4), "full k=4"},
                           {Ballot::condorcet(), "cycle"}};
  for (const auto& e : entries) {
    if (!is_increasing(e.ballot)) {
      detail = std::string(e.label) + " not increasing";
      return false;
    }
    if (!is_intermediate(e.ballot)) {
      detail = std::string(e.label) + " not intermediate";
      return false;
    }
    if (!is_separable(e.ballot)) {
      detail = std::string(e.label) + " not separable";
      return false;
    }
  }
  detail = "full k=3, full k=4 and cycle ballots are increasing, intermediate, separable";
  return true;
}

bool criterion_assembler(std::string& detail) {
  const RelOutcome vals[3] = {RelOutcome::W, RelOutcome::T, RelOutcome::L};
  int successes = 0;
  std::set<std::string> seen;
  for (RelOutcome x : vals) {
    for (RelOutcome y : vals) {
      for (RelOutcome z : vals) {
        std::map<std::pair<int, int>, RelOutcome> rel{
            {{0, 1}, x}, {{1, 0}, negate(x)}, {{1, 2}, y},
            {{2, 1}, negate(y)}, {{2, 0}, z}, {{0, 2}, negate(z)}};
        try {
          WeakOrder w = assemble_weak_order(rel, 3);
          if (w.rel(0, 1) != x || w.rel(1, 2) != y || w.rel(2, 0) != z) {
            detail = "assembled order does not reproduce its verdicts";
            return false;
          }
          ++successes;
          seen.insert(w.str());
        } catch (const assembly_error&) {
        }
      }
    }
  }
  std::set<std::string> all_orders;
  for (const auto& w : all_weak_orders(3)) all_orders.insert(w.str());
  if (successes != 13 || seen != all_orders) {
    detail = std::to_string(successes) + " assemblies, " + std::to_string(seen.size()) +
             " distinct orders";
    return false;
  }
  detail = "13 of 27 antisymmetric assignments assemble, hitting all 13 weak orders";
  return true;
}

bool criterion_pr_cross(std::string& detail) {
  const Rule rules[] = {Rule::maskin(), Rule::borda(Rat(1)), Rule::borda(Rat(-1)), Rule::tie()};
  const Ballot ballots[] = {Ballot::condorcet(), Ballot::full(3)};
  for (const auto& ballot : ballots) {
    for (const auto& rule : rules) {
      auto rel = as_rel_evaluator(rule);
      auto report = check_pr_raw(as_swf(rule), ballot, 2, &rel);
      if (!(report.details["prm_agrees"] == true)) {
        detail = rule.describe() + " raw/profile-level verdicts disagree";
        return false;
      }
    }
  }
  detail = "4 rules x 2 ballots: raw and profile-level verdicts agree";
  return true;
}

bool criterion_ivm(std::string& detail) {
  auto g_fn = [](const RelativeProfile& a) { return maskin_g(a, Rat(2)); };
  auto lo = alpha3("0", "0", "0", "1");
  auto hi = alpha3("0", "1", "0", "0");
  if (g_fn(lo) != Rat(-6) || g_fn(hi) != Rat(3)) {
    detail = "endpoint values moved";
    return false;
  }
  Rat width = Rat::of(1, 1LL << 32);
  auto cert = ivm_bracket(g_fn, lo, hi, width);
  if (cert.width > width) {
    detail = "bracket width " + cert.width.str();
    return false;
  }
  bool certified = cert.exact ? g_fn(cert.at).is_zero()
                              : (cert.g_lo.sign() < 0 && cert.g_hi.sign() > 0);
  if (!certified) {
    detail = "certificate did not verify";
    return false;
  }
  detail = cert.exact ? ("exact zero at (" + cert.at.coords()[1].str() + " at gap 1)")
                      : ("bracket of width " + cert.width.str());
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"31-voter witness differentials", 0.001, criterion_witness31},
      {"cycle-ballot classification, n=1..12", 60.0, criterion_cc_classification},
      {"numberline solutions, l=1..12", 120.0, criterion_numberline},
      {"interaction-rule axiom suite", 10.0, criterion_axiom_suite},
      {"profile-level monotonicity, 100000 pairs", 30.0, criterion_prm},
      {"positive-support floor on the 1/64 grid", 1.0, criterion_pareto_floor},
      {"algebraic identities, 10000 profiles", 10.0, criterion_identities},
      {"ballot structure properties", 30.0, criterion_ballot_lemmas},
      {"pairwise assembler bijection", 1.0, criterion_assembler},
      {"raw/profile-level responsiveness agreement", 20.0, criterion_pr_cross},
      {"intermediate-value certificate", 0.010, criterion_ivm},
  };

  // Touch the main code paths once so the timed runs measure computation,
  // not first-use page faults.
  {
    std::string scratch;
    criterion_witness31(scratch);
    criterion_ivm(scratch);
  }

  int failures = 0;
  for (size_t t = 0; t < criteria.size(); ++t) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criteria[t].run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = seconds <= criteria[t].budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s criterion %zu: %s [%.4fs, budget %.3fs] %s%s\n", pass ? "PASS" : "FAIL", t + 1,
                criteria[t].name.c_str(), seconds, criteria[t].budget_seconds, detail.c_str(),
                ok && !in_budget ? " (over budget)" : "");
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
