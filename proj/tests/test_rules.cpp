#include <random>

#include "doctest.h"
#include "swfcheck/errors.hpp"
#include "swfcheck/rules.hpp"

using namespace swf;

namespace {

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

// Deterministic random normalized profile over all six rankings.
AnonymousProfile random_profile(std::mt19937_64& rng) {
  auto rankings = all_rankings(3);
  long long parts[6];
  long long total = 0;
  for (auto& part : parts) {
    part = 1 + (long long)(rng() % 97);
    total += part;
  }
  AnonymousProfile p(3);
  for (size_t t = 0; t < rankings.size(); ++t) p.add(rankings[t], Rat::of(parts[t], total));
  return p;
}

RelativeProfile random_alpha(std::mt19937_64& rng) {
  long long c[3] = {(long long)(rng() % 65), (long long)(rng() % 65), (long long)(rng() % 65)};
  std::sort(c, c + 3);
  return RelativeProfile::from_alpha3(
      {Rat::of(c[0], 64), Rat::of(c[1] - c[0], 64), Rat::of(c[2] - c[1], 64), Rat::of(64 - c[2], 64)});
}

}  // namespace

TEST_SUITE_BEGIN("rules");

TEST_CASE("phi is the sign map") {
  CHECK(phi(Rat::of(3, 961)) == RelOutcome::W);
  CHECK(phi(Rat(0)) == RelOutcome::T);
  CHECK(phi(Rat::of(-1, 31)) == RelOutcome::L);
}

TEST_CASE("borda scores") {
  FiniteElection two({rk("c1>c2>c3"), rk("c1>c2>c3")});
  std::vector<Rat> unit{Rat(1), Rat(1)};
  CHECK(borda_score(unit, two, 0) == Rat(4));
  CHECK(borda_score(unit, two, 1) == Rat(2));
  CHECK(borda_score({Rat(0), Rat(0)}, two, 0) == Rat(0));

  FiniteElection mixed({rk("c1>c2>c3"), rk("c2>c3>c1")});
  CHECK(borda_score({Rat(1), Rat(2)}, mixed, 1) == Rat(5));
  CHECK_THROWS_AS(borda_score(unit, FiniteElection({rk("c1>c2>c3")}), 0), incompat_error);
}

TEST_CASE("unweighted borda differential") {
  CHECK(borda_diff_unweighted(alpha3("0", "19", "4", "8")) == Rat(-1));
  CHECK(borda_diff_unweighted(alpha3("1/4", "1/4", "1/4", "1/4")) == Rat(0));
  CHECK(borda_diff_unweighted(alpha3("1", "0", "0", "0")) == Rat(2));
}

TEST_CASE("relative interaction score at fixed points") {
  CHECK(maskin_g(alpha3("0", "19/31", "4/31", "8/31"), Rat(2)) == Rat::of(3, 961));
  CHECK(maskin_g(alpha3("1/4", "1/4", "1/4", "1/4"), Rat(2)) == Rat(0));
  CHECK(maskin_g(alpha3("0", "1", "0", "0"), Rat(2)) == Rat(3));
  CHECK(maskin_g(alpha3("1", "0", "0", "0"), Rat(2)) == Rat(6));
  CHECK(maskin_g(alpha3("0", "0", "1", "0"), Rat(2)) == Rat(-3));
  CHECK(maskin_g(alpha3("0", "0", "0", "1"), Rat(2)) == Rat(-6));
  CHECK_THROWS_AS(maskin_g(alpha3("0", "19", "4", "8"), Rat(2)), std::invalid_argument);
}

TEST_CASE("reversal antisymmetry of the interaction score") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    auto a = random_alpha(rng);
    CHECK(maskin_g(rho(a), Rat(2)) == -maskin_g(a, Rat(2)));
    CHECK(maskin_g(rho(a), Rat::of(7, 2)) == -maskin_g(a, Rat::of(7, 2)));
  }
}

TEST_CASE("full score differences factor through the pair projection") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto p = random_profile(rng);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        CHECK(maskin_G(p, i, Rat(2)) - maskin_G(p, j, Rat(2)) ==
              maskin_g(project(p, i, j), Rat(2)));
      }
  }
}

TEST_CASE("full score on the unanimous profile") {
  AnonymousProfile p(3);
  p.add(rk("c1>c2>c3"), Rat(1));
  CHECK(maskin_G(p, 0, Rat(2)) - maskin_G(p, 1, Rat(2)) == Rat(3));
}

TEST_CASE("positive-support floor of the interaction score") {
  // Over a2 + a1 = 1 the score is 3*a1^2 - 6*a1 + 6: minimum 3 at a1 = 1.
  Rat min_seen = Rat(1000);
  for (int t = 0; t <= 64; ++t) {
    auto a = RelativeProfile::from_alpha3(
        {Rat::of(64 - t, 64), Rat::of(t, 64), Rat(0), Rat(0)});
    Rat g = maskin_g(a, Rat(2));
    CHECK(g >= Rat::of(1, 2));
    if (g < min_seen) min_seen = g;
  }
  CHECK(min_seen == Rat(3));
}

TEST_CASE("exact increments along the three upward shifts") {
  // Frozen closed forms, each verified by recomputation at every point:
  //   up from a1 to a2: d*(X + 4a2 + a-1 - 2a1 + a-2) + 3d^2
  //   up from a-1 to a1: d*(2X + 2a1 + 2a-1 - a2 - a-2)
  //   up from a-2 to a-1: d*(X + a2 - 2a-1 + a1 + 4a-2) - 3d^2
  std::mt19937_64 rng(17);
  const Rat X(2);
  for (int t = 0; t < 300; ++t) {
    auto a = random_alpha(rng);
    Rat a2 = a.weight(2), a1 = a.weight(1), am1 = a.weight(-1), am2 = a.weight(-2);
    Rat base = maskin_g(a, X);

    auto shifted = [&](int src, int dst, const Rat& d) {
      RelativeProfile s = a;
      s.set(src, s.weight(src) - d);
      s.add(dst, d);
      return maskin_g(s, X);
    };

    Rat d1 = a1 / Rat(3);
    CHECK(shifted(1, 2, d1) - base ==
          d1 * (X + Rat(4) * a2 + am1 - Rat(2) * a1 + am2) + Rat(3) * d1 * d1);

    Rat d2 = am1 / Rat(5);
    CHECK(shifted(-1, 1, d2) - base ==
          d2 * (Rat(2) * X + Rat(2) * a1 + Rat(2) * am1 - a2 - am2));

    Rat d3 = am2 / Rat(7);
    CHECK(shifted(-2, -1, d3) - base ==
          d3 * (X + a2 - Rat(2) * am1 + a1 + Rat(4) * am2) - Rat(3) * d3 * d3);

    // The verdict never drops along any feasible upward shift.
    CHECK(int(phi(shifted(1, 2, d1))) >= int(phi(base)));
    CHECK(int(phi(shifted(-1, 1, d2))) >= int(phi(base)));
    CHECK(int(phi(shifted(-2, -1, d3))) >= int(phi(base)));
  }
}

TEST_CASE("rule constructors enforce their domains") {
  CHECK_THROWS_AS(Rule::maskin(Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(Rule::maskin(Rat::of(19, 10)), std::invalid_argument);
  CHECK_NOTHROW(Rule::maskin(Rat::of(5, 2)));
  CHECK_THROWS_AS(Rule(CondorcetG{{RelOutcome::W}, 3}), std::invalid_argument);
}

TEST_CASE("evaluate the basic rules") {
  AnonymousProfile unanimous(3);
  unanimous.add(rk("c1>c2>c3"), Rat(4));
  CHECK(evaluate(Rule::borda(Rat(1)), unanimous).str() == "c1>c2>c3");
  CHECK(evaluate(Rule::borda(Rat(-1)), unanimous).str() == "c3>c2>c1");
  CHECK(evaluate(Rule::tie(), unanimous).str() == "c1=c2=c3");
  CHECK(evaluate(Rule::maskin(), unanimous).str() == "c1>c2>c3");

  AnonymousProfile orbit(3);
  orbit.add(rk("c1>c2>c3"), Rat::of(1, 3));
  orbit.add(rk("c2>c3>c1"), Rat::of(1, 3));
  orbit.add(rk("c3>c1>c2"), Rat::of(1, 3));
  CHECK(evaluate(Rule::maskin(), orbit).str() == "c1=c2=c3");

  CHECK(evaluate(Rule::maskin(), witness31()).rel(0, 1) == RelOutcome::W);
  CHECK(evaluate(Rule::borda(Rat(1)), witness31()).rel(0, 1) == RelOutcome::L);

  CHECK_THROWS_AS(evaluate(Rule(WeightedBordaFinite{{Rat(1)}}), unanimous), incompat_error);
}

TEST_CASE("pairwise differentials on the witness profile") {
  auto p = witness31();
  CHECK(*pairwise_differential(Rule::maskin(), p, 0, 1) == Rat::of(3, 961));
  CHECK(*pairwise_differential(Rule::borda(Rat(1)), p, 0, 1) == Rat::of(-1, 31));
  CHECK_FALSE(pairwise_differential(Rule::tie(), p, 0, 1).has_value());
}

TEST_CASE("borda evaluation factors through pairwise projections") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    auto p = random_profile(rng);
    for (const Rat& w : {Rat(1), Rat(-1), Rat::of(3, 7)}) {
      WeakOrder result = evaluate(Rule::borda(w), p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j)
            CHECK(result.rel(i, j) == phi(w * borda_diff_unweighted(project(p, i, j))));
    }
  }
}

TEST_CASE("weighted borda on elections") {
  FiniteElection e({rk("c1>c2>c3"), rk("c3>c2>c1")});
  CHECK(evaluate_election(Rule(WeightedBordaFinite{{Rat(1), Rat(1)}}), e).str() == "c1=c2=c3");
  CHECK(evaluate_election(Rule(WeightedBordaFinite{{Rat(2), Rat(1)}}), e).str() == "c1>c2>c3");
  CHECK_THROWS_AS(evaluate_election(Rule(WeightedBordaFinite{{Rat(1)}}), e), incompat_error);
}

TEST_CASE("assembling pairwise verdicts into weak orders") {
  using Rel = std::map<std::pair<int, int>, RelOutcome>;
  auto symmetric = [](std::initializer_list<std::pair<std::pair<int, int>, RelOutcome>> entries) {
    Rel rel;
    for (const auto& [pair, v] : entries) {
      rel[pair] = v;
      rel[{pair.second, pair.first}] = negate(v);
    }
    return rel;
  };

  CHECK(assemble_weak_order(symmetric({{{0, 1}, RelOutcome::T},
                                       {{1, 2}, RelOutcome::T},
                                       {{2, 0}, RelOutcome::T}}),
                            3)
            .str() == "c1=c2=c3");
  CHECK(assemble_weak_order(symmetric({{{0, 1}, RelOutcome::W},
                                       {{1, 2}, RelOutcome::W},
                                       {{2, 0}, RelOutcome::L}}),
                            3)
            .str() == "c1>c2>c3");
  CHECK_THROWS_AS(assemble_weak_order(symmetric({{{0, 1}, RelOutcome::W},
                                                 {{1, 2}, RelOutcome::W},
                                                 {{2, 0}, RelOutcome::W}}),
                                      3),
                  assembly_error);

  Rel broken = symmetric({{{0, 1}, RelOutcome::W}, {{1, 2}, RelOutcome::W}, {{2, 0}, RelOutcome::L}});
  broken[{1, 0}] = RelOutcome::W;  // antisymmetry violation
  CHECK_THROWS_AS(assemble_weak_order(broken, 3), assembly_error);

  // Over all antisymmetric assignments exactly the 13 weak orders assemble.
  const RelOutcome vals[3] = {RelOutcome::W, RelOutcome::T, RelOutcome::L};
  int successes = 0;
  std::set<std::string> seen;
  for (RelOutcome x : vals)
    for (RelOutcome y : vals)
      for (RelOutcome z : vals) {
        auto rel = symmetric({{{0, 1}, x}, {{1, 2}, y}, {{2, 0}, z}});
        try {
          WeakOrder w = assemble_weak_order(rel, 3);
          ++successes;
          seen.insert(w.str());
          CHECK(w.rel(0, 1) == x);
          CHECK(w.rel(1, 2) == y);
          CHECK(w.rel(2, 0) == z);
        } catch (const assembly_error&) {
        }
      }
  CHECK(successes == 13);
  CHECK(seen.size() == 13);
}

TEST_CASE("assembly round-trips every weak order at k = 3 and k = 4") {
  for (int k : {3, 4}) {
    for (const auto& w : all_weak_orders(k)) {
      std::map<std::pair<int, int>, RelOutcome> rel;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j) rel[{i, j}] = w.rel(i, j);
      CHECK(assemble_weak_order(rel, k) == w);
    }
  }
}

TEST_CASE("assembly rejects four-candidate cycles through a tie clique") {
  // c1 = c2, both above c3, c3 above c4, c4 above c1: a cycle once the
  // clique {c1, c2} is contracted.
  std::map<std::pair<int, int>, RelOutcome> rel;
  auto put = [&](int i, int j, RelOutcome v) {
    rel[{i, j}] = v;
    rel[{j, i}] = negate(v);
  };
  put(0, 1, RelOutcome::T);
  put(0, 2, RelOutcome::W);
  put(1, 2, RelOutcome::W);
  put(2, 3, RelOutcome::W);
  put(3, 0, RelOutcome::W);
  put(1, 3, RelOutcome::L);
  CHECK_THROWS_AS(assemble_weak_order(rel, 4), assembly_error);
}

TEST_CASE("weak borda witness search") {
  std::vector<AnonymousProfile> profiles{witness31()};
  AnonymousProfile unanimous(3);
  unanimous.add(rk("c1>c2>c3"), Rat(1));

  // A borda rule never contradicts itself.
  CHECK_FALSE(weakly_borda_witness(Rule::borda(Rat(1)), Rat(1), profiles).has_value());

  auto against_positive = weakly_borda_witness(Rule::maskin(), Rat(1), profiles);
  REQUIRE(against_positive.has_value());
  CHECK(against_positive->i == 0);
  CHECK(against_positive->j == 1);
  CHECK(against_positive->borda_verdict == RelOutcome::L);
  CHECK(against_positive->rule_verdict == RelOutcome::W);

  auto against_negative = weakly_borda_witness(Rule::maskin(), Rat(-1), {unanimous});
  REQUIRE(against_negative.has_value());
  CHECK(against_negative->borda_verdict != against_negative->rule_verdict);

  CHECK_THROWS_AS(weakly_borda_witness(Rule::maskin(), Rat(0), profiles), std::invalid_argument);
}

TEST_CASE("disagreement search") {
  CHECK_FALSE(disagreement_search(1, Rat(2)).has_value());

  auto witness = disagreement_search(31, Rat(2));
  REQUIRE(witness.has_value());
  // Replay the postcondition: the signs really disagree.
  auto a = RelativeProfile::from_alpha3({Rat(witness->alpha[0]), Rat(witness->alpha[1]),
                                         Rat(witness->alpha[2]), Rat(witness->alpha[3])});
  Rat b = borda_diff_unweighted(a);
  Rat g = maskin_g(normalize(a), Rat(2));
  CHECK(b == witness->borda_value);
  CHECK(g == witness->g_value);
  CHECK(b.sign() != 0);
  CHECK(g.sign() != 0);
  CHECK(b.sign() != g.sign());
  // And the emitted profile projects onto the witness coordinates.
  CHECK(project(witness->profile, 0, 1) == a);
}

TEST_SUITE_END();
