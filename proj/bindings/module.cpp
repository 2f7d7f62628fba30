#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "swfcheck/certify.hpp"
#include "swfcheck/errors.hpp"
#include "swfcheck/json_io.hpp"

namespace py = pybind11;
using namespace swf;
using nlohmann::json;

namespace {

// Candidates cross this boundary 1-based, matching the c1..ck names used in
// every textual format. Rationals travel as strings, profiles and reports as
// JSON strings; the python package turns those into dicts.

int cand(int i, int k) {
  if (i < 1 || i > k) throw std::invalid_argument("candidate index out of range");
  return i - 1;
}

RelativeProfile alpha_from_strings(const std::vector<std::string>& coords) {
  if (coords.size() != 4)
    throw std::invalid_argument("expected 4 coordinates (a2, a1, a-1, a-2)");
  std::vector<Rat> parsed;
  for (const auto& c : coords) parsed.push_back(Rat::parse(c));
  return RelativeProfile::from_alpha3(parsed);
}

std::vector<std::string> alpha_to_strings(const RelativeProfile& a) {
  std::vector<std::string> out;
  for (const auto& c : a.coords()) out.push_back(c.str());
  return out;
}

Ballot ballot_from_strings(const std::vector<std::string>& rankings) {
  std::vector<Ranking> rs;
  for (const auto& text : rankings) rs.push_back(Ranking::parse(text));
  return Ballot(std::move(rs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic social welfare function toolkit";

  py::register_exception<swf::parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<swf::guard_error>(m, "GuardError", PyExc_ValueError);
  py::register_exception<swf::incompat_error>(m, "IncompatError", PyExc_ValueError);

  m.def("all_rankings", [](int k) {
    std::vector<std::string> out;
    for (const auto& r : all_rankings(k)) out.push_back(r.str());
    return out;
  });
  m.def("all_weak_orders", [](int k) {
    std::vector<std::string> out;
    for (const auto& w : all_weak_orders(k)) out.push_back(w.str());
    return out;
  });
  m.def("gap", [](const std::string& ranking, int i, int j) {
    Ranking r = Ranking::parse(ranking);
    return r.gap(cand(i, r.k()), cand(j, r.k()));
  });
  m.def("rel_of_order", [](const std::string& order, int i, int j) {
    WeakOrder w = WeakOrder::parse(order);
    return std::string(1, to_char(w.rel(cand(i, w.k()), cand(j, w.k()))));
  });
  m.def("is_consistent", [](const std::string& a, const std::string& b, const std::string& c) {
    if (a.size() != 1 || b.size() != 1 || c.size() != 1)
      throw std::invalid_argument("outcomes are single characters W, T or L");
    return is_consistent(rel_from_char(a[0]), rel_from_char(b[0]), rel_from_char(c[0]));
  });
  m.def("promotes", [](const std::string& r2, const std::string& r1, int j, int i) {
    Ranking a = Ranking::parse(r2), b = Ranking::parse(r1);
    return promotes(a, b, cand(j, a.k()), cand(i, a.k()));
  });

  m.def("full_ballot", [](int k) {
    Ballot b = Ballot::full(k);
    std::vector<std::string> out;
    for (const auto& r : b.rankings()) out.push_back(r.str());
    return out;
  });
  m.def("condorcet_ballot", []() {
    Ballot b = Ballot::condorcet();
    std::vector<std::string> out;
    for (const auto& r : b.rankings()) out.push_back(r.str());
    return out;
  });
  m.def("relative_ballot", [](const std::vector<std::string>& rankings, int i, int j) {
    Ballot b = ballot_from_strings(rankings);
    return b.relative_ballot(cand(i, b.k()), cand(j, b.k()));
  });
  m.def("is_increasing",
        [](const std::vector<std::string>& b) { return is_increasing(ballot_from_strings(b)); });
  m.def("is_intermediate",
        [](const std::vector<std::string>& b) { return is_intermediate(ballot_from_strings(b)); });
  m.def("is_separable",
        [](const std::vector<std::string>& b) { return is_separable(ballot_from_strings(b)); });

  m.def("tau", [](const std::vector<std::string>& votes) {
    std::vector<Ranking> rs;
    for (const auto& v : votes) rs.push_back(Ranking::parse(v));
    return profile_to_json(tau(FiniteElection(std::move(rs)))).dump();
  });
  m.def("normalize_profile", [](const std::string& profile) {
    return profile_to_json(normalize(profile_from_spec(profile))).dump();
  });
  m.def("project", [](const std::string& profile, int i, int j) {
    AnonymousProfile p = profile_from_spec(profile);
    return alpha_to_strings(project(p, cand(i, p.k()), cand(j, p.k())));
  });
  m.def("rho", [](const std::vector<std::string>& alpha) {
    return alpha_to_strings(rho(alpha_from_strings(alpha)));
  });
  m.def("majorizes", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return majorizes(alpha_from_strings(a), alpha_from_strings(b));
  });

  m.def("evaluate", [](const std::string& rule, const std::string& profile) {
    return evaluate(rule_from_spec(rule), profile_from_spec(profile)).str();
  });
  m.def(
      "pairwise_differential",
      [](const std::string& rule, const std::string& profile, int i,
         int j) -> std::optional<std::string> {
        AnonymousProfile p = profile_from_spec(profile);
        auto d = pairwise_differential(rule_from_spec(rule), p, cand(i, p.k()), cand(j, p.k()));
        if (!d) return std::nullopt;
        return d->str();
      });
  m.def("borda_diff", [](const std::vector<std::string>& alpha) {
    return borda_diff_unweighted(alpha_from_strings(alpha)).str();
  });
  m.def(
      "maskin_g",
      [](const std::vector<std::string>& alpha, const std::string& X) {
        return maskin_g(alpha_from_strings(alpha), Rat::parse(X)).str();
      },
      py::arg("alpha"), py::arg("X") = "2");
  m.def(
      "maskin_G",
      [](const std::string& profile, int i, const std::string& X) {
        AnonymousProfile p = profile_from_spec(profile);
        return maskin_G(p, cand(i, p.k()), Rat::parse(X)).str();
      },
      py::arg("profile"), py::arg("i"), py::arg("X") = "2");

  m.def("check_axiom", [](const std::string& rule_spec, const std::string& ballot_spec, int n,
                          const std::string& axiom) {
    Rule rule = rule_from_spec(rule_spec);
    Ballot ballot = ballot_from_spec(ballot_spec);
    auto swf_fn = as_swf(rule);
    CheckReport report;
    if (axiom == "miia") {
      report = check_miia(swf_fn, ballot, n);
    } else if (axiom == "anon") {
      report = check_anonymity(swf_fn, ballot, n);
    } else if (axiom == "neutral") {
      report = check_neutrality(swf_fn, ballot, n);
    } else if (axiom == "pareto") {
      report = check_pareto(swf_fn, ballot, n);
    } else if (axiom == "pr") {
      auto rel = as_rel_evaluator(rule);
      report = check_pr_raw(swf_fn, ballot, n, &rel);
    } else if (axiom == "prm") {
      report = check_prm_exhaustive(as_rel_evaluator(rule), ballot, n);
    } else {
      throw std::invalid_argument("unknown axiom '" + axiom + "'");
    }
    return report.to_json().dump();
  });

  m.def("check_prm_random", [](const std::string& rule_spec, int pairs, unsigned long long seed) {
    Rule rule = rule_from_spec(rule_spec);
    auto report = check_prm(as_rel_evaluator(rule), random_ordered_pairs(pairs, seed));
    return report.to_json().dump();
  });

  m.def(
      "ivm_bracket_maskin",
      [](const std::vector<std::string>& lo, const std::vector<std::string>& hi,
         const std::string& X, const std::string& width) {
        Rat x = Rat::parse(X);
        auto g_fn = [&x](const RelativeProfile& a) { return maskin_g(a, x); };
        auto cert = ivm_bracket(g_fn, alpha_from_strings(lo), alpha_from_strings(hi),
                                Rat::parse(width));
        json out{{"exact", cert.exact},
                 {"at", alpha_to_strings(cert.at)},
                 {"bracket_lo", alpha_to_strings(cert.bracket_lo)},
                 {"bracket_hi", alpha_to_strings(cert.bracket_hi)},
                 {"width", cert.width.str()},
                 {"g_lo", cert.g_lo.str()},
                 {"g_hi", cert.g_hi.str()}};
        return out.dump();
      },
      py::arg("lo"), py::arg("hi"), py::arg("X") = "2",
      py::arg("width") = "1/4294967296");

  m.def("numberline_solutions", [](int l, int m_sum) {
    json out = json::array();
    for (const auto& sol : numberline_solutions(l, m_sum)) {
      json entry{{"g", sol.g.str()}};
      if (sol.kappa)
        entry["kappa"] = *sol.kappa;
      else
        entry["kappa"] = nullptr;
      out.push_back(entry);
    }
    return out.dump();
  });

  m.def("classify_cc", [](int n, bool pareto, bool pr) {
    json out = json::array();
    for (const auto& rule : classify_cc(n, pareto, pr))
      out.push_back(json{{"label", to_string(rule.label)}, {"g", rule.g.str()}});
    return out.dump();
  });

  m.def(
      "disagreement_search",
      [](long long n, const std::string& X) -> std::optional<std::string> {
        auto witness = disagreement_search(n, Rat::parse(X));
        if (!witness) return std::nullopt;
        json out{{"alpha", witness->alpha},
                 {"g", witness->g_value.str()},
                 {"borda", witness->borda_value.str()},
                 {"profile", profile_to_json(witness->profile)}};
        return out.dump();
      },
      py::arg("n"), py::arg("X") = "2");

  m.def("weakly_borda_witness", [](const std::string& rule_spec, const std::string& w,
                                   const std::vector<std::string>& profiles)
            -> std::optional<std::string> {
    std::vector<AnonymousProfile> parsed;
    for (const auto& p : profiles) parsed.push_back(profile_from_spec(p));
    auto ce = weakly_borda_witness(rule_from_spec(rule_spec), Rat::parse(w), parsed);
    if (!ce) return std::nullopt;
    json out{{"profile", profile_to_json(ce->profile)},
             {"pair", {candidate_name(ce->i), candidate_name(ce->j)}},
             {"borda", std::string(1, to_char(ce->borda_verdict))},
             {"rule", std::string(1, to_char(ce->rule_verdict))}};
    return out.dump();
  });
}
