#include "swfcheck/json_io.hpp"

#include <fstream>
#include <sstream>

#include "swfcheck/errors.hpp"

namespace swf {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j, const char* what) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw parse_error(std::string(what) + " must be a rational string or integer");
}

json load_spec_json(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec[0] != '{' && spec[0] != '[') {
    std::ifstream in(spec);
    if (!in) throw parse_error("cannot open file '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON in '" + spec + "'");
  return j;
}

}  // namespace

AnonymousProfile profile_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("weights"))
    throw parse_error("profile needs {\"k\": ..., \"weights\": {...}}");
  if (!j["k"].is_number_integer()) throw parse_error("profile k must be an integer");
  int k = j["k"].get<int>();
  if (k < 2 || k > 8) throw parse_error("profile k out of range [2, 8]");
  if (!j["weights"].is_object()) throw parse_error("profile weights must be an object");
  AnonymousProfile p(k);
  for (const auto& [key, value] : j["weights"].items()) {
    Ranking r = Ranking::parse(key);
    if (r.k() != k) throw parse_error("ranking '" + key + "' does not cover k=" + std::to_string(k));
    Rat w = rat_from_json(value, "profile weight");
    if (w.sign() < 0) throw parse_error("negative weight for '" + key + "'");
    p.add(r, w);
  }
  if (p.total().sign() <= 0) throw parse_error("profile has zero total weight");
  return p;
}

json profile_to_json(const AnonymousProfile& p) {
  json weights = json::object();
  for (const auto& [r, w] : p.weights()) weights[r.str()] = w.str();
  return json{{"k", p.k()}, {"weights", weights}};
}

Rule rule_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw parse_error("rule needs a \"type\" field");
  std::string type = j["type"].get<std::string>();
  try {
    if (type == "borda") return Rule::borda(rat_from_json(j.at("w"), "borda w"));
    if (type == "maskin") {
      Rat X = j.contains("X") ? rat_from_json(j["X"], "maskin X") : Rat(2);
      return Rule::maskin(X);
    }
    if (type == "tie") return Rule::tie();
    if (type == "cc-g") {
      if (!j.contains("n") || !j.at("n").is_number_integer() || !j.contains("g"))
        throw parse_error("cc-g rule needs integer \"n\" and array \"g\"");
      int n = j["n"].get<int>();
      std::vector<RelOutcome> g;
      for (const auto& entry : j["g"]) {
        std::string s = entry.get<std::string>();
        if (s.size() != 1) throw parse_error("cc-g table entries must be W, T or L");
        g.push_back(rel_from_char(s[0]));
      }
      return Rule(CondorcetG{std::move(g), n});
    }
    if (type == "weighted-borda") {
      std::vector<Rat> weights;
      for (const auto& entry : j.at("weights")) weights.push_back(rat_from_json(entry, "voter weight"));
      return Rule(WeightedBordaFinite{std::move(weights)});
    }
  } catch (const json::exception& e) {
    throw parse_error("bad rule JSON: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw parse_error("bad rule: " + std::string(e.what()));
  }
  throw parse_error("unknown rule type '" + type + "'");
}

json rule_to_json(const Rule& r) {
  if (auto* b = r.get_if<UnweightedBorda>()) return json{{"type", "borda"}, {"w", b->w.str()}};
  if (auto* wb = r.get_if<WeightedBordaFinite>()) {
    json weights = json::array();
    for (const auto& w : wb->weights) weights.push_back(w.str());
    return json{{"type", "weighted-borda"}, {"weights", weights}};
  }
  if (auto* m = r.get_if<Maskin>()) return json{{"type", "maskin"}, {"X", m->X.str()}};
  if (r.get_if<Tie>()) return json{{"type", "tie"}};
  if (auto* cg = r.get_if<CondorcetG>()) {
    json g = json::array();
    for (auto v : cg->g) g.push_back(std::string(1, to_char(v)));
    return json{{"type", "cc-g"}, {"n", cg->n}, {"g", g}};
  }
  throw std::logic_error("unknown rule variant");
}

Ballot ballot_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("ballot must be an array of ranking strings");
  std::vector<Ranking> rankings;
  for (const auto& entry : j) rankings.push_back(Ranking::parse(entry.get<std::string>()));
  try {
    return Ballot(std::move(rankings));
  } catch (const std::invalid_argument& e) {
    throw parse_error("bad ballot: " + std::string(e.what()));
  }
}

json ballot_to_json(const Ballot& b) {
  json out = json::array();
  for (const auto& r : b.rankings()) out.push_back(r.str());
  return out;
}

Rule rule_from_spec(const std::string& spec) {
  if (spec == "maskin") return Rule::maskin();
  if (spec == "tie") return Rule::tie();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon), arg = spec.substr(colon + 1);
    try {
      if (head == "borda") return Rule::borda(Rat::parse(arg));
      if (head == "maskin") return Rule::maskin(Rat::parse(arg));
    } catch (const std::invalid_argument& e) {
      throw parse_error("bad rule spec '" + spec + "': " + e.what());
    }
  }
  return rule_from_json(load_spec_json(spec));
}

Ballot ballot_from_spec(const std::string& spec) {
  if (spec == "full3") return Ballot::full(3);
  if (spec == "full4") return Ballot::full(4);
  if (spec == "cc") return Ballot::condorcet();
  return ballot_from_json(load_spec_json(spec));
}

AnonymousProfile profile_from_spec(const std::string& spec) {
  return profile_from_json(load_spec_json(spec));
}

}  // namespace swf
