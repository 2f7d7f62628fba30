#pragma once

#include <string>

#include "json.hpp"
#include "swfcheck/ballot.hpp"
#include "swfcheck/profile.hpp"
#include "swfcheck/rules.hpp"

namespace swf {

// Profile wire format:
//   {"k": 3, "weights": {"c1>c2>c3": "19/31", "c2>c1>c3": "4/31"}}
// Weights are rational strings ("p/q" or integers); integer JSON numbers are
// also accepted. Unknown or malformed ranking keys are an error.
AnonymousProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const AnonymousProfile& p);

// Rule wire format, one of:
//   {"type":"borda","w":"1"}     {"type":"maskin","X":"2"}
//   {"type":"tie"}               {"type":"cc-g","n":5,"g":["W","W","T","L","L","L"]}
//   {"type":"weighted-borda","weights":["1","2"]}
Rule rule_from_json(const nlohmann::json& j);
nlohmann::json rule_to_json(const Rule& r);

// Ballots are arrays of ranking strings.
Ballot ballot_from_json(const nlohmann::json& j);
nlohmann::json ballot_to_json(const Ballot& b);

// Parses a rule from a compact spec ("maskin", "maskin:5/2", "borda:-1",
// "tie"), inline JSON (leading '{'), or a path to a JSON file.
Rule rule_from_spec(const std::string& spec);

// Parses a ballot from a named shorthand ("full3", "full4", "cc"), inline
// JSON, or a path to a JSON file.
Ballot ballot_from_spec(const std::string& spec);

// Reads a profile from an inline JSON string or a file path.
AnonymousProfile profile_from_spec(const std::string& spec);

}  // namespace swf
