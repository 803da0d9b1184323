#pragma once

#include "kelly/payoff_dist.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace kelly {

// Tagged JSON form of a payoff distribution:
//   {"type":"dirac","b":1.0}
//   {"type":"atoms","points":[[b,w],...]}
//   {"type":"uniform","lo":x,"hi":y}
//   {"type":"histogram","edges":[...],"masses":[...]}
//   {"type":"pareto","alpha":a,"xmin":x}
//   {"type":"mixture","parts":[[w,<spec>],...]}
// Parsing checks shape only; call validate() for the probability invariants.
// Malformed input throws InvalidDistribution.
PayoffDistribution dist_from_json(const nlohmann::json& spec);
PayoffDistribution parse_dist(std::string_view text);

nlohmann::json dist_to_json(const PayoffDistribution& dist);

}  // namespace kelly
