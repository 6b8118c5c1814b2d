#pragma once

// JSON views of the result types. Rationals become {"exact": "p/q", "approx": x}.

#include "tuza/approx.hpp"
#include "tuza/exact.hpp"
#include "tuza/graph.hpp"
#include "tuza/hardness.hpp"
#include "tuza/lp.hpp"

#include <json.hpp>

namespace tuza {

nlohmann::json rational_json(const Rational& q);
nlohmann::json edges_json(const Graph& g, const std::vector<EdgeId>& edges);

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Graph& g, const FractionalCover& cover, const TargetList& targets,
                       const EdgeClassification& classes);
nlohmann::json to_json(const Graph& g, const CoverSolution& cover);
nlohmann::json to_json(const TargetList& targets, const PackingSolution& packing);
nlohmann::json to_json(const Graph& g, const CutResult& cut);
nlohmann::json to_json(const Graph& g, const ProcessTrace& trace);
nlohmann::json to_json(const HardnessReport& report);
nlohmann::json to_json(const CaseLabel& label);
nlohmann::json to_json(const Graph& h, const BipartiteWitness& witness);
nlohmann::json to_json(const Case3Cut& cut);
nlohmann::json to_json(const MainBoundCheck& check);
nlohmann::json to_json(const RhoReport& report);

}  // namespace tuza
