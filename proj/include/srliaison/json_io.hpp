#pragma once

#include <json.hpp>

#include "srliaison/biliaison.hpp"
#include "srliaison/edge_search.hpp"
#include "srliaison/graph.hpp"
#include "srliaison/simplicial.hpp"

namespace srl {

// --- inputs ---
// complex: {"n": 6, "facets": [[1,5,6], ...]} (1-based labels; facets are
// minimalized on load, with a warning when a listed facet was redundant)
SimplicialComplex complex_from_json(const nlohmann::json& j,
                                    std::vector<std::string>* warnings = nullptr);
nlohmann::json complex_to_json(const SimplicialComplex& dl);

// graph: {"n": 4, "edges": [[1,2], ...]} or {"circulant": [16, [1,4,8]]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// ideal: {"n": 6, "field": "Q", "gens": ["x2*x3*x4", "x1+x3", ...]}
Ideal ideal_from_json(const nlohmann::json& j);
MonomialIdeal monomial_ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const Ideal& I);
nlohmann::json monomial_ideal_to_json(const MonomialIdeal& I, Field field = Field::Q);

// witnesses
// {"n":4,"field":"Q","C":[...],"f":"x1","B":[...],"A":[...]}
BDLWitness bdl_witness_from_json(const nlohmann::json& j);
// {"n":4,"field":"Q","I":[...],"J":[...],"N":[...],"a":"x2","x":"x4"}
BiliaisonWitness biliaison_witness_from_json(const nlohmann::json& j);

// --- reports ---
nlohmann::json to_json(const ConditionResult& r);
nlohmann::json to_json(const BDLVerdict& v);
nlohmann::json to_json(const VertexBDL& v);
nlohmann::json to_json(const BiliaisonVerdict& v);
nlohmann::json to_json(const EdgeSearchResult& r);

}  // namespace srl
