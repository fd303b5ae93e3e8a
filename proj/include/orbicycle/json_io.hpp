#ifndef ORBICYCLE_JSON_IO_HPP
#define ORBICYCLE_JSON_IO_HPP

#include <json.hpp>

#include "orbicycle/cycle_index.hpp"
#include "orbicycle/graph.hpp"
#include "orbicycle/intpoly.hpp"
#include "orbicycle/search.hpp"

namespace orbicycle {

// Polynomials travel as coefficient arrays, constant term first, with big
// integers rendered as decimal strings.
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

// { "n": int, "edges": [[i, j], ...] }, 0-indexed.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json cycle_index_to_json(const CycleIndex& z);

nlohmann::json certificate_to_json(const PairCertificate& cert);
PairCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json certificates_to_json(const std::vector<PairCertificate>& certs);

}  // namespace orbicycle

#endif
