#include "orbicycle/json_io.hpp"

namespace orbicycle {

using nlohmann::json;

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) fail("BadSpec", "polynomial JSON must be an array");
  std::vector<Int> coeffs;
  coeffs.reserve(j.size());
  for (const auto& v : j) {
    if (v.is_string())
      coeffs.emplace_back(v.get<std::string>());
    else if (v.is_number_integer())
      coeffs.emplace_back(v.get<long long>());
    else
      fail("BadSpec", "polynomial coefficients must be integers or decimal strings");
  }
  return IntPoly(std::move(coeffs));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges")) fail("BadSpec", "graph JSON needs n and edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return Graph::make(j["n"].get<int>(), edges);
}

json cycle_index_to_json(const CycleIndex& z) {
  json terms = json::array();
  for (auto it = z.terms().rbegin(); it != z.terms().rend(); ++it)
    terms.push_back(json{{"coeff", it->second.str()}, {"exponents", it->first}});
  return json{{"degree", z.degree()}, {"terms", terms}};
}

json certificate_to_json(const PairCertificate& cert) {
  json edges = json::array();
  for (auto [a, b] : cert.edges) edges.push_back(json::array({a, b}));
  return json{{"n", cert.n},
              {"edges", edges},
              {"group_generators", cert.group_generators},
              {"orbital_poly", poly_to_json(cert.orbital_poly)},
              {"cycle_poly", poly_to_json(cert.cycle_poly)},
              {"edge_bound_ok", cert.edge_bound_ok},
              {"edge_lemma_ok", cert.edge_lemma_ok}};
}

PairCertificate certificate_from_json(const json& j) {
  PairCertificate cert;
  cert.n = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) cert.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  cert.group_generators = j.at("group_generators").get<std::vector<std::string>>();
  cert.orbital_poly = poly_from_json(j.at("orbital_poly"));
  cert.cycle_poly = poly_from_json(j.at("cycle_poly"));
  cert.edge_bound_ok = j.value("edge_bound_ok", true);
  cert.edge_lemma_ok = j.value("edge_lemma_ok", true);
  return cert;
}

json certificates_to_json(const std::vector<PairCertificate>& certs) {
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(certificate_to_json(c));
  return arr;
}

}  // namespace orbicycle
