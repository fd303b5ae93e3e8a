#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "orbicycle/json_io.hpp"
#include "orbicycle/reciprocity.hpp"
#include "orbicycle/search.hpp"

using namespace orbicycle;

namespace {
const long long kCap = 1000000;

// Independent isomorphism-class counter: orbit counting over all labeled
// graphs under the full symmetric action. Only feasible for tiny n.
int count_classes_bruteforce(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const int bits = static_cast<int>(pairs.size());
  std::set<std::uint32_t> seen;
  int classes = 0;
  std::vector<int> img(static_cast<size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    if (seen.count(mask)) continue;
    ++classes;
    std::iota(img.begin(), img.end(), 0);
    do {
      std::uint32_t relabeled = 0;
      for (int i = 0; i < bits; ++i) {
        if (!((mask >> i) & 1u)) continue;
        int a = img[static_cast<size_t>(pairs[static_cast<size_t>(i)].first)];
        int b = img[static_cast<size_t>(pairs[static_cast<size_t>(i)].second)];
        if (a > b) std::swap(a, b);
        for (int j = 0; j < bits; ++j)
          if (pairs[static_cast<size_t>(j)] == std::make_pair(a, b)) {
            relabeled |= 1u << j;
            break;
          }
      }
      seen.insert(relabeled);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  return classes;
}

// The spec's subgroup oracle: closures of all pairs of elements, then keep
// closing known subgroups with one more element until nothing new appears.
std::set<std::vector<std::string>> subgroups_bruteforce(const PermutationGroup& g) {
  auto key_of = [](const PermutationGroup& h) {
    std::vector<std::string> key;
    for (const auto& e : h.elements()) key.push_back(e.cycle_string());
    std::sort(key.begin(), key.end());
    return key;
  };
  std::map<std::vector<std::string>, PermutationGroup> found;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) {
      PermutationGroup h = PermutationGroup::from_generators(g.degree(), {a, b}, kCap);
      found.emplace(key_of(h), h);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PermutationGroup> snapshot;
    for (const auto& [key, h] : found) snapshot.push_back(h);
    for (const auto& h : snapshot)
      for (const auto& x : g.elements()) {
        if (h.contains(x)) continue;
        std::vector<Permutation> gens = h.generators();
        gens.push_back(x);
        PermutationGroup bigger = PermutationGroup::from_generators(g.degree(), gens, kCap);
        if (found.emplace(key_of(bigger), bigger).second) grew = true;
      }
  }
  std::set<std::vector<std::string>> keys;
  for (const auto& [key, h] : found) keys.insert(key);
  return keys;
}

std::vector<std::string> cert_signature(const PairCertificate& c) {
  std::vector<std::string> sig;
  sig.push_back(std::to_string(canonical_edge_key(Graph::make(c.n, c.edges))));
  for (const auto& g : c.group_generators) sig.push_back(g);
  return sig;
}
}  // namespace

TEST_CASE("canonical form is label-invariant") {
  Graph p4 = path_graph(4);
  Graph p4_relabeled = Graph::make(4, {{2, 0}, {0, 3}, {3, 1}});  // the same path 2-0-3-1
  CHECK(canonical_edge_key(p4) == canonical_edge_key(p4_relabeled));
  CHECK(canonical_form(p4) == canonical_form(p4_relabeled));
  CHECK(canonical_edge_key(cycle_graph(4)) !=
        canonical_edge_key(path_graph(4)));
  Graph c = canonical_form(build_graph("join(K2,N3)"));
  CHECK(canonical_edge_key(c) == canonical_edge_key(build_graph("join(K2,N3)")));
}

TEST_CASE("graph enumeration counts") {
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK(enumerate_graphs(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_graphs(9), Error);

  // The independent orbit count agrees at small n.
  for (int n = 2; n <= 4; ++n)
    CHECK(static_cast<int>(enumerate_graphs(n).size()) == count_classes_bruteforce(n));

  // Exactly one representative per class: keys are distinct and canonical.
  std::set<std::uint64_t> keys;
  for (const Graph& g : enumerate_graphs(5)) {
    CHECK(canonical_edge_key(g) == canonical_edge_key(canonical_form(g)));
    keys.insert(canonical_edge_key(g));
  }
  CHECK(keys.size() == 34);
}

TEST_CASE("tree enumeration counts") {
  const std::vector<size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(trees.size() == expected[static_cast<size_t>(n - 1)]);
    for (const Graph& t : trees) CHECK(t.is_tree());
  }
}

TEST_CASE("subgroup enumeration") {
  CHECK(enumerate_subgroups(named_group("S3", kCap), kCap).size() == 6);
  CHECK(enumerate_subgroups(named_group("C5", kCap), kCap).size() == 2);
  CHECK(enumerate_subgroups(named_group("C7", kCap), kCap).size() == 2);
  CHECK(enumerate_subgroups(named_group("S4", kCap), kCap).size() == 30);
  CHECK_THROWS_AS(enumerate_subgroups(named_group("S4", kCap), 10), Error);

  for (const char* spec : {"S4", "D4", "A4", "C6"}) {
    PermutationGroup g = named_group(spec, kCap);
    auto enumerated = enumerate_subgroups(g, kCap);
    std::set<std::vector<std::string>> keys;
    for (const auto& h : enumerated) {
      CHECK(h.is_subgroup_of(g));
      std::vector<std::string> key;
      for (const auto& e : h.elements()) key.push_back(e.cycle_string());
      std::sort(key.begin(), key.end());
      keys.insert(key);
    }
    CHECK(keys.size() == enumerated.size());  // deduplicated
    CHECK(keys == subgroups_bruteforce(g));
  }
}

TEST_CASE("search at n = 3 finds the expected pairs") {
  SearchConfig cfg;
  cfg.n = 3;
  SearchResult result = find_reciprocal_pairs(cfg);
  CHECK(result.skipped.empty());

  // (N3, trivial), (N3, A3), (K3, S3), (Path3, C2), and (K2 + K1, C2) which
  // is the product of (K2, S2) with an isolated fixed point.
  CHECK(result.certificates.size() == 5);
  int null_pairs = 0, one_edge_pairs = 0, complete_pairs = 0, path_pairs = 0;
  for (const auto& cert : result.certificates) {
    if (cert.edges.empty()) ++null_pairs;
    if (cert.edges.size() == 1) ++one_edge_pairs;
    if (cert.edges.size() == 3) ++complete_pairs;
    if (cert.edges.size() == 2) ++path_pairs;
    CHECK(verify_certificate(cert));
    CHECK(cert.edge_lemma_ok);
    CHECK(cert.edge_bound_ok);
  }
  CHECK(null_pairs == 2);
  CHECK(one_edge_pairs == 1);
  CHECK(complete_pairs == 1);
  CHECK(path_pairs == 1);
}

TEST_CASE("filters do not change the search results") {
  for (int n = 3; n <= 4; ++n) {
    SearchConfig with;
    with.n = n;
    SearchConfig without = with;
    without.use_edge_bound = false;
    without.use_edge_lemma = false;
    auto a = find_reciprocal_pairs(with);
    auto b = find_reciprocal_pairs(without);
    REQUIRE(a.certificates.size() == b.certificates.size());
    for (size_t i = 0; i < a.certificates.size(); ++i)
      CHECK(cert_signature(a.certificates[i]) == cert_signature(b.certificates[i]));
  }
}

TEST_CASE("search output is stable across runs and thread counts") {
  for (int n = 3; n <= 5; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    auto first = find_reciprocal_pairs(cfg);
    auto second = find_reciprocal_pairs(cfg);
    cfg.threads = 3;
    auto threaded = find_reciprocal_pairs(cfg);
    REQUIRE(first.certificates.size() == second.certificates.size());
    REQUIRE(first.certificates.size() == threaded.certificates.size());
    for (size_t i = 0; i < first.certificates.size(); ++i) {
      CHECK(cert_signature(first.certificates[i]) == cert_signature(second.certificates[i]));
      CHECK(cert_signature(first.certificates[i]) == cert_signature(threaded.certificates[i]));
    }
  }
}

TEST_CASE("search at n = 5 finds the join and exactly the star-theorem groups") {
  SearchConfig cfg;
  cfg.n = 5;
  auto result = find_reciprocal_pairs(cfg);

  // The join K2 + N3 with S2 x S3 is the unique 7-edge certificate.
  const std::uint64_t join_key = canonical_edge_key(join_graphs(complete_graph(2), null_graph(3)));
  int joins = 0;
  for (const auto& cert : result.certificates)
    if (cert.edges.size() == 7) {
      ++joins;
      Graph g = Graph::make(cert.n, cert.edges);
      CHECK(canonical_edge_key(g) == join_key);
      std::vector<Permutation> gens;
      for (const auto& s : cert.group_generators) gens.push_back(parse_cycle_string(cert.n, s));
      CHECK(PermutationGroup::from_generators(cert.n, gens, kCap).order() == 12);
    }
  CHECK(joins == 1);

  // Star certificates are exactly the groups C2 wr K of the tree theorem:
  // per leaf pairing, one group of order 4 (K trivial) and one of order 8
  // (K = S2); with 3 pairings of 4 leaves that is 6 certificates.
  const std::uint64_t star_key = canonical_edge_key(star_graph(4));
  std::multiset<long long> star_orders;
  for (const auto& cert : result.certificates) {
    Graph g = Graph::make(cert.n, cert.edges);
    if (cert.edges.size() != 4 || canonical_edge_key(g) != star_key) continue;
    std::vector<Permutation> gens;
    for (const auto& s : cert.group_generators) gens.push_back(parse_cycle_string(cert.n, s));
    PermutationGroup grp = PermutationGroup::from_generators(cert.n, gens, kCap);
    CHECK(star_theorem_bounds_hold(g, grp));
    star_orders.insert(grp.order());
  }
  CHECK(star_orders == std::multiset<long long>{4, 4, 4, 8, 8, 8});
}

TEST_CASE("certificates survive a JSON round trip") {
  SearchConfig cfg;
  cfg.n = 3;
  auto result = find_reciprocal_pairs(cfg);
  for (const auto& cert : result.certificates) {
    PairCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.n == cert.n);
    CHECK(back.edges == cert.edges);
    CHECK(back.group_generators == cert.group_generators);
    CHECK(back.orbital_poly == cert.orbital_poly);
    CHECK(back.cycle_poly == cert.cycle_poly);
    CHECK(verify_certificate(back));
  }
}

TEST_CASE("tree certificates obey the star constraints") {
  SearchConfig cfg;
  cfg.n = 5;
  for (const auto& cert : find_reciprocal_pairs(cfg).certificates) {
    Graph g = Graph::make(cert.n, cert.edges);
    if (!g.is_tree() || g.vertex_count() < 3) continue;
    CHECK(g.star_center() >= 0);
    std::vector<Permutation> gens;
    for (const auto& s : cert.group_generators) gens.push_back(parse_cycle_string(cert.n, s));
    PermutationGroup grp = PermutationGroup::from_generators(cert.n, gens, kCap);
    CHECK(star_theorem_bounds_hold(g, grp));
  }
}
