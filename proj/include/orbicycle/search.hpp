#ifndef ORBICYCLE_SEARCH_HPP
#define ORBICYCLE_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbicycle/graph.hpp"
#include "orbicycle/group.hpp"
#include "orbicycle/intpoly.hpp"

namespace orbicycle {

/// Lexicographically smallest edge bitset over all n! relabelings (n <= 8).
/// Bit order groups the pairs (i, v) by the larger endpoint v, so the key is
/// built prefix by prefix and admits branch-and-bound minimization.
std::uint64_t canonical_edge_key(const Graph& g);
Graph graph_from_canonical_key(int n, std::uint64_t key);
Graph canonical_form(const Graph& g);

/// Exactly one representative per isomorphism class, in deterministic order
/// (edge count, then canonical key). Errors: DegreeTooLarge (n > 8).
std::vector<Graph> enumerate_graphs(int n);

/// All trees on n vertices up to isomorphism (leaf augmentation, deduplicated
/// by rooted canonical encodings at the centers). n <= 16.
std::vector<Graph> enumerate_trees(int n);

/// All subgroups of g, deduplicated by element set, by cyclic extension:
/// repeatedly close known subgroups with one additional cyclic generator
/// until a fixed point. Errors: OrderCapExceeded (|g| > cap).
std::vector<PermutationGroup> enumerate_subgroups(const PermutationGroup& g, long long cap);

struct SearchConfig {
  int n = 4;
  long long max_aut_order = 5040;
  bool use_edge_bound = true;
  bool use_edge_lemma = true;
  int threads = 1;
};

struct PairCertificate {
  int n = 0;
  std::vector<std::pair<int, int>> edges;     // canonical labeling
  std::vector<std::string> group_generators;  // 1-indexed cycle notation
  IntPoly orbital_poly;
  IntPoly cycle_poly;
  bool edge_bound_ok = true;
  bool edge_lemma_ok = true;
};

struct SearchResult {
  std::vector<PairCertificate> certificates;
  std::vector<std::string> skipped;  // graphs whose automorphism group exceeded the cap
};

/// Exhaustive reciprocal-pair search: every graph on cfg.n vertices up to
/// isomorphism, every subgroup of its automorphism group, filters first
/// (when enabled), exact check last. Deterministic output order.
SearchResult find_reciprocal_pairs(const SearchConfig& cfg);

/// Re-runs the exact check on a certificate.
bool verify_certificate(const PairCertificate& cert);

}  // namespace orbicycle

#endif
