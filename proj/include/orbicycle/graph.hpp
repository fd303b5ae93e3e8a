#ifndef ORBICYCLE_GRAPH_HPP
#define ORBICYCLE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbicycle/group.hpp"
#include "orbicycle/intpoly.hpp"
#include "orbicycle/perm.hpp"

namespace orbicycle {

/// Simple undirected graph on labeled vertices {0,...,n-1}.
class Graph {
public:
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > 63) fail("BadSpec", "vertex count must be in [0, 63]");
  }
  // Errors: BadSpec on loops, out-of-range endpoints.
  static Graph make(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int a, int b) const {
    return a != b && (adj_[static_cast<size_t>(a)] >> b) & 1u;
  }
  int degree(int v) const;

  bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }
  bool is_null() const { return edges_.empty(); }
  bool is_connected() const;
  bool is_tree() const { return n_ >= 1 && edge_count() == n_ - 1 && is_connected(); }
  /// Center vertex when the graph is a star (n >= 2: one vertex adjacent to
  /// all others, no other edges); n == 1 counts with center 0. Returns -1 otherwise.
  int star_center() const;

  void add_edge(int a, int b);  // builder use; ignores duplicates

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;   // sorted, i < j
  std::vector<std::uint64_t> adj_;
};

// Deterministic builders; vertex labelings documented per builder.
Graph complete_graph(int n);
Graph null_graph(int n);
Graph cycle_graph(int n);                         // n >= 3
Graph path_graph(int n);                          // vertices 0-1-...-n-1
Graph star_graph(int leaves);                     // center is vertex 0
Graph complete_multipartite(const std::vector<int>& parts);  // parts labeled consecutively
Graph disjoint_union(const std::vector<Graph>& parts);       // left block first
Graph join_graphs(const Graph& a, const Graph& b);           // left block first

/// Text grammar: K5, N4, Cyc4, Path3, Star4, Kmulti(3,3), union(K3,K3),
/// join(K2,N3), edges(4; 1-2, 2-3, 3-4) with 1-indexed endpoints.
/// Errors: BadSpec.
Graph build_graph(const std::string& spec);

/// Graph on the cycles of g; has_loop iff some cycle contains an edge.
struct QuotientGraph {
  Graph graph;
  bool has_loop = false;
};

/// Vertices of the quotient are the cycles of g sorted by minimum element.
/// Errors: DegreeMismatch.
QuotientGraph quotient(const Graph& gamma, const Permutation& g);

/// Exact chromatic polynomial by deletion-contraction. Zero polynomial for a
/// quotient with a loop. The counted variant reports recursion nodes.
IntPoly chromatic_polynomial(const Graph& gamma);
IntPoly chromatic_polynomial(const QuotientGraph& q);
IntPoly chromatic_polynomial_counted(const Graph& gamma, std::uint64_t& nodes);

/// Exhaustive proper-coloring count; requires q^n <= 10^7. Errors: TooLarge.
long long count_proper_colorings_bruteforce(const Graph& gamma, int q);

/// Full automorphism group by brute force over n! candidates (n <= 9).
/// Errors: DegreeTooLargeForBruteForce.
PermutationGroup automorphism_group(const Graph& gamma);

/// True iff every generator maps edges to edges (degree must match).
bool is_invariant(const Graph& gamma, const PermutationGroup& g);

struct TranspositionCounts {
  long long t = 0;   // transpositions in G
  long long t0 = 0;  // transpositions swapping a non-adjacent pair
};

/// Errors: DegreeMismatch.
TranspositionCounts transposition_counts(const Graph& gamma, const PermutationGroup& g);

}  // namespace orbicycle

#endif
