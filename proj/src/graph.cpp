#include "orbicycle/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace orbicycle {

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a == b) fail("BadSpec", "loops are not allowed");
    if (a < 0 || b < 0 || a >= n || b >= n) fail("BadSpec", "edge endpoint out of range");
    g.add_edge(a, b);
  }
  return g;
}

void Graph::add_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  if (has_edge(a, b)) return;
  adj_[static_cast<size_t>(a)] |= 1ull << b;
  adj_[static_cast<size_t>(b)] |= 1ull << a;
  edges_.emplace_back(a, b);
  std::sort(edges_.begin(), edges_.end());
}

int Graph::degree(int v) const {
  return __builtin_popcountll(adj_[static_cast<size_t>(v)]);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < n_; ++v)
      if ((frontier >> v) & 1u) next |= adj_[static_cast<size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1ull << n_) - 1;  // n_ <= 63, so the shift is defined
}

int Graph::star_center() const {
  if (n_ == 1) return 0;
  if (edge_count() != n_ - 1) return -1;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == n_ - 1) return v;
  return -1;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph null_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) fail("BadSpec", "Cyc(n) requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) fail("BadSpec", "Path(n) requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 0) fail("BadSpec", "Star(k) requires k >= 0");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) fail("BadSpec", "Kmulti needs at least one part");
  int n = 0;
  for (int p : parts) {
    if (p < 1) fail("BadSpec", "Kmulti part sizes must be positive");
    n += p;
  }
  Graph g(n);
  std::vector<int> part_of(static_cast<size_t>(n));
  int v = 0;
  for (size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) part_of[static_cast<size_t>(v++)] = static_cast<int>(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[static_cast<size_t>(a)] != part_of[static_cast<size_t>(b)]) g.add_edge(a, b);
  return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.vertex_count();
  Graph g(n);
  int offset = 0;
  for (const Graph& p : parts) {
    for (auto [a, b] : p.edges()) g.add_edge(offset + a, offset + b);
    offset += p.vertex_count();
  }
  return g;
}

Graph join_graphs(const Graph& a, const Graph& b) {
  Graph g = disjoint_union({a, b});
  for (int i = 0; i < a.vertex_count(); ++i)
    for (int j = 0; j < b.vertex_count(); ++j) g.add_edge(i, a.vertex_count() + j);
  return g;
}

namespace {

struct GraphCursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail("BadSpec", std::string("expected '") + c + "' in graph spec: " + s);
  }
  int number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("BadSpec", "expected a number in graph spec: " + s);
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  }
  bool match_word(const std::string& w) {
    skip_ws();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
};

Graph parse_graph(GraphCursor& cur) {
  cur.skip_ws();
  if (cur.match_word("Kmulti")) {
    cur.expect('(');
    std::vector<int> parts{cur.number()};
    while (cur.eat(',')) parts.push_back(cur.number());
    cur.expect(')');
    return complete_multipartite(parts);
  }
  if (cur.match_word("Cyc")) return cycle_graph(cur.number());
  if (cur.match_word("Path")) return path_graph(cur.number());
  if (cur.match_word("Star")) return star_graph(cur.number());
  if (cur.match_word("union")) {
    cur.expect('(');
    std::vector<Graph> parts{parse_graph(cur)};
    while (cur.eat(',')) parts.push_back(parse_graph(cur));
    cur.expect(')');
    return disjoint_union(parts);
  }
  if (cur.match_word("join")) {
    cur.expect('(');
    Graph a = parse_graph(cur);
    cur.expect(',');
    Graph b = parse_graph(cur);
    cur.expect(')');
    return join_graphs(a, b);
  }
  if (cur.match_word("edges")) {
    cur.expect('(');
    int n = cur.number();
    cur.expect(';');
    std::vector<std::pair<int, int>> edges;
    do {
      int a = cur.number();
      cur.expect('-');
      int b = cur.number();
      edges.emplace_back(a - 1, b - 1);  // 1-indexed on the wire
    } while (cur.eat(','));
    cur.expect(')');
    return Graph::make(n, edges);
  }
  if (cur.match_word("K")) return complete_graph(cur.number());
  if (cur.match_word("N")) return null_graph(cur.number());
  fail("BadSpec", "unrecognized graph spec: " + cur.s);
}

}  // namespace

Graph build_graph(const std::string& spec) {
  GraphCursor cur{spec};
  Graph g = parse_graph(cur);
  cur.skip_ws();
  if (cur.i != spec.size()) fail("BadSpec", "trailing input in graph spec: " + spec);
  return g;
}

QuotientGraph quotient(const Graph& gamma, const Permutation& g) {
  if (g.degree() != gamma.vertex_count())
    fail("DegreeMismatch", "permutation degree differs from the vertex count");
  const auto cycles = g.cycles();  // ordered by minimum element
  std::vector<int> cycle_of(static_cast<size_t>(gamma.vertex_count()));
  for (size_t c = 0; c < cycles.size(); ++c)
    for (int v : cycles[c]) cycle_of[static_cast<size_t>(v)] = static_cast<int>(c);

  QuotientGraph out{Graph(static_cast<int>(cycles.size())), false};
  for (auto [a, b] : gamma.edges()) {
    int ca = cycle_of[static_cast<size_t>(a)], cb = cycle_of[static_cast<size_t>(b)];
    if (ca == cb)
      out.has_loop = true;
    else
      out.graph.add_edge(ca, cb);
  }
  return out;
}

namespace {

IntPoly chromatic_rec(const Graph& g, std::uint64_t* nodes) {
  if (nodes) ++*nodes;
  if (g.edge_count() == 0) return IntPoly::monomial(g.vertex_count());

  // Deterministic pivot: lexicographically smallest edge incident to a
  // vertex of maximum degree.
  int maxdeg = 0;
  for (int v = 0; v < g.vertex_count(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  std::pair<int, int> pivot{-1, -1};
  for (auto e : g.edges()) {
    if (g.degree(e.first) == maxdeg || g.degree(e.second) == maxdeg) {
      pivot = e;
      break;  // edges are sorted, so the first hit is lexicographically least
    }
  }

  Graph deleted(g.vertex_count());
  for (auto e : g.edges())
    if (e != pivot) deleted.add_edge(e.first, e.second);

  // Contract pivot.second into pivot.first; higher labels shift down.
  const int keep = pivot.first, gone = pivot.second;
  Graph contracted(g.vertex_count() - 1);
  auto relabel = [keep, gone](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  for (auto e : g.edges()) {
    if (e == pivot) continue;
    int a = relabel(e.first), b = relabel(e.second);
    if (a != b) contracted.add_edge(a, b);
  }

  return chromatic_rec(deleted, nodes) - chromatic_rec(contracted, nodes);
}

}  // namespace

IntPoly chromatic_polynomial(const Graph& gamma) { return chromatic_rec(gamma, nullptr); }

IntPoly chromatic_polynomial(const QuotientGraph& q) {
  if (q.has_loop) return IntPoly::zero();
  return chromatic_rec(q.graph, nullptr);
}

IntPoly chromatic_polynomial_counted(const Graph& gamma, std::uint64_t& nodes) {
  nodes = 0;
  return chromatic_rec(gamma, &nodes);
}

long long count_proper_colorings_bruteforce(const Graph& gamma, int q) {
  if (q < 1) fail("ArgMismatch", "color count must be at least 1");
  const int n = gamma.vertex_count();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > 10000000) fail("TooLarge", "q^n exceeds 10^7");
  }
  long long count = 0;
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (long long code = 0; code < total; ++code) {
    bool proper = true;
    for (auto [a, b] : gamma.edges())
      if (color[static_cast<size_t>(a)] == color[static_cast<size_t>(b)]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    for (int i = 0; i < n; ++i) {
      if (++color[static_cast<size_t>(i)] < q) break;
      color[static_cast<size_t>(i)] = 0;
    }
  }
  return count;
}

PermutationGroup automorphism_group(const Graph& gamma) {
  const int n = gamma.vertex_count();
  if (n > 9) fail("DegreeTooLargeForBruteForce", "automorphism_group requires n <= 9");
  if (n == 0) fail("DegreeTooLargeForBruteForce", "empty graph has no permutation degree");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> elems;
  do {
    bool ok = true;
    for (auto [a, b] : gamma.edges())
      if (!gamma.has_edge(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)])) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return PermutationGroup::from_element_set(n, std::move(elems));
}

bool is_invariant(const Graph& gamma, const PermutationGroup& g) {
  if (g.degree() != gamma.vertex_count()) return false;
  for (const auto& gen : g.generators())
    for (auto [a, b] : gamma.edges())
      if (!gamma.has_edge(gen(a), gen(b))) return false;
  return true;
}

TranspositionCounts transposition_counts(const Graph& gamma, const PermutationGroup& g) {
  if (g.degree() != gamma.vertex_count())
    fail("DegreeMismatch", "group degree differs from the vertex count");
  TranspositionCounts out;
  for (const auto& e : g.elements()) {
    auto pair = e.transposed_pair();
    if (!pair) continue;
    ++out.t;
    if (!gamma.has_edge(pair->first, pair->second)) ++out.t0;
  }
  return out;
}

}  // namespace orbicycle
