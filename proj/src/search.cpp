#include "orbicycle/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "orbicycle/group_polys.hpp"
#include "orbicycle/reciprocity.hpp"

namespace orbicycle {

namespace {

constexpr int kMaxCanonDegree = 11;  // C(11,2) = 55 key bits

struct CanonState {
  const Graph* g = nullptr;
  int n = 0;
  std::vector<std::uint32_t> best_cols;  // column v = bits (i, v), i ascending from MSB
  std::vector<int> placed;
  std::vector<char> used;
};

// Registration DFS: keeps best_cols the lexicographic minimum over all
// assignments explored so far and prunes any branch exceeding it.
void canon_dfs(CanonState& st, int v) {
  const int n = st.n;
  if (v == n) return;
  for (int cand = 0; cand < n; ++cand) {
    if (st.used[static_cast<size_t>(cand)]) continue;
    std::uint32_t col = 0;
    for (int i = 0; i < v; ++i) {
      col <<= 1;
      col |= st.g->has_edge(st.placed[static_cast<size_t>(i)], cand) ? 1u : 0u;
    }
    if (col > st.best_cols[static_cast<size_t>(v)]) continue;
    const bool strictly_less = col < st.best_cols[static_cast<size_t>(v)];
    if (strictly_less) {
      st.best_cols[static_cast<size_t>(v)] = col;
      for (size_t w = static_cast<size_t>(v) + 1; w < st.best_cols.size(); ++w)
        st.best_cols[w] = ~0u;
    }
    st.placed[static_cast<size_t>(v)] = cand;
    st.used[static_cast<size_t>(cand)] = 1;
    canon_dfs(st, v + 1);
    st.used[static_cast<size_t>(cand)] = 0;
  }
}

std::vector<std::uint32_t> canonical_columns(const Graph& g) {
  CanonState st;
  st.g = &g;
  st.n = g.vertex_count();
  st.best_cols.assign(static_cast<size_t>(st.n), ~0u);
  st.best_cols[0] = 0;  // the first placement contributes no pair bits
  st.placed.assign(static_cast<size_t>(st.n), -1);
  st.used.assign(static_cast<size_t>(st.n), 0);
  canon_dfs(st, 0);
  return st.best_cols;
}

std::uint64_t pack_columns(int n, const std::vector<std::uint32_t>& cols) {
  std::uint64_t key = 0;
  for (int v = 1; v < n; ++v) key = (key << v) | cols[static_cast<size_t>(v)];
  return key;
}

}  // namespace

std::uint64_t canonical_edge_key(const Graph& g) {
  if (g.vertex_count() > kMaxCanonDegree)
    fail("DegreeTooLarge", "canonical form supports at most 11 vertices");
  if (g.vertex_count() <= 1) return 0;
  return pack_columns(g.vertex_count(), canonical_columns(g));
}

Graph graph_from_canonical_key(int n, std::uint64_t key) {
  Graph g(n);
  int shift = n * (n - 1) / 2;
  for (int v = 1; v < n; ++v)
    for (int i = 0; i < v; ++i) {
      --shift;
      if ((key >> shift) & 1u) g.add_edge(i, v);
    }
  return g;
}

Graph canonical_form(const Graph& g) {
  return graph_from_canonical_key(g.vertex_count(), canonical_edge_key(g));
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 8) fail("DegreeTooLarge", "enumerate_graphs requires 1 <= n <= 8");
  std::vector<std::uint64_t> all_keys;
  std::vector<std::uint64_t> level{canonical_edge_key(null_graph(n))};
  all_keys.push_back(level.front());
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (std::uint64_t key : level) {
      Graph rep = graph_from_canonical_key(n, key);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (rep.has_edge(a, b)) continue;
          Graph bigger = rep;
          bigger.add_edge(a, b);
          next.insert(canonical_edge_key(bigger));
        }
    }
    level.assign(next.begin(), next.end());
    all_keys.insert(all_keys.end(), level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(all_keys.size());
  for (std::uint64_t key : all_keys) out.push_back(graph_from_canonical_key(n, key));
  return out;
}

namespace {

// Rooted canonical encoding (sorted child encodings); tree isomorphism via
// the minimum over rootings at the center(s).
std::string rooted_encoding(const Graph& t, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v == parent || !t.has_edge(root, v)) continue;
    child_codes.push_back(rooted_encoding(t, v, root));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

std::string tree_canonical_string(const Graph& t) {
  const int n = t.vertex_count();
  if (n == 1) return "()";
  // Peel leaves to find the center(s).
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = t.degree(v);
  std::vector<int> frontier;
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] == 1) frontier.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      removed[static_cast<size_t>(v)] = 1;
      --remaining;
      for (int u = 0; u < n; ++u) {
        if (removed[static_cast<size_t>(u)] || !t.has_edge(v, u)) continue;
        if (--deg[static_cast<size_t>(u)] == 1) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  std::string best;
  for (int v = 0; v < n; ++v) {
    if (removed[static_cast<size_t>(v)]) continue;
    std::string code = rooted_encoding(t, v, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16) fail("DegreeTooLarge", "enumerate_trees requires 1 <= n <= 16");
  std::vector<Graph> reps{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& t : reps) {
      for (int v = 0; v < t.vertex_count(); ++v) {
        Graph bigger(size);
        for (auto [a, b] : t.edges()) bigger.add_edge(a, b);
        bigger.add_edge(v, size - 1);
        if (seen.insert(tree_canonical_string(bigger)).second) next.push_back(bigger);
      }
    }
    reps = std::move(next);
  }
  return reps;
}

namespace {

struct U16VecHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

constexpr long long kMultTableLimit = 5040;

// Element-id multiplication, backed by a dense table when the group is small
// enough, otherwise by composing permutations and hashing.
class IdProducts {
public:
  explicit IdProducts(const PermutationGroup& g) : g_(g) {
    const size_t n = static_cast<size_t>(g.order());
    index_.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) index_.emplace(g.elements()[i].images(), static_cast<int>(i));
    if (g.order() <= kMultTableLimit) {
      table_.resize(n * n);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          table_[a * n + b] = static_cast<std::uint16_t>(
              index_.at((g.elements()[a] * g.elements()[b]).images()));
    }
  }

  int mul(int a, int b) const {
    if (!table_.empty())
      return table_[static_cast<size_t>(a) * static_cast<size_t>(g_.order()) +
                    static_cast<size_t>(b)];
    return index_.at((g_.elements()[static_cast<size_t>(a)] *
                      g_.elements()[static_cast<size_t>(b)])
                         .images());
  }

  int index_of(const Permutation& p) const { return index_.at(p.images()); }

private:
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const { return hash_int_vector(v); }
  };
  const PermutationGroup& g_;
  std::unordered_map<std::vector<int>, int, VecHash> index_;
  std::vector<std::uint16_t> table_;
};

// scratch must be zeroed and sized to the parent order; it is restored to
// zeros before returning.
std::vector<std::uint16_t> closure_ids(const IdProducts& prod, int identity,
                                       const std::vector<std::uint16_t>& gens,
                                       std::vector<char>& scratch) {
  std::vector<std::uint16_t> members{static_cast<std::uint16_t>(identity)};
  scratch[static_cast<size_t>(identity)] = 1;
  size_t head = 0;
  while (head < members.size()) {
    std::uint16_t u = members[head++];
    for (std::uint16_t g : gens) {
      auto v = static_cast<std::uint16_t>(prod.mul(u, g));
      if (!scratch[v]) {
        scratch[v] = 1;
        members.push_back(v);
      }
    }
  }
  for (std::uint16_t m : members) scratch[m] = 0;
  std::sort(members.begin(), members.end());
  return members;
}

bool is_prime_power(size_t q) {
  if (q < 2) return false;
  for (size_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // q itself is prime
}

}  // namespace

std::vector<PermutationGroup> enumerate_subgroups(const PermutationGroup& g, long long cap) {
  if (g.order() > cap)
    fail("OrderCapExceeded", "group order " + std::to_string(g.order()) +
                                 " exceeds the subgroup enumeration cap " + std::to_string(cap));
  const int n_elems = static_cast<int>(g.order());
  IdProducts prod(g);
  const int identity = prod.index_of(Permutation::identity(g.degree()));

  // Atoms: one representative generator per cyclic subgroup. Restricting to
  // prime-power orders keeps completeness (every group is generated by its
  // elements of prime-power order) and shrinks the extension loop.
  struct Atom {
    std::uint16_t rep;
    std::vector<std::uint16_t> members;
    bool prime_power;
  };
  std::vector<Atom> atoms;
  std::vector<int> atom_of(static_cast<size_t>(n_elems), -1);
  std::unordered_map<std::vector<std::uint16_t>, int, U16VecHash> atom_index;
  for (int e = 0; e < n_elems; ++e) {
    if (e == identity) continue;
    std::vector<std::uint16_t> members{static_cast<std::uint16_t>(identity)};
    int cur = e;
    while (cur != identity) {
      members.push_back(static_cast<std::uint16_t>(cur));
      cur = prod.mul(cur, e);
    }
    std::sort(members.begin(), members.end());
    auto [it, fresh] = atom_index.emplace(members, static_cast<int>(atoms.size()));
    if (fresh)
      atoms.push_back(Atom{static_cast<std::uint16_t>(e), it->first, is_prime_power(it->first.size())});
    atom_of[static_cast<size_t>(e)] = it->second;
  }

  struct Record {
    std::vector<std::uint16_t> members;
    std::vector<std::uint16_t> gens;
  };
  std::vector<Record> found;
  std::unordered_map<std::vector<std::uint16_t>, int, U16VecHash> seen;
  found.push_back(Record{{static_cast<std::uint16_t>(identity)}, {}});
  seen.emplace(found.front().members, 0);

  std::vector<char> atom_in(atoms.size(), 0);
  std::vector<char> scratch(static_cast<size_t>(n_elems), 0);
  for (size_t i = 0; i < found.size(); ++i) {
    std::fill(atom_in.begin(), atom_in.end(), 0);
    // Copy: found may reallocate while we extend.
    const std::vector<std::uint16_t> members = found[i].members;
    const std::vector<std::uint16_t> gens = found[i].gens;
    for (std::uint16_t m : members)
      if (m != identity) atom_in[static_cast<size_t>(atom_of[m])] = 1;
    for (size_t a = 0; a < atoms.size(); ++a) {
      if (atom_in[a] || !atoms[a].prime_power) continue;
      std::vector<std::uint16_t> ext_gens = gens;
      ext_gens.push_back(atoms[a].rep);
      std::vector<std::uint16_t> closure = closure_ids(prod, identity, ext_gens, scratch);
      auto [it, fresh] = seen.emplace(std::move(closure), static_cast<int>(found.size()));
      if (fresh) found.push_back(Record{it->first, ext_gens});
    }
  }

  std::sort(found.begin(), found.end(), [](const Record& a, const Record& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });

  std::vector<PermutationGroup> out;
  out.reserve(found.size());
  for (const Record& rec : found) {
    std::vector<Permutation> elems;
    elems.reserve(rec.members.size());
    for (std::uint16_t m : rec.members) elems.push_back(g.elements()[m]);
    std::vector<Permutation> gens;
    gens.reserve(rec.gens.size());
    for (std::uint16_t m : rec.gens) gens.push_back(g.elements()[m]);
    out.push_back(PermutationGroup::from_element_set(g.degree(), std::move(elems), std::move(gens)));
  }
  return out;
}

namespace {

std::vector<std::string> generator_strings(const PermutationGroup& g) {
  std::vector<std::string> out;
  if (g.generators().empty()) {
    out.push_back("()");
    return out;
  }
  for (const auto& gen : g.generators()) out.push_back(gen.cycle_string());
  return out;
}

std::vector<PairCertificate> search_one_graph(const Graph& graph, const PermutationGroup& aut,
                                              const SearchConfig& cfg) {
  std::vector<PairCertificate> out;
  const bool bound_ok = edge_bound_filter(graph);
  if (cfg.use_edge_bound && !bound_ok) return out;
  for (const PermutationGroup& sub : enumerate_subgroups(aut, cfg.max_aut_order)) {
    if (cfg.use_edge_lemma) {
      TranspositionCounts tc = transposition_counts(graph, sub);
      if (graph.edge_count() != tc.t + tc.t0) continue;
    }
    ReciprocityReport rep = check_reciprocal(graph, sub);
    if (!rep.is_reciprocal) continue;
    PairCertificate cert;
    cert.n = graph.vertex_count();
    cert.edges = graph.edges();
    cert.group_generators = generator_strings(sub);
    cert.orbital_poly = rep.orbital;
    cert.cycle_poly = cycle_polynomial(sub);
    cert.edge_bound_ok = bound_ok;
    cert.edge_lemma_ok = rep.edge_lemma_holds;
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace

SearchResult find_reciprocal_pairs(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 8) fail("DegreeTooLarge", "search requires 1 <= n <= 8");
  if (cfg.max_aut_order < 1 || cfg.max_aut_order > 10000)
    fail("OrderCapExceeded", "max_aut_order must be in [1, 10^4]");

  const std::vector<Graph> graphs = enumerate_graphs(cfg.n);
  std::vector<std::vector<PairCertificate>> per_graph(graphs.size());
  std::vector<std::string> skipped(graphs.size());

  const int threads = std::max(1, cfg.threads);
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= graphs.size()) break;
      PermutationGroup aut = automorphism_group(graphs[i]);
      if (aut.order() > cfg.max_aut_order) {
        std::ostringstream note;
        note << "graph with " << graphs[i].edge_count() << " edges (key "
             << canonical_edge_key(graphs[i]) << "): |Aut| = " << aut.order()
             << " exceeds max_aut_order";
        skipped[i] = note.str();
        continue;
      }
      per_graph[i] = search_one_graph(graphs[i], aut, cfg);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchResult result;
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (!skipped[i].empty()) result.skipped.push_back(skipped[i]);
    for (auto& cert : per_graph[i]) result.certificates.push_back(std::move(cert));
  }
  std::sort(result.certificates.begin(), result.certificates.end(),
            [&](const PairCertificate& a, const PairCertificate& b) {
              std::uint64_t ka = canonical_edge_key(Graph::make(a.n, a.edges));
              std::uint64_t kb = canonical_edge_key(Graph::make(b.n, b.edges));
              if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
              if (ka != kb) return ka < kb;
              return a.group_generators < b.group_generators;
            });
  return result;
}

bool verify_certificate(const PairCertificate& cert) {
  Graph graph = Graph::make(cert.n, cert.edges);
  std::vector<Permutation> gens;
  for (const auto& s : cert.group_generators) gens.push_back(parse_cycle_string(cert.n, s));
  PermutationGroup g = PermutationGroup::from_generators(cert.n, std::move(gens), 1000000);
  ReciprocityReport rep = check_reciprocal(graph, g);
  return rep.is_reciprocal && rep.orbital == cert.orbital_poly &&
         cycle_polynomial(g) == cert.cycle_poly;
}

}  // namespace orbicycle
