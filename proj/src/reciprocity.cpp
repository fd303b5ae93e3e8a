#include "orbicycle/reciprocity.hpp"

#include <algorithm>
#include <numeric>

namespace orbicycle {

IntPoly reflected_cycle_polynomial(const PermutationGroup& g) {
  IntPoly f = cycle_polynomial(g).reflected();
  return (g.degree() % 2 == 0) ? f : -f;
}

IntPoly orbital_chromatic_polynomial(const Graph& gamma, const PermutationGroup& g) {
  if (!is_invariant(gamma, g))
    fail("NotInvariant", "graph is not invariant under the group");
  IntPoly total;
  for (const auto& e : g.elements()) {
    QuotientGraph q = quotient(gamma, e);
    if (q.has_loop) continue;
    total = total + chromatic_polynomial(q.graph);
  }
  return total;
}

long long orbit_count_proper_colorings_bruteforce(const Graph& gamma, const PermutationGroup& g,
                                                  int q) {
  if (!is_invariant(gamma, g))
    fail("NotInvariant", "graph is not invariant under the group");
  const int n = gamma.vertex_count();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > 100000) fail("TooLarge", "q^n exceeds 10^5");
  }
  // Collect proper colorings as base-q codes, then union-find under the
  // generator action within that list.
  std::vector<long long> proper;
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (long long code = 0; code < total; ++code) {
    bool ok = true;
    for (auto [a, b] : gamma.edges())
      if (color[static_cast<size_t>(a)] == color[static_cast<size_t>(b)]) {
        ok = false;
        break;
      }
    if (ok) proper.push_back(code);
    for (int i = 0; i < n; ++i) {
      if (++color[static_cast<size_t>(i)] < q) break;
      color[static_cast<size_t>(i)] = 0;
    }
  }
  std::vector<long long> weight(static_cast<size_t>(n));
  long long w = 1;
  for (int i = 0; i < n; ++i) {
    weight[static_cast<size_t>(i)] = w;
    w *= q;
  }
  std::vector<int> parent(proper.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto index_of = [&](long long code) {
    auto it = std::lower_bound(proper.begin(), proper.end(), code);
    return static_cast<int>(it - proper.begin());
  };
  for (size_t idx = 0; idx < proper.size(); ++idx) {
    long long code = proper[idx];
    std::vector<int> digits(static_cast<size_t>(n));
    long long rest = code;
    for (int i = 0; i < n; ++i) {
      digits[static_cast<size_t>(i)] = static_cast<int>(rest % q);
      rest /= q;
    }
    for (const auto& gen : g.generators()) {
      long long image = 0;
      for (int i = 0; i < n; ++i)
        image += static_cast<long long>(digits[static_cast<size_t>(i)]) *
                 weight[static_cast<size_t>(gen(i))];
      int a = find(static_cast<int>(idx)), b = find(index_of(image));
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  long long orbits = 0;
  for (size_t i = 0; i < proper.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++orbits;
  return orbits;
}

ReciprocityReport check_reciprocal(const Graph& gamma, const PermutationGroup& g,
                                   const std::string& group_label) {
  ReciprocityReport rep;
  rep.graph = gamma;
  rep.group_label = group_label;
  rep.group_order = g.order();
  rep.orbital = orbital_chromatic_polynomial(gamma, g);
  rep.reflected = reflected_cycle_polynomial(g);
  TranspositionCounts tc = transposition_counts(gamma, g);
  rep.t = tc.t;
  rep.t0 = tc.t0;
  rep.edge_lemma_holds = gamma.edge_count() == tc.t + tc.t0;
  rep.is_reciprocal = rep.orbital == rep.reflected;
  if (!rep.is_reciprocal) {
    int top = std::max(rep.orbital.degree(), rep.reflected.degree());
    for (int k = 0; k <= top; ++k)
      if (rep.orbital.coeff(k) != rep.reflected.coeff(k)) {
        rep.first_mismatch = k;
        break;
      }
  }
  return rep;
}

bool tree_equation_holds(const PermutationGroup& g) {
  IntPoly f = cycle_polynomial(g);
  RatPoly shifted = compose(RatPoly::from_int_poly(f),
                            RatPoly(std::vector<Rat>{Rat(-1), Rat(1)}));  // F(x-1)
  IntPoly f_shift = shifted.to_int_poly();
  IntPoly f_neg = f.reflected();  // F(-x)
  IntPoly lhs = IntPoly::x() * (f_shift + f_neg);
  return lhs == f_neg;
}

StarTheoremReport check_star_theorem(int k, const PermutationGroup& top, long long cap) {
  if (k < 1) fail("ArgMismatch", "check_star_theorem requires k >= 1");
  if (top.degree() != k) fail("ArgMismatch", "top group must have degree k");
  const int n = 2 * k + 1;
  Graph star = star_graph(2 * k);  // center 0, leaves 1..2k; pair j = (2j+1, 2j+2)

  std::vector<Permutation> gens;
  for (int j = 0; j < k; ++j)
    gens.push_back(Permutation::from_cycles(n, {{2 * j + 1, 2 * j + 2}}));
  for (const auto& t : top.generators()) {
    std::vector<int> img(static_cast<size_t>(n));
    img[0] = 0;
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < 2; ++i) img[static_cast<size_t>(2 * j + 1 + i)] = 2 * t(j) + 1 + i;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  PermutationGroup g = PermutationGroup::from_generators(n, std::move(gens), cap);

  StarTheoremReport rep;
  rep.k = k;
  rep.top_order = top.order();
  rep.group_order = g.order();
  rep.is_reciprocal = check_reciprocal(star, g).is_reciprocal;
  rep.eq1_holds = tree_equation_holds(g);
  return rep;
}

JoinFamilyReport check_join_family(int m, long long cap) {
  if (m < 1) fail("ArgMismatch", "check_join_family requires m >= 1");
  Graph gamma = join_graphs(complete_graph(m), null_graph(m + 1));
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::Product;
  GroupSpec left, right;
  left.kind = GroupSpec::Kind::Symmetric;
  left.n = m;
  right.kind = GroupSpec::Kind::Symmetric;
  right.n = m + 1;
  spec.parts = {left, right};
  PermutationGroup g = named_group(spec, cap);

  JoinFamilyReport rep;
  rep.m = m;
  rep.group_order = g.order();
  ReciprocityReport rr = check_reciprocal(gamma, g);
  rep.is_reciprocal = rr.is_reciprocal;

  // Displayed factorization: P = falling(m) * sum over S_{m+1} of (x-m)^c(g).
  RatPoly shifted = compose(RatPoly::from_int_poly(rising_factorial(m + 1)),
                            RatPoly(std::vector<Rat>{Rat(-m), Rat(1)}));
  IntPoly expected = falling_factorial(m) * shifted.to_int_poly();
  rep.factorization_holds = rr.orbital == expected;
  return rep;
}

bool edge_bound_filter(const Graph& gamma) {
  if (gamma.is_complete()) return true;
  const long long n = gamma.vertex_count();
  return 2ll * gamma.edge_count() <= (n - 1) * (n - 1);
}

bool star_theorem_bounds_hold(const Graph& gamma, const PermutationGroup& g) {
  const int n = gamma.vertex_count();
  if (n < 3 || n % 2 == 0) return false;
  const int center = gamma.star_center();
  if (center < 0) return false;
  const int k = (n - 1) / 2;

  // The transpositions of g must induce a perfect matching on the leaves.
  std::vector<int> mate(static_cast<size_t>(n), -1);
  long long t = 0;
  for (const auto& e : g.elements()) {
    auto pair = e.transposed_pair();
    if (!pair) continue;
    ++t;
    auto [a, b] = *pair;
    if (a == center || b == center) return false;
    if (mate[static_cast<size_t>(a)] != -1 || mate[static_cast<size_t>(b)] != -1) return false;
    mate[static_cast<size_t>(a)] = b;
    mate[static_cast<size_t>(b)] = a;
  }
  if (t != k) return false;
  for (int v = 0; v < n; ++v)
    if (v != center && mate[static_cast<size_t>(v)] == -1) return false;

  // Upper bound: every element fixes the center and permutes the pairs.
  for (const auto& e : g.elements()) {
    if (e(center) != center) return false;
    for (int v = 0; v < n; ++v)
      if (v != center && e(mate[static_cast<size_t>(v)]) != mate[static_cast<size_t>(e(v))])
        return false;
  }
  return true;
}

}  // namespace orbicycle
