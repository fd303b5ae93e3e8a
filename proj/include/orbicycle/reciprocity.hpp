#ifndef ORBICYCLE_RECIPROCITY_HPP
#define ORBICYCLE_RECIPROCITY_HPP

#include <string>

#include "orbicycle/graph.hpp"
#include "orbicycle/group_polys.hpp"

namespace orbicycle {

/// (-1)^n F_G(-x).
IntPoly reflected_cycle_polynomial(const PermutationGroup& g);

/// P_{Gamma,G}(x) = sum over g of the chromatic polynomial of Gamma/g.
/// Elements whose quotient carries a loop contribute zero and are skipped.
/// Errors: NotInvariant.
IntPoly orbital_chromatic_polynomial(const Graph& gamma, const PermutationGroup& g);

/// Independent orbit oracle: union-find over the explicitly enumerated proper
/// q-colorings (requires q^n <= 10^5). Errors: NotInvariant, TooLarge.
long long orbit_count_proper_colorings_bruteforce(const Graph& gamma, const PermutationGroup& g,
                                                  int q);

struct ReciprocityReport {
  Graph graph{0};
  std::string group_label;
  long long group_order = 0;
  IntPoly orbital;            // P_{Gamma,G}
  IntPoly reflected;          // (-1)^n F_G(-x)
  bool is_reciprocal = false;
  bool edge_lemma_holds = false;  // m == t + t0
  long long t = 0;
  long long t0 = 0;
  int first_mismatch = -1;    // smallest differing coefficient index, -1 if equal
};

/// Errors: NotInvariant.
ReciprocityReport check_reciprocal(const Graph& gamma, const PermutationGroup& g,
                                   const std::string& group_label = "");

struct StarTheoremReport {
  int k = 0;
  long long top_order = 0;    // |K|
  long long group_order = 0;  // |C2 wr K| on 2k+1 points
  bool is_reciprocal = false;
  bool eq1_holds = false;     // x(F(x-1) + F(-x)) = F(-x)
};

/// Builds the star on 2k+1 vertices with its 2k leaves paired into k blocks
/// and G = C2 wr K acting on the pairs with the center fixed, then checks
/// reciprocity and the tree functional equation, both exactly.
StarTheoremReport check_star_theorem(int k, const PermutationGroup& top, long long cap);

struct JoinFamilyReport {
  int m = 0;
  long long group_order = 0;
  bool is_reciprocal = false;
  bool factorization_holds = false;  // P = falling(m) * F_{S_{m+1}}(x - m)
};

/// Gamma = join(K_m, N_{m+1}), G = S_m x S_{m+1}.
JoinFamilyReport check_join_family(int m, long long cap);

/// Necessary condition for a reciprocal pair: complete, or m <= (n-1)^2 / 2.
bool edge_bound_filter(const Graph& gamma);

/// x(F_G(x-1) + F_G(-x)) = F_G(-x), as an exact polynomial identity.
bool tree_equation_holds(const PermutationGroup& g);

/// True iff gamma is a star on 2k+1 vertices and (C2)^k <= g <= C2 wr S_k
/// with respect to some pairing of the leaves (derived from the
/// transpositions of g).
bool star_theorem_bounds_hold(const Graph& gamma, const PermutationGroup& g);

}  // namespace orbicycle

#endif
