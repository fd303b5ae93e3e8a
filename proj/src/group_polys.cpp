#include "orbicycle/group_polys.hpp"

#include <algorithm>
#include <numeric>

namespace orbicycle {

IntPoly cycle_polynomial(const PermutationGroup& g) {
  std::vector<Int> coeffs(static_cast<size_t>(g.degree()) + 1, Int(0));
  for (const auto& e : g.elements()) coeffs[static_cast<size_t>(e.cycle_count())] += 1;
  return IntPoly(std::move(coeffs));
}

CycleIndex cycle_index(const PermutationGroup& g) {
  CycleIndex z(g.degree());
  for (const auto& e : g.elements()) z.add_term(e.cycle_type(), 1);
  return z;
}

IntPoly fixed_point_polynomial(const CycleIndex& z) {
  std::vector<Int> coeffs(static_cast<size_t>(z.degree()) + 1, Int(0));
  for (const auto& [exps, coeff] : z.terms())
    coeffs[static_cast<size_t>(exps[0])] += coeff;
  return IntPoly(std::move(coeffs));
}

std::vector<Rat> parker_vector(const CycleIndex& z, const Int& order, bool conventional) {
  if (z.coefficient_sum() != order)
    fail("OrderMismatch", "coefficient sum of the cycle index does not equal the given order");
  std::vector<Rat> out(static_cast<size_t>(z.degree()), Rat(0));
  for (const auto& [exps, coeff] : z.terms())
    for (size_t k = 0; k < exps.size(); ++k)
      if (exps[k] != 0) out[k] += Rat(coeff * exps[k]);
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] /= Rat(order);
    if (conventional) out[k] *= Rat(static_cast<long long>(k + 1));
  }
  return out;
}

namespace {

long long euler_phi(long long n) {
  long long result = n, m = n;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

IntPoly cyclic_closed_form(int n) {
  if (n < 1) fail("DegreeTooSmall", "C(n) requires n >= 1");
  std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) coeffs[static_cast<size_t>(n / d)] += euler_phi(d);
  return IntPoly(std::move(coeffs));
}

IntPoly alternating_closed_form(int n) {
  if (n < 1) fail("DegreeTooSmall", "A(n) requires n >= 1");
  // Sign-splitting of the symmetric closed form: the signed cycle sum over
  // S_n equals the falling factorial, so F_A = (rising + falling)/2.
  IntPoly sum = rising_factorial(n) + falling_factorial(n);
  std::vector<Int> half;
  half.reserve(sum.coeffs().size());
  for (const Int& c : sum.coeffs()) {
    if (c % 2 != 0) fail("NoClosedForm", "alternating sign split is not integral");
    half.push_back(c / 2);
  }
  return IntPoly(std::move(half));
}

IntPoly dihedral_closed_form(int n) {
  if (n < 3) fail("DegreeTooSmall", "D(n) requires n >= 3");
  IntPoly f = cyclic_closed_form(n);
  if (n % 2 == 1) {
    f = f + IntPoly::monomial((n + 1) / 2, n);
  } else {
    f = f + IntPoly::monomial((n + 2) / 2, n / 2) + IntPoly::monomial(n / 2, n / 2);
  }
  return f;
}

IntPoly pgl2_closed_form(int p) {
  if (!is_prime_ll(p) || p == 2)
    fail("NotPrime", "PGL2(p) requires an odd prime, got " + std::to_string(p));
  const Int half_minus = Int(p) * (p - 1) / 2;
  const Int half_plus = Int(p) * (p + 1) / 2;
  IntPoly term1 = cyclic_closed_form(p + 1).scaled(half_minus);
  IntPoly term2 = (IntPoly::monomial(2) * cyclic_closed_form(p - 1)).scaled(half_plus);
  IntPoly term3 = (IntPoly::monomial(2) - IntPoly::monomial(p + 1)).scaled(Int(p) * p - 1);
  return term1 + term2 + term3;
}

}  // namespace

IntPoly closed_form(const GroupSpec& spec) {
  using Kind = GroupSpec::Kind;
  switch (spec.kind) {
    case Kind::Symmetric:
      if (spec.n < 1) fail("DegreeTooSmall", "S(n) requires n >= 1");
      return rising_factorial(spec.n);
    case Kind::Alternating: return alternating_closed_form(spec.n);
    case Kind::Cyclic: return cyclic_closed_form(spec.n);
    case Kind::Dihedral: return dihedral_closed_form(spec.n);
    case Kind::Trivial:
      if (spec.n < 1) fail("DegreeTooSmall", "T(n) requires n >= 1");
      return IntPoly::monomial(spec.n);
    case Kind::PGL2: return pgl2_closed_form(spec.n);
    case Kind::Product: return closed_form(spec.parts[0]) * closed_form(spec.parts[1]);
    case Kind::Wreath: {
      IntPoly fg = closed_form(spec.parts[0]);
      IntPoly fh = closed_form(spec.parts[1]);
      const Int g_order = fg.eval(1);  // F_G(1) = |G|
      const int m = fh.degree();
      RatPoly inner = RatPoly::from_int_poly(fg).scaled(Rat(1, g_order));
      RatPoly composed = compose(RatPoly::from_int_poly(fh), inner);
      Int scale = 1;
      for (int j = 0; j < m; ++j) scale *= g_order;
      return composed.scaled(Rat(scale)).to_int_poly("NonIntegralWreathComposition");
    }
    case Kind::Generators: fail("NoClosedForm", "gens(...) groups have no closed form");
  }
  fail("BadSpec", "unknown group spec kind");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  long long count_roots() {
    long long c = 0;
    for (size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
  }
};

}  // namespace

Int orbit_count_colorings(const PermutationGroup& g, int colors, OrbitCountMode mode) {
  if (colors < 1) fail("ArgMismatch", "color count must be at least 1");
  const int n = g.degree();
  if (mode == OrbitCountMode::Burnside) {
    Int total = cycle_polynomial(g).eval(colors);
    if (total % g.order() != 0)
      fail("NonDivisible", "Burnside sum not divisible by the group order");
    return total / g.order();
  }
  // Brute force: union-find over all colorings under the generator action.
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= colors;
    if (total > 10000000) fail("BruteforceTooLarge", "a^n exceeds 10^7");
  }
  // Point i has weight colors^i in the coloring code.
  std::vector<long long> weight(static_cast<size_t>(n));
  long long w = 1;
  for (int i = 0; i < n; ++i) {
    weight[static_cast<size_t>(i)] = w;
    w *= colors;
  }
  UnionFind uf(static_cast<size_t>(total));
  std::vector<int> digits(static_cast<size_t>(n), 0);
  for (long long code = 0; code < total; ++code) {
    for (const auto& gen : g.generators()) {
      long long image = 0;
      for (int i = 0; i < n; ++i)
        image += static_cast<long long>(digits[static_cast<size_t>(i)]) *
                 weight[static_cast<size_t>(gen(i))];
      uf.unite(static_cast<int>(code), static_cast<int>(image));
    }
    for (int i = 0; i < n; ++i) {
      if (++digits[static_cast<size_t>(i)] < colors) break;
      digits[static_cast<size_t>(i)] = 0;
    }
  }
  return Int(uf.count_roots());
}

IdentityReport check_parity(const PermutationGroup& g) {
  IdentityReport rep{"parity", true, ""};
  if (g.has_odd_element()) {
    rep.detail = "vacuous: group contains odd permutations";
    return rep;
  }
  IntPoly f = cycle_polynomial(g);
  IntPoly lhs = f.reflected();
  IntPoly rhs = (g.degree() % 2 == 0) ? f : -f;
  if (lhs != rhs) {
    rep.pass = false;
    rep.detail = "F(-x) != (-1)^n F(x): " + lhs.to_string() + " vs " + rhs.to_string();
  }
  return rep;
}

IdentityReport check_negative_run_contiguous(const PermutationGroup& g) {
  IdentityReport rep{"negative_run_contiguous", true, ""};
  IntPoly f = cycle_polynomial(g);
  int run = negative_root_run(f);
  std::vector<long long> roots = integer_negative_roots(f);
  for (long long r : roots) {
    if (r > run) {
      rep.pass = false;
      rep.detail = "root -" + std::to_string(r) + " lies outside the run {-1..-" +
                   std::to_string(run) + "}";
      return rep;
    }
  }
  if (static_cast<int>(roots.size()) != run) {
    rep.pass = false;
    rep.detail = "run length " + std::to_string(run) + " but " +
                 std::to_string(roots.size()) + " integer roots";
  }
  return rep;
}

IdentityReport check_overgroup(const PermutationGroup& g1, const PermutationGroup& g2) {
  if (g1.degree() != g2.degree()) fail("ArgMismatch", "overgroup check needs equal degrees");
  if (!g1.is_subgroup_of(g2)) fail("ArgMismatch", "first group is not contained in the second");
  IdentityReport rep{"overgroup", true, ""};
  IntPoly f2 = cycle_polynomial(g2);
  for (long long a : integer_negative_roots(cycle_polynomial(g1))) {
    if (f2.eval(Int(-a)) != 0) {
      rep.pass = false;
      rep.detail = "-" + std::to_string(a) + " is a root for the subgroup but not the overgroup";
      return rep;
    }
  }
  return rep;
}

IdentityReport check_divisibility(const PermutationGroup& g, long long lo, long long hi) {
  IdentityReport rep{"divisibility", true, ""};
  IntPoly f = cycle_polynomial(g);
  for (long long a = lo; a <= hi; ++a) {
    if (f.eval(Int(a)) % g.order() != 0) {
      rep.pass = false;
      rep.detail = "F(" + std::to_string(a) + ") not divisible by |G| = " +
                   std::to_string(g.order());
      return rep;
    }
  }
  return rep;
}

IdentityReport check_set_transitive_bound(const PermutationGroup& g) {
  IdentityReport rep{"set_transitive_bound", true, ""};
  Int value = cycle_polynomial(g).eval(2);
  Int bound = Int(g.degree() + 1) * g.order();
  if (value < bound) {
    rep.pass = false;
    rep.detail = "F(2) = " + value.str() + " < (n+1)|G| = " + bound.str();
  } else {
    rep.detail = (value == bound) ? "equality (set-transitive)" : "strict inequality";
  }
  return rep;
}

IdentityReport check_odd_theorem(const PermutationGroup& g, long long max_a) {
  IdentityReport rep{"odd_theorem", true, ""};
  if (!g.has_odd_element()) {
    rep.detail = "vacuous: group has no odd permutations";
    return rep;
  }
  IntPoly f = cycle_polynomial(g);
  const bool n_odd = g.degree() % 2 != 0;
  for (long long a = 1; a <= max_a; ++a) {
    Int reflected = f.eval(Int(-a));
    if (n_odd) reflected = -reflected;
    Int direct = f.eval(Int(a));
    if (reflected < 0 || reflected >= direct) {
      rep.pass = false;
      rep.detail = "0 <= (-1)^n F(-a) < F(a) fails at a = " + std::to_string(a);
      return rep;
    }
  }
  return rep;
}

}  // namespace orbicycle
