#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "orbicycle/group_polys.hpp"
#include "orbicycle/roots.hpp"

using namespace orbicycle;

namespace {
const long long kCap = 1000000;

IntPoly ipoly(std::vector<long long> coeffs) {
  std::vector<Int> v(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("cycle polynomial worked examples") {
  CHECK(cycle_polynomial(named_group("S3", kCap)) == ipoly({0, 2, 3, 1}));
  CHECK(cycle_polynomial(named_group("C4", kCap)) == ipoly({0, 2, 1, 0, 1}));
  CHECK(cycle_polynomial(named_group("D4", kCap)) == ipoly({0, 2, 3, 2, 1}));
  // Enumeration settles the A4 polynomial: x^4 + 11x^2.
  CHECK(cycle_polynomial(named_group("A4", kCap)) == ipoly({0, 0, 11, 0, 1}));
}

TEST_CASE("cycle polynomial shape invariants") {
  for (const char* spec : {"S4", "A5", "C7", "D6", "T4", "PGL2(3)", "wr(C2,C3)", "prod(S3,C4)"}) {
    PermutationGroup g = named_group(spec, kCap);
    IntPoly f = cycle_polynomial(g);
    CHECK(f.degree() == g.degree());
    CHECK(f.leading() == 1);
    CHECK(f.eval(0) == 0);
    CHECK(f.eval(1) == g.order());
  }
}

TEST_CASE("cycle index examples and specializations") {
  CycleIndex z3 = cycle_index(named_group("S3", kCap));
  CHECK(z3.to_string() == "s1^3 + 3 s1 s2 + 2 s3");
  CHECK(z3.coefficient_sum() == 6);

  CycleIndex triv = cycle_index(named_group("T5", kCap));
  CHECK(triv.to_string() == "s1^5");

  CycleIndex c2 = cycle_index(named_group("C2", kCap));
  CHECK(c2.to_string() == "s1^2 + s2");

  CHECK(fixed_point_polynomial(z3) == ipoly({2, 3, 0, 1}));
  CHECK(fixed_point_polynomial(triv) == ipoly({0, 0, 0, 0, 0, 1}));
  CHECK(fixed_point_polynomial(c2) == ipoly({1, 0, 1}));
}

TEST_CASE("specializing every variable to x recovers the cycle polynomial") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> deg(3, 6);
  for (int trial = 0; trial < 20; ++trial) {
    int n = deg(rng);
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Permutation::from_images(img));
    }
    PermutationGroup g = PermutationGroup::from_generators(n, std::move(gens), kCap);
    CHECK(cycle_index(g).specialize_all_equal() == cycle_polynomial(g));
  }
}

TEST_CASE("Parker vectors") {
  PermutationGroup s3 = named_group("S3", kCap);
  auto literal = parker_vector(cycle_index(s3), s3.order());
  CHECK(literal == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 3)});
  auto conventional = parker_vector(cycle_index(s3), s3.order(), true);
  CHECK(conventional == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

  PermutationGroup triv = named_group("T4", kCap);
  CHECK(parker_vector(cycle_index(triv), 1) == std::vector<Rat>{Rat(4), Rat(0), Rat(0), Rat(0)});

  PermutationGroup c2 = named_group("C2", kCap);
  CHECK(parker_vector(cycle_index(c2), 2) == std::vector<Rat>{Rat(1), Rat(1, 2)});

  CHECK_THROWS_AS(parker_vector(cycle_index(s3), 7), Error);
}

TEST_CASE("closed forms match enumeration") {
  for (const char* text : {"S4", "S6", "A4", "A6", "C6", "C12", "D4", "D7", "T5", "PGL2(3)",
                           "PGL2(5)", "prod(S3,C2)", "wr(C2,C2)", "wr(S3,S2)", "wr(C3,C3)",
                           "wr(C2,wr(C2,C2))", "prod(wr(C2,C2),S3)", "wr(prod(C2,C2),S2)"}) {
    GroupSpec spec = parse_group_spec(text);
    CHECK(closed_form(spec) == cycle_polynomial(named_group(spec, kCap)));
  }
}

TEST_CASE("closed form fixed values") {
  CHECK(closed_form(parse_group_spec("PGL2(3)")) == rising_factorial(4));
  CHECK(closed_form(parse_group_spec("wr(C2,C2)")) == ipoly({0, 2, 3, 2, 1}));
  CHECK(closed_form(parse_group_spec("C6")) == ipoly({0, 2, 2, 1, 0, 0, 1}));
  CHECK_THROWS_AS(closed_form(parse_group_spec("gens(3;(1 2))")), Error);
}

TEST_CASE("orbit counting, Burnside vs brute force") {
  CHECK(orbit_count_colorings(named_group("S3", kCap), 2, OrbitCountMode::BruteForce) == 4);
  CHECK(orbit_count_colorings(named_group("T2", kCap), 3, OrbitCountMode::BruteForce) == 9);
  for (const char* spec : {"S3", "S4", "A4", "C4", "C6", "D4", "D5", "T2", "PGL2(3)",
                           "wr(C2,C2)", "prod(C2,C3)"}) {
    PermutationGroup g = named_group(spec, kCap);
    for (int a = 1; a <= 3; ++a) {
      double size = std::pow(double(a), g.degree());
      if (size > 1e5) continue;
      CHECK(orbit_count_colorings(g, a, OrbitCountMode::Burnside) ==
            orbit_count_colorings(g, a, OrbitCountMode::BruteForce));
    }
    CHECK(orbit_count_colorings(g, 1, OrbitCountMode::Burnside) == 1);
  }
}

TEST_CASE("parity identity for groups without odd permutations") {
  for (const char* spec : {"A3", "A4", "A5", "A6", "C3", "C5", "D5", "wr(C3,C3)"}) {
    PermutationGroup g = named_group(spec, kCap);
    CHECK_FALSE(g.has_odd_element());
    CHECK(check_parity(g).pass);
    // Coefficients vanish in degrees of the wrong parity.
    IntPoly f = cycle_polynomial(g);
    for (int k = 0; k <= f.degree(); ++k)
      if ((g.degree() - k) % 2 != 0) CHECK(f.coeff(k) == 0);
  }
}

TEST_CASE("negative run and overgroup identities") {
  for (const char* spec : {"S2", "S3", "S4", "S5", "D4", "C4", "wr(S3,S2)", "PGL2(3)"}) {
    PermutationGroup g = named_group(spec, kCap);
    CHECK(g.has_odd_element());
    CHECK(check_negative_run_contiguous(g).pass);
    CHECK(check_odd_theorem(g).pass);
  }
  CHECK(check_overgroup(named_group("C4", kCap), named_group("D4", kCap)).pass);
  CHECK(check_overgroup(named_group("D4", kCap), named_group("S4", kCap)).pass);
  CHECK_THROWS_AS(check_overgroup(named_group("S3", kCap), named_group("S4", kCap)), Error);
}

TEST_CASE("divisibility and the set-transitive bound") {
  for (const char* spec : {"S4", "A4", "C6", "D4", "PGL2(3)", "wr(C2,C3)"})
    CHECK(check_divisibility(named_group(spec, kCap)).pass);

  IdentityReport s3 = check_set_transitive_bound(named_group("S3", kCap));
  CHECK(s3.pass);
  CHECK(s3.detail == "equality (set-transitive)");
  CHECK(cycle_polynomial(named_group("S3", kCap)).eval(2) == 24);

  IdentityReport pgl5 = check_set_transitive_bound(named_group("PGL2(5)", kCap));
  CHECK(pgl5.pass);
  CHECK(pgl5.detail == "equality (set-transitive)");
  CHECK(cycle_polynomial(named_group("PGL2(5)", kCap)).eval(2) == 840);

  IdentityReport c6 = check_set_transitive_bound(named_group("C6", kCap));
  CHECK(c6.pass);
  CHECK(c6.detail == "strict inequality");
}

TEST_CASE("imprimitive groups acquire arbitrarily large negative roots") {
  // F_C3(2)/3 = 4, so the wreath with S5 (5 > 4) vanishes at -2.
  PermutationGroup c3 = named_group("C3", kCap);
  Int k = cycle_polynomial(c3).eval(2) / c3.order();
  CHECK(k == 4);
  IntPoly f = closed_form(parse_group_spec("wr(C3,S5)"));
  CHECK(f.eval(-2) == 0);
  CHECK(cycle_polynomial(named_group("wr(C3,S5)", kCap)) == f);
}

TEST_CASE("alternating root locus stays on the imaginary axis at small degree") {
  for (int n = 3; n <= 6; ++n) {
    GroupSpec spec = parse_group_spec("A" + std::to_string(n));
    for (const RootApprox& r : complex_roots(closed_form(spec)))
      CHECK(std::fabs(r.re) < 1e-8);
  }
}
