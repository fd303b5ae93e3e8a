#include <doctest.h>

#include <random>

#include "orbicycle/intpoly.hpp"
#include "orbicycle/json_io.hpp"
#include "orbicycle/roots.hpp"

using namespace orbicycle;

namespace {
IntPoly ipoly(std::vector<long long> coeffs) {
  std::vector<Int> v(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  IntPoly p = ipoly({0, 1, 1});  // x^2 + x
  CHECK(p.eval(-1) == 0);
  CHECK(p.eval_rat(Rat(1, 2)) == Rat(3, 4));
  CHECK((ipoly({1, 1}) * ipoly({2, 1})) == ipoly({2, 3, 1}));  // (x+1)(x+2)
  // x(x+1)(x^2+x+2) at 1 equals 8
  IntPoly d4 = IntPoly::x() * ipoly({1, 1}) * ipoly({2, 1, 1});
  CHECK(d4.eval(1) == 8);
  CHECK(d4 == ipoly({0, 2, 3, 2, 1}));

  CHECK(IntPoly::zero().to_string() == "0");
  CHECK(d4.to_string() == "x^4 + 2x^3 + 3x^2 + 2x");
  CHECK(ipoly({1, -2, 1}).to_string() == "x^2 - 2x + 1");
  CHECK((-d4).to_string() == "-x^4 - 2x^3 - 3x^2 - 2x");
}

TEST_CASE("product and sum evaluation homomorphisms") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> pc, qc;
    for (int i = 0; i < 5; ++i) pc.emplace_back(coeff(rng));
    for (int i = 0; i < 4; ++i) qc.emplace_back(coeff(rng));
    IntPoly p{std::move(pc)}, q{std::move(qc)};
    Int a = coeff(rng);
    CHECK((p * q).eval(a) == p.eval(a) * q.eval(a));
    CHECK((p + q).eval(a) == p.eval(a) + q.eval(a));
  }
}

TEST_CASE("rising and falling factorials") {
  CHECK(rising_factorial(3) == ipoly({0, 2, 3, 1}));   // x^3 + 3x^2 + 2x
  CHECK(falling_factorial(3) == ipoly({0, 2, -3, 1}));
  CHECK(rising_factorial(0) == ipoly({1}));
  Int fact = 1;
  for (int n = 1; n <= 10; ++n) {
    fact *= n;
    CHECK(rising_factorial(n).eval(1) == fact);
    Int sum = 0;
    for (int k = 0; k <= n; ++k) sum += stirling_first_unsigned(n, k);
    CHECK(sum == fact);
  }
}

TEST_CASE("unsigned Stirling numbers of the first kind") {
  CHECK(stirling_first_unsigned(3, 2) == 3);
  CHECK(stirling_first_unsigned(5, 5) == 1);
  CHECK(stirling_first_unsigned(7, 7) == 1);
  CHECK(stirling_first_unsigned(5, 1) == 24);
}

TEST_CASE("rational composition") {
  // outer y^2 + y, inner (x^2+x)/2 -> (x^4 + 2x^3 + 3x^2 + 2x)/4
  RatPoly outer(std::vector<Rat>{0, 1, 1});
  RatPoly inner(std::vector<Rat>{0, Rat(1, 2), Rat(1, 2)});
  RatPoly got = compose(outer, inner);
  RatPoly want(std::vector<Rat>{0, Rat(1, 2), Rat(3, 4), Rat(1, 2), Rat(1, 4)});
  CHECK(got == want);

  CHECK(compose(RatPoly::x(), inner) == inner);
  RatPoly shift(std::vector<Rat>{-5, 1});  // y - 5
  RatPoly f = RatPoly::from_int_poly(rising_factorial(4));
  CHECK(compose(shift, f) == f - RatPoly::constant(5));

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Rat a(num(rng), den(rng));
    CHECK(got.eval(a) == outer.eval(inner.eval(a)));
  }
}

TEST_CASE("to_int_poly succeeds exactly when denominators are 1") {
  RatPoly integral(std::vector<Rat>{1, 2, 3});
  CHECK(integral.to_int_poly() == ipoly({1, 2, 3}));
  RatPoly halves(std::vector<Rat>{Rat(1, 2)});
  CHECK_THROWS_AS((void)halves.to_int_poly(), Error);
}

TEST_CASE("negative root runs") {
  CHECK(negative_root_run(rising_factorial(4)) == 3);
  CHECK(negative_root_run(ipoly({0, 0, 11, 0, 1})) == 0);  // x^4 + 11x^2
  CHECK_THROWS_AS(negative_root_run(IntPoly::zero()), Error);

  // Consistency with explicit evaluation just past the run.
  for (int n = 1; n <= 6; ++n) {
    IntPoly p = rising_factorial(n);
    int a = negative_root_run(p);
    for (int i = 1; i <= a; ++i) CHECK(p.eval(-i) == 0);
    CHECK(p.eval(-(a + 1)) != 0);
  }
}

TEST_CASE("integer negative roots below the Cauchy bound") {
  auto roots = integer_negative_roots(rising_factorial(5));
  CHECK(roots == std::vector<long long>{1, 2, 3, 4});
  // (x+2)(x+7) has a non-contiguous root set; both must be found.
  roots = integer_negative_roots(ipoly({14, 9, 1}));
  CHECK(roots == std::vector<long long>{2, 7});
}

TEST_CASE("strip_zero_roots") {
  auto [k, q] = strip_zero_roots(ipoly({0, 0, 11, 0, 1}));
  CHECK(k == 2);
  CHECK(q == ipoly({11, 0, 1}));
}

TEST_CASE("complex roots by Durand-Kerner") {
  // x^2 + x + 2: roots (-1 +- i sqrt(7)) / 2
  auto roots = complex_roots(ipoly({2, 1, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].re == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(roots[1].re == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(roots[0].im == doctest::Approx(-std::sqrt(7.0) / 2).epsilon(1e-9));
  CHECK(roots[1].im == doctest::Approx(std::sqrt(7.0) / 2).epsilon(1e-9));

  // x^3: triple root at the origin.
  auto triple = complex_roots(ipoly({0, 0, 0, 1}));
  REQUIRE(triple.size() == 3);
  for (const auto& r : triple) {
    CHECK(r.re == 0.0);
    CHECK(r.im == 0.0);
  }

  CHECK_THROWS_AS(complex_roots(ipoly({3})), Error);
  // An unsatisfiable residual bound surfaces as NoConvergence.
  CHECK_THROWS_AS(complex_roots(ipoly({2, 1, 1}), 0.0), Error);
}

TEST_CASE("polynomial JSON round trip") {
  IntPoly p = rising_factorial(12);
  CHECK(poly_from_json(poly_to_json(p)) == p);
  IntPoly big = ipoly({1}).scaled(Int("123456789012345678901234567890"));
  CHECK(poly_from_json(poly_to_json(big)) == big);
  CHECK(poly_to_json(IntPoly::zero()).dump() == "[]");
}
