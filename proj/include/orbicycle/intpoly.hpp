#ifndef ORBICYCLE_INTPOLY_HPP
#define ORBICYCLE_INTPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "orbicycle/errors.hpp"

namespace orbicycle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored constant term first with no trailing zeros; the
/// zero polynomial is the empty list. All arithmetic and evaluation is exact.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int c);
  static IntPoly monomial(int k, Int c = 1);  // c * x^k
  static IntPoly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Int& coeff(int k) const;  // zero outside the stored range
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly scaled(const Int& s) const;
  IntPoly reflected() const;  // P(-x)

  Int eval(const Int& a) const;       // Horner
  Rat eval_rat(const Rat& a) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  // Descending powers, explicit signs: "x^4 + 2x^3 + 3x^2 + 2x", "0" if zero.
  std::string to_string(const std::string& var = "x") const;

private:
  std::vector<Int> c_;
  void trim();
};

/// Dense univariate polynomial over rationals, kept canonical by the
/// underlying cpp_rational (lowest terms, positive denominator).
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly from_int_poly(const IntPoly& p);
  static RatPoly constant(Rat c);
  static RatPoly monomial(int k, Rat c = 1);
  static RatPoly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const Rat& s) const;

  Rat eval(const Rat& a) const;

  // Succeeds iff every denominator is 1.
  IntPoly to_int_poly(const std::string& error_kind = "NonIntegralCoefficients") const;
  bool is_integral() const;

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

  std::string to_string(const std::string& var = "x") const;

private:
  std::vector<Rat> c_;
  void trim();
};

/// outer(inner), computed exactly over the rationals.
RatPoly compose(const RatPoly& outer, const RatPoly& inner);

IntPoly rising_factorial(int n);   // x(x+1)...(x+n-1); n = 0 gives 1
IntPoly falling_factorial(int n);  // x(x-1)...(x-n+1)

/// Coefficient of x^k in rising_factorial(n).
Int stirling_first_unsigned(int n, int k);

/// Largest a >= 0 with P(-1) = ... = P(-a) = 0. Throws ZeroPolynomial.
int negative_root_run(const IntPoly& p);

/// All positive a with P(-a) = 0, found exactly below the Cauchy bound.
std::vector<long long> integer_negative_roots(const IntPoly& p);

/// Factor out x^k: returns (k, q) with p = x^k * q and q(0) != 0.
std::pair<int, IntPoly> strip_zero_roots(const IntPoly& p);

}  // namespace orbicycle

#endif
