#include "orbicycle/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace orbicycle {

namespace {
const Int kIntZero = 0;
const Rat kRatZero = 0;

// Shared pretty-printer; CoeffT is Int or Rat.
template <typename CoeffT>
std::string render_poly(const std::vector<CoeffT>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    const CoeffT& a = c[static_cast<size_t>(k)];
    if (a == 0) continue;
    const bool neg = a < 0;
    CoeffT mag = neg ? CoeffT(-a) : a;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag.str();
    if (k >= 1) {
      out << var;
      if (k >= 2) out << "^" << k;
    }
  }
  return first ? "0" : out.str();
}
}  // namespace

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
  std::vector<Int> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(int k, Int c) {
  if (c == 0) return IntPoly();
  std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kIntZero;
  return c_[static_cast<size_t>(k)];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) return kIntZero;
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> r = c_;
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& s) const {
  if (s == 0) return IntPoly();
  std::vector<Int> r = c_;
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::reflected() const {
  std::vector<Int> r = c_;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& a) const {
  Int acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

Rat IntPoly::eval_rat(const Rat& a) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * a + Rat(c_[i]);
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const { return render_poly(c_, var); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from_int_poly(const IntPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::constant(Rat c) {
  std::vector<Rat> v;
  if (c != 0) v.push_back(std::move(c));
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monomial(int k, Rat c) {
  if (c == 0) return RatPoly();
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v.back() = std::move(c);
  return RatPoly(std::move(v));
}

const Rat& RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kRatZero;
  return c_[static_cast<size_t>(k)];
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& s) const {
  if (s == 0) return RatPoly();
  std::vector<Rat> r = c_;
  for (auto& v : r) v *= s;
  return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& a) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

bool RatPoly::is_integral() const {
  for (const Rat& c : c_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

IntPoly RatPoly::to_int_poly(const std::string& error_kind) const {
  std::vector<Int> r;
  r.reserve(c_.size());
  for (const Rat& c : c_) {
    if (boost::multiprecision::denominator(c) != 1)
      fail(error_kind, "coefficient " + c.str() + " is not an integer");
    r.push_back(boost::multiprecision::numerator(c));
  }
  return IntPoly(std::move(r));
}

std::string RatPoly::to_string(const std::string& var) const { return render_poly(c_, var); }

RatPoly compose(const RatPoly& outer, const RatPoly& inner) {
  RatPoly acc;
  for (int k = outer.degree(); k >= 0; --k)
    acc = acc * inner + RatPoly::constant(outer.coeff(k));
  return acc;
}

IntPoly rising_factorial(int n) {
  if (n < 0) fail("ArgMismatch", "rising_factorial requires n >= 0");
  IntPoly r = IntPoly::constant(1);
  for (int i = 0; i < n; ++i) r = r * IntPoly(std::vector<Int>{Int(i), Int(1)});
  return r;
}

IntPoly falling_factorial(int n) {
  if (n < 0) fail("ArgMismatch", "falling_factorial requires n >= 0");
  IntPoly r = IntPoly::constant(1);
  for (int i = 0; i < n; ++i) r = r * IntPoly(std::vector<Int>{Int(-i), Int(1)});
  return r;
}

Int stirling_first_unsigned(int n, int k) {
  if (n < 0 || k < 0 || k > n) fail("ArgMismatch", "stirling_first_unsigned requires 0 <= k <= n");
  return rising_factorial(n).coeff(k);
}

int negative_root_run(const IntPoly& p) {
  if (p.is_zero()) fail("ZeroPolynomial", "negative_root_run of the zero polynomial");
  int a = 0;
  while (a < p.degree() && p.eval(Int(-(a + 1))) == 0) ++a;
  return a;
}

std::vector<long long> integer_negative_roots(const IntPoly& p) {
  if (p.is_zero()) fail("ZeroPolynomial", "integer roots of the zero polynomial");
  auto [k, q] = strip_zero_roots(p);
  (void)k;
  // Cauchy bound: every root z satisfies |z| <= 1 + max |c_i| / |lead|.
  Int lead = q.leading();
  if (lead < 0) lead = -lead;
  Int maxc = 0;
  for (const Int& c : q.coeffs()) {
    Int m = c < 0 ? Int(-c) : c;
    if (m > maxc) maxc = m;
  }
  Int bound = 1 + (maxc + lead - 1) / lead;
  std::vector<long long> roots;
  for (Int a = 1; a <= bound; ++a)
    if (q.eval(-a) == 0) roots.push_back(a.convert_to<long long>());
  return roots;
}

std::pair<int, IntPoly> strip_zero_roots(const IntPoly& p) {
  if (p.is_zero()) fail("ZeroPolynomial", "strip_zero_roots of the zero polynomial");
  size_t k = 0;
  while (k < p.coeffs().size() && p.coeffs()[k] == 0) ++k;
  std::vector<Int> rest(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
  return {static_cast<int>(k), IntPoly(std::move(rest))};
}

}  // namespace orbicycle
