#include "orbicycle/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace orbicycle {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const { return hash_int_vector(v); }
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int primitive_root_mod(int p) {
  // p is an odd prime; the multiplicative group is cyclic of order p-1.
  std::vector<int> prime_factors;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  auto pow_mod = [p](long long b, long long e) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<int>(r);
  };
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : prime_factors)
      if (pow_mod(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail("NotPrime", "no primitive root modulo " + std::to_string(p));
}

}  // namespace

void PermutationGroup::build_index() {
  index_.clear();
  index_.reserve(elems_.size() * 2);
  for (size_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i].images(), static_cast<int>(i));
}

PermutationGroup PermutationGroup::from_generators(int degree, std::vector<Permutation> gens,
                                                   long long cap) {
  if (cap < 1) fail("OrderCapExceeded", "cap must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != degree) fail("DegreeMismatch", "generator degree differs from group degree");

  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<Permutation> level{Permutation::identity(degree)};
  seen.insert(level.front().images());
  std::vector<Permutation> elems;

  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    for (auto& p : level) elems.push_back(p);
    std::vector<Permutation> next;
    for (const auto& w : level) {
      for (const auto& g : gens) {
        Permutation c = w * g;
        if (seen.insert(c.images()).second) {
          next.push_back(std::move(c));
          if (static_cast<long long>(seen.size()) > cap)
            fail("OrderCapExceeded",
                 "closure exceeded cap " + std::to_string(cap) + " at degree " +
                     std::to_string(degree));
        }
      }
    }
    level = std::move(next);
  }

  PermutationGroup grp;
  grp.degree_ = degree;
  grp.gens_ = std::move(gens);
  grp.elems_ = std::move(elems);
  grp.build_index();
  return grp;
}

PermutationGroup PermutationGroup::from_element_set(int degree, std::vector<Permutation> elements,
                                                    std::vector<Permutation> gens) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (gens.empty()) {
    // Greedy generating set: take each element not yet reachable.
    std::unordered_set<std::vector<int>, VecHash> closure;
    closure.insert(Permutation::identity(degree).images());
    auto reclose = [&] {
      std::vector<Permutation> frontier;
      for (const auto& img : closure) frontier.push_back(Permutation::from_images(img));
      while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& w : frontier)
          for (const auto& g : gens) {
            Permutation c = w * g;
            if (closure.insert(c.images()).second) next.push_back(std::move(c));
          }
        frontier = std::move(next);
      }
    };
    for (const auto& e : elements) {
      if (closure.count(e.images())) continue;
      gens.push_back(e);
      reclose();
    }
  }
  PermutationGroup grp;
  grp.degree_ = degree;
  grp.gens_ = std::move(gens);
  grp.elems_ = std::move(elements);
  grp.build_index();
  return grp;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && index_.count(p.images()) > 0;
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_ || order() > other.order()) return false;
  for (const auto& e : elems_)
    if (!other.contains(e)) return false;
  return true;
}

bool PermutationGroup::same_element_set(const PermutationGroup& other) const {
  return degree_ == other.degree_ && order() == other.order() && is_subgroup_of(other);
}

bool PermutationGroup::has_odd_element() const {
  for (const auto& e : elems_)
    if (e.sign() < 0) return true;
  return false;
}

PermutationGroup PermutationGroup::even_subgroup() const {
  std::vector<Permutation> even;
  even.reserve(elems_.size());
  for (const auto& e : elems_)
    if (e.sign() > 0) even.push_back(e);
  return from_element_set(degree_, std::move(even));
}

namespace {

PermutationGroup build_symmetric(int n, long long cap) {
  if (n < 1) fail("DegreeTooSmall", "S(n) requires n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<int> full(static_cast<size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {full}));
  }
  return PermutationGroup::from_generators(n, std::move(gens), cap);
}

PermutationGroup build_alternating(int n, long long cap) {
  if (n < 1) fail("DegreeTooSmall", "A(n) requires n >= 1");
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermutationGroup::from_generators(n, std::move(gens), cap);
}

PermutationGroup build_cyclic(int n, long long cap) {
  if (n < 1) fail("DegreeTooSmall", "C(n) requires n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> full(static_cast<size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {full}));
  }
  return PermutationGroup::from_generators(n, std::move(gens), cap);
}

PermutationGroup build_dihedral(int n, long long cap) {
  if (n < 3) fail("DegreeTooSmall", "D(n) requires n >= 3");
  std::vector<int> rot(static_cast<size_t>(n)), refl(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<size_t>(i)] = (i + 1) % n;
    refl[static_cast<size_t>(i)] = (n - i) % n;
  }
  std::vector<Permutation> gens{Permutation::from_images(rot), Permutation::from_images(refl)};
  return PermutationGroup::from_generators(n, std::move(gens), cap);
}

// Möbius action x -> (ax+b)/(cx+d) on F_p plus infinity; infinity is point p.
PermutationGroup build_pgl2(int p, long long cap) {
  if (!is_prime(p) || p == 2) fail("NotPrime", "PGL2(p) requires an odd prime, got " + std::to_string(p));
  const int inf = p;
  auto moebius = [p, inf](long long a, long long b, long long c, long long d) {
    auto pow_mod = [p](long long base, long long e) {
      long long r = 1, x = ((base % p) + p) % p;
      while (e > 0) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
        e >>= 1;
      }
      return r;
    };
    std::vector<int> img(static_cast<size_t>(p + 1));
    for (int x = 0; x <= p; ++x) {
      long long num, den;
      if (x == inf) {
        num = a;
        den = c;
      } else {
        num = (a * x + b) % p;
        den = (c * x + d) % p;
      }
      img[static_cast<size_t>(x)] =
          (den % p == 0) ? inf : static_cast<int>(num % p * pow_mod(den, p - 2) % p);
    }
    return Permutation::from_images(std::move(img));
  };
  const int g = primitive_root_mod(p);
  std::vector<Permutation> gens{
      moebius(1, 1, 0, 1),  // x -> x + 1
      moebius(g, 0, 0, 1),  // x -> g x
      moebius(0, 1, 1, 0),  // x -> 1/x
  };
  PermutationGroup grp = PermutationGroup::from_generators(p + 1, std::move(gens), cap);
  const long long expected = static_cast<long long>(p) * (p - 1) * (p + 1);
  if (grp.order() != expected)
    fail("NotPrime", "PGL2 closure produced wrong order");  // unreachable for prime p
  return grp;
}

PermutationGroup build_product(const PermutationGroup& a, const PermutationGroup& b,
                               long long cap) {
  const int n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < a.degree(); ++i) img[static_cast<size_t>(i)] = g(i);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (const auto& g : b.generators()) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < b.degree(); ++i) img[static_cast<size_t>(a.degree() + i)] = a.degree() + g(i);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  PermutationGroup grp = PermutationGroup::from_generators(n, std::move(gens), cap);
  if (grp.order() != a.order() * b.order()) fail("OrderCapExceeded", "product closure mismatch");
  return grp;
}

// Imprimitive action on degree(g) * degree(h) points, block j = [j*n, (j+1)*n).
// Base-group generators are planted in every block so non-transitive tops
// still yield the full G^m semidirect H.
PermutationGroup build_wreath(const PermutationGroup& g, const PermutationGroup& h,
                              long long cap) {
  const int n = g.degree(), m = h.degree();
  const int nm = n * m;
  std::vector<Permutation> gens;
  for (int block = 0; block < m; ++block)
    for (const auto& s : g.generators()) {
      std::vector<int> img(static_cast<size_t>(nm));
      std::iota(img.begin(), img.end(), 0);
      for (int i = 0; i < n; ++i) img[static_cast<size_t>(block * n + i)] = block * n + s(i);
      gens.push_back(Permutation::from_images(std::move(img)));
    }
  for (const auto& t : h.generators()) {
    std::vector<int> img(static_cast<size_t>(nm));
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i) img[static_cast<size_t>(j * n + i)] = t(j) * n + i;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  PermutationGroup grp = PermutationGroup::from_generators(nm, std::move(gens), cap);
  long long expected = h.order();
  for (int j = 0; j < m; ++j) {
    expected *= g.order();
    if (expected > cap) fail("OrderCapExceeded", "wreath order exceeds cap");
  }
  if (grp.order() != expected) fail("OrderCapExceeded", "wreath closure mismatch");
  return grp;
}

}  // namespace

PermutationGroup named_group(const GroupSpec& spec, long long cap) {
  using Kind = GroupSpec::Kind;
  switch (spec.kind) {
    case Kind::Symmetric: return build_symmetric(spec.n, cap);
    case Kind::Alternating: return build_alternating(spec.n, cap);
    case Kind::Cyclic: return build_cyclic(spec.n, cap);
    case Kind::Dihedral: return build_dihedral(spec.n, cap);
    case Kind::Trivial:
      if (spec.n < 1) fail("DegreeTooSmall", "T(n) requires n >= 1");
      return PermutationGroup::from_generators(spec.n, {}, cap);
    case Kind::PGL2: return build_pgl2(spec.n, cap);
    case Kind::Product:
      return build_product(named_group(spec.parts[0], cap), named_group(spec.parts[1], cap), cap);
    case Kind::Wreath:
      return build_wreath(named_group(spec.parts[0], cap), named_group(spec.parts[1], cap), cap);
    case Kind::Generators: return PermutationGroup::from_generators(spec.n, spec.gens, cap);
  }
  fail("BadSpec", "unknown group spec kind");
}

PermutationGroup named_group(const std::string& spec_text, long long cap) {
  return named_group(parse_group_spec(spec_text), cap);
}

std::string GroupSpec::to_string() const {
  using Kind = GroupSpec::Kind;
  switch (kind) {
    case Kind::Symmetric: return "S" + std::to_string(n);
    case Kind::Alternating: return "A" + std::to_string(n);
    case Kind::Cyclic: return "C" + std::to_string(n);
    case Kind::Dihedral: return "D" + std::to_string(n);
    case Kind::Trivial: return "T" + std::to_string(n);
    case Kind::PGL2: return "PGL2(" + std::to_string(n) + ")";
    case Kind::Product: return "prod(" + parts[0].to_string() + "," + parts[1].to_string() + ")";
    case Kind::Wreath: return "wr(" + parts[0].to_string() + "," + parts[1].to_string() + ")";
    case Kind::Generators: {
      std::string s = "gens(" + std::to_string(n) + ";";
      for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        s += gens[i].cycle_string();
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

// Recursive-descent parser over a token cursor.
struct SpecCursor {
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
    if (!eat(c)) fail("BadSpec", std::string("expected '") + c + "' in spec: " + s);
  }
  int number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("BadSpec", "expected a number in spec: " + s);
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

GroupSpec parse_spec(SpecCursor& cur);

GroupSpec parse_gens(SpecCursor& cur) {
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::Generators;
  cur.expect('(');
  spec.n = cur.number();
  cur.expect(';');
  // Permutations separated by commas; each is a run of ()-cycles.
  cur.skip_ws();
  while (true) {
    std::string perm_text;
    cur.skip_ws();
    while (cur.i < cur.s.size() && cur.s[cur.i] == '(') {
      size_t close = cur.s.find(')', cur.i);
      if (close == std::string::npos) fail("BadSpec", "unterminated cycle in spec: " + cur.s);
      perm_text += cur.s.substr(cur.i, close - cur.i + 1);
      cur.i = close + 1;
      cur.skip_ws();
    }
    if (perm_text.empty()) fail("BadSpec", "expected a permutation in gens(...): " + cur.s);
    spec.gens.push_back(parse_cycle_string(spec.n, perm_text));
    if (!cur.eat(',')) break;
  }
  cur.expect(')');
  return spec;
}

GroupSpec parse_spec(SpecCursor& cur) {
  cur.skip_ws();
  GroupSpec spec;
  if (cur.match_word("PGL2")) {
    spec.kind = GroupSpec::Kind::PGL2;
    cur.expect('(');
    spec.n = cur.number();
    cur.expect(')');
    return spec;
  }
  if (cur.match_word("prod") || cur.match_word("Prod")) {
    spec.kind = GroupSpec::Kind::Product;
    cur.expect('(');
    spec.parts.push_back(parse_spec(cur));
    cur.expect(',');
    spec.parts.push_back(parse_spec(cur));
    cur.expect(')');
    return spec;
  }
  if (cur.match_word("wr") || cur.match_word("Wr")) {
    spec.kind = GroupSpec::Kind::Wreath;
    cur.expect('(');
    spec.parts.push_back(parse_spec(cur));
    cur.expect(',');
    spec.parts.push_back(parse_spec(cur));
    cur.expect(')');
    return spec;
  }
  if (cur.match_word("gens")) return parse_gens(cur);
  cur.skip_ws();
  if (cur.i < cur.s.size()) {
    char c = cur.s[cur.i];
    GroupSpec::Kind kind;
    switch (c) {
      case 'S': kind = GroupSpec::Kind::Symmetric; break;
      case 'A': kind = GroupSpec::Kind::Alternating; break;
      case 'C': kind = GroupSpec::Kind::Cyclic; break;
      case 'D': kind = GroupSpec::Kind::Dihedral; break;
      case 'T': kind = GroupSpec::Kind::Trivial; break;
      default: fail("BadSpec", "unrecognized group spec: " + cur.s);
    }
    ++cur.i;
    spec.kind = kind;
    spec.n = cur.number();
    return spec;
  }
  fail("BadSpec", "empty group spec");
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  SpecCursor cur{text};
  GroupSpec spec = parse_spec(cur);
  cur.skip_ws();
  if (cur.i != text.size()) fail("BadSpec", "trailing input in group spec: " + text);
  return spec;
}

long long default_order_cap() {
  if (const char* env = std::getenv("ORBICYCLE_ORDER_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
  }
  return 1000000;
}

}  // namespace orbicycle
