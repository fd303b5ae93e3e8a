#ifndef ORBICYCLE_GROUP_HPP
#define ORBICYCLE_GROUP_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbicycle/perm.hpp"

namespace orbicycle {

/// Finite permutation group with the element set fully enumerated.
///
/// Closure enumeration is deterministic: BFS by word length over the
/// generators, levels sorted lexicographically by image array.
class PermutationGroup {
public:
  // Errors: OrderCapExceeded when the closure passes cap.
  static PermutationGroup from_generators(int degree, std::vector<Permutation> gens,
                                          long long cap);
  // Trusted constructor for sets already known to be groups (subgroup
  // enumeration, even_subgroup). Elements are sorted lexicographically; a
  // generating set is derived greedily when none is supplied.
  static PermutationGroup from_element_set(int degree, std::vector<Permutation> elements,
                                           std::vector<Permutation> gens = {});

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elems_.size()); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& other) const;
  bool same_element_set(const PermutationGroup& other) const;

  bool has_odd_element() const;
  /// The index-<=2 subgroup of even permutations.
  PermutationGroup even_subgroup() const;

private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const { return hash_int_vector(v); }
  };
  std::unordered_map<std::vector<int>, int, VecHash> index_;

  PermutationGroup() = default;
  void build_index();
};

/// Parsed form of the group-spec grammar:
///   S5  A4  C6  D4  T3  PGL2(7)  prod(S3,C2)  wr(S3,S2)  gens(4;(1 2),(1 2 3 4))
struct GroupSpec {
  enum class Kind { Symmetric, Alternating, Cyclic, Dihedral, Trivial, PGL2, Product, Wreath, Generators };
  Kind kind = Kind::Trivial;
  int n = 1;                                    // degree parameter, or the prime for PGL2
  std::vector<GroupSpec> parts;                 // two children for Product / Wreath
  std::vector<Permutation> gens;                // Generators kind (degree n)

  std::string to_string() const;
};

/// Errors: BadSpec.
GroupSpec parse_group_spec(const std::string& text);

/// Builds the named group. Errors: NotPrime, DegreeTooSmall, OrderCapExceeded.
PermutationGroup named_group(const GroupSpec& spec, long long cap);
PermutationGroup named_group(const std::string& spec_text, long long cap);

/// Closure cap: ORBICYCLE_ORDER_CAP env override, default 10^6.
long long default_order_cap();

}  // namespace orbicycle

#endif
