#ifndef ORBICYCLE_CYCLE_INDEX_HPP
#define ORBICYCLE_CYCLE_INDEX_HPP

#include <map>
#include <string>
#include <vector>

#include "orbicycle/intpoly.hpp"

namespace orbicycle {

/// Sparse multivariate polynomial in s_1..s_n recording cycle types.
/// Unnormalized: one term contribution per group element, so the coefficient
/// sum equals |G|. Every monomial satisfies sum(i * e_i) = n.
class CycleIndex {
public:
  explicit CycleIndex(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  /// exps[i-1] is the exponent of s_i; enforces sum(i * e_i) = degree.
  void add_term(const std::vector<int>& exps, const Int& coeff);

  Int coefficient_sum() const;

  /// Substitutes s_i := x for all i.
  IntPoly specialize_all_equal() const;

  std::string to_string() const;  // "s1^3 + 3 s1 s2 + 2 s3"

  bool operator==(const CycleIndex& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

private:
  int degree_;
  std::map<std::vector<int>, Int> terms_;
};

}  // namespace orbicycle

#endif
