#ifndef ORBICYCLE_PERM_HPP
#define ORBICYCLE_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbicycle/errors.hpp"

namespace orbicycle {

inline std::size_t hash_int_vector(const std::vector<int>& v) {
  std::size_t h = 1469598103934665603ull;  // FNV-1a
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

/// A bijection on {0,...,n-1}, stored as the image array.
/// Immutable; the cycle count is computed once at construction.
class Permutation {
public:
  static Permutation identity(int n);
  static Permutation from_images(std::vector<int> images);
  // Disjoint cycles over points in [0, n); absent points are fixed.
  // Errors: RepeatedPoint, PointOutOfRange.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& rhs) const;  // (p*q)(i) = p(q(i))
  Permutation inverse() const;

  int cycle_count() const { return cycle_count_; }
  int sign() const { return ((degree() - cycle_count_) % 2 == 0) ? 1 : -1; }
  bool is_identity() const { return cycle_count_ == degree(); }

  // Cycles ordered by minimum point, each written starting at its minimum;
  // fixed points included as singletons.
  std::vector<std::vector<int>> cycles() const;
  // Entry i-1 counts the cycles of length i.
  std::vector<int> cycle_type() const;
  // The swapped pair when the permutation is a single transposition.
  std::optional<std::pair<int, int>> transposed_pair() const;

  // 1-indexed cycle notation with fixed points omitted; identity is "()".
  std::string cycle_string() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;
  int cycle_count_ = 0;

  explicit Permutation(std::vector<int> img);
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return hash_int_vector(p.images()); }
};

/// Parses "(1 2)(3 4)" (1-indexed, whitespace or commas between points).
/// "()" and "" give the identity. Errors: BadSpec, RepeatedPoint, PointOutOfRange.
Permutation parse_cycle_string(int n, const std::string& text);

}  // namespace orbicycle

#endif
