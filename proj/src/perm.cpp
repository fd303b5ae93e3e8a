#include "orbicycle/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace orbicycle {

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++cycle_count_;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      j = img_[static_cast<size_t>(j)];
    }
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) fail("PointOutOfRange", "degree must be at least 1");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) fail("PointOutOfRange", "degree must be at least 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images) {
    if (v < 0 || v >= n) fail("PointOutOfRange", "image " + std::to_string(v) + " out of range");
    if (seen[static_cast<size_t>(v)]) fail("RepeatedPoint", "image array is not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 1) fail("PointOutOfRange", "degree must be at least 1");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (const auto& cyc : cycles) {
    for (int p : cyc) {
      if (p < 0 || p >= n) fail("PointOutOfRange", "point " + std::to_string(p) + " out of range");
      if (used[static_cast<size_t>(p)])
        fail("RepeatedPoint", "point " + std::to_string(p) + " appears twice");
      used[static_cast<size_t>(p)] = 1;
    }
    if (cyc.size() < 2) continue;
    for (size_t i = 0; i < cyc.size(); ++i)
      img[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) fail("DegreeMismatch", "composing permutations of different degree");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    img[i] = img_[static_cast<size_t>(rhs.img_[i])];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      cyc.push_back(j);
      j = img_[static_cast<size_t>(j)];
    }
    out.push_back(std::move(cyc));
  }
  return out;  // outer loop visits minima in increasing order
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type(static_cast<size_t>(degree()), 0);
  for (const auto& cyc : cycles()) ++type[cyc.size() - 1];
  return type;
}

std::optional<std::pair<int, int>> Permutation::transposed_pair() const {
  if (cycle_count_ != degree() - 1 || is_identity()) return std::nullopt;
  int a = -1, b = -1;
  for (int i = 0; i < degree(); ++i) {
    if (img_[static_cast<size_t>(i)] != i) {
      if (a < 0)
        a = i;
      else
        b = i;
    }
  }
  return std::make_pair(a, b);
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cyc : cycles()) {
    if (cyc.size() < 2) continue;
    any = true;
    out << "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << " ";
      out << cyc[i] + 1;
    }
    out << ")";
  }
  return any ? out.str() : "()";
}

Permutation parse_cycle_string(int n, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("BadSpec", "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("BadSpec", "expected point number in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v - 1);  // 1-indexed on the wire
      skip_ws();
    }
    if (i >= text.size()) fail("BadSpec", "unterminated cycle in: " + text);
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(n, cycles);
}

}  // namespace orbicycle
