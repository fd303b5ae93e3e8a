#include "orbicycle/cycle_index.hpp"

#include <sstream>

namespace orbicycle {

void CycleIndex::add_term(const std::vector<int>& exps, const Int& coeff) {
  if (static_cast<int>(exps.size()) != degree_)
    fail("ArgMismatch", "exponent vector length must equal the degree");
  long long weight = 0;
  for (size_t i = 0; i < exps.size(); ++i) weight += static_cast<long long>(i + 1) * exps[i];
  if (weight != degree_) fail("ArgMismatch", "monomial weight must equal the degree");
  Int& slot = terms_[exps];
  slot += coeff;
  if (slot == 0) terms_.erase(exps);
}

Int CycleIndex::coefficient_sum() const {
  Int total = 0;
  for (const auto& [exps, coeff] : terms_) total += coeff;
  return total;
}

IntPoly CycleIndex::specialize_all_equal() const {
  std::vector<Int> coeffs(static_cast<size_t>(degree_) + 1, Int(0));
  for (const auto& [exps, coeff] : terms_) {
    int total_exp = 0;
    for (int e : exps) total_exp += e;
    coeffs[static_cast<size_t>(total_exp)] += coeff;
  }
  return IntPoly(std::move(coeffs));
}

std::string CycleIndex::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Reverse map order puts s1-heavy monomials (the identity term) first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    if (!first) out << " + ";
    first = false;
    bool has_vars = false;
    for (int e : exps)
      if (e > 0) has_vars = true;
    if (coeff != 1 || !has_vars) out << coeff.str() << (has_vars ? " " : "");
    bool first_var = true;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!first_var) out << " ";
      first_var = false;
      out << "s" << i + 1;
      if (exps[i] > 1) out << "^" << exps[i];
    }
  }
  return out.str();
}

}  // namespace orbicycle
