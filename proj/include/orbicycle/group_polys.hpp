#ifndef ORBICYCLE_GROUP_POLYS_HPP
#define ORBICYCLE_GROUP_POLYS_HPP

#include <string>
#include <vector>

#include "orbicycle/cycle_index.hpp"
#include "orbicycle/group.hpp"
#include "orbicycle/intpoly.hpp"

namespace orbicycle {

/// F_G(x) = sum over g of x^c(g): monic of degree n, F_G(0) = 0, F_G(1) = |G|.
IntPoly cycle_polynomial(const PermutationGroup& g);

/// Z_G(s_1,...,s_n), unnormalized (coefficient sum = |G|).
CycleIndex cycle_index(const PermutationGroup& g);

/// Z_G(x, 1, ..., 1): generating function for fixed points.
IntPoly fixed_point_polynomial(const CycleIndex& z);

/// Entry k-1 is (dZ/ds_k)(1,...,1)/|G| = avg of c_k(g); with conventional set,
/// entry k-1 is additionally multiplied by k. Errors: OrderMismatch.
std::vector<Rat> parker_vector(const CycleIndex& z, const Int& order, bool conventional = false);

/// Closed-form cycle polynomial, computed without enumerating the group.
/// Supported: S(n), A(n), C(n), D(n), Trivial(n), PGL2(p), Prod, Wr.
/// Errors: NotPrime, DegreeTooSmall, NoClosedForm, NonIntegralWreathComposition.
IntPoly closed_form(const GroupSpec& spec);

enum class OrbitCountMode { Burnside, BruteForce };

/// Number of G-orbits on colorings of the n points with a colors.
/// Burnside evaluates F_G(a)/|G| exactly; BruteForce runs union-find over all
/// a^n colorings (requires a^n <= 10^7). Errors: BruteforceTooLarge, NonDivisible.
Int orbit_count_colorings(const PermutationGroup& g, int colors, OrbitCountMode mode);

struct IdentityReport {
  std::string identity;
  bool pass = false;
  std::string detail;
};

// Identity suite of the cycle-polynomial theory; each check is exact and
// coefficientwise where a polynomial identity is involved.
IdentityReport check_parity(const PermutationGroup& g);
IdentityReport check_negative_run_contiguous(const PermutationGroup& g);
IdentityReport check_overgroup(const PermutationGroup& g1, const PermutationGroup& g2);
IdentityReport check_divisibility(const PermutationGroup& g, long long lo = -10, long long hi = 10);
IdentityReport check_set_transitive_bound(const PermutationGroup& g);
IdentityReport check_odd_theorem(const PermutationGroup& g, long long max_a = 10);

}  // namespace orbicycle

#endif
