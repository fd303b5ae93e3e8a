#ifndef ORBICYCLE_ROOTS_HPP
#define ORBICYCLE_ROOTS_HPP

#include <vector>

#include "orbicycle/intpoly.hpp"

namespace orbicycle {

struct RootApprox {
  double re = 0;
  double im = 0;
  double residual = 0;  // |P(root)| / max |coeff|
};

/// All deg(P) complex roots by Durand-Kerner iteration, sorted by real part
/// then imaginary part. Every returned root satisfies residual < tol.
/// Errors: ZeroPolynomial (deg < 1), NoConvergence (sweep cap hit).
std::vector<RootApprox> complex_roots(const IntPoly& p, double tol = 1e-10,
                                      int max_sweeps = 10000);

}  // namespace orbicycle

#endif
