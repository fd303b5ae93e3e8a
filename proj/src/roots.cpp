#include "orbicycle/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace orbicycle {

namespace {

std::complex<double> eval_c(const std::vector<double>& c, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

}  // namespace

std::vector<RootApprox> complex_roots(const IntPoly& p, double tol, int max_sweeps) {
  if (p.degree() < 1) fail("ZeroPolynomial", "complex_roots requires degree >= 1");

  // Monic double-precision copy; exact zero roots are split off first so the
  // iteration never has to resolve the multiple root at the origin.
  auto [zero_mult, q] = strip_zero_roots(p);
  std::vector<double> c;
  c.reserve(q.coeffs().size());
  double lead = q.leading().convert_to<double>();
  double max_abs = 0;
  for (const Int& v : q.coeffs()) {
    double d = v.convert_to<double>() / lead;
    c.push_back(d);
    max_abs = std::max(max_abs, std::fabs(d));
  }

  const int deg = q.degree();
  std::vector<std::complex<double>> r(static_cast<size_t>(deg));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc = 1;
  for (int i = 0; i < deg; ++i) {
    acc *= seed;
    r[static_cast<size_t>(i)] = acc;
  }

  bool converged = deg == 0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    double max_step = 0;
    double max_norm = 1;
    for (int i = 0; i < deg; ++i) max_norm = std::max(max_norm, std::abs(r[static_cast<size_t>(i)]));
    for (int i = 0; i < deg; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
      if (denom == std::complex<double>(0, 0)) {
        r[static_cast<size_t>(i)] += std::complex<double>(1e-8, 1e-8);
        max_step = 1;
        continue;
      }
      std::complex<double> delta = eval_c(c, r[static_cast<size_t>(i)]) / denom;
      r[static_cast<size_t>(i)] -= delta;
      max_step = std::max(max_step, std::abs(delta));
    }
    converged = max_step < 1e-14 * max_norm;
  }

  std::vector<RootApprox> out;
  out.reserve(static_cast<size_t>(zero_mult + deg));
  for (int i = 0; i < zero_mult; ++i) out.push_back({0.0, 0.0, 0.0});
  for (int i = 0; i < deg; ++i) {
    RootApprox ra;
    ra.re = r[static_cast<size_t>(i)].real();
    ra.im = r[static_cast<size_t>(i)].imag();
    ra.residual = std::abs(eval_c(c, r[static_cast<size_t>(i)])) / std::max(max_abs, 1.0);
    out.push_back(ra);
  }
  for (const RootApprox& ra : out)
    if (!(ra.residual < tol))
      fail("NoConvergence", "residual " + std::to_string(ra.residual) + " not below tolerance");
  std::sort(out.begin(), out.end(), [](const RootApprox& a, const RootApprox& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

}  // namespace orbicycle
