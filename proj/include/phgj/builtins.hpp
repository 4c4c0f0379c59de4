#ifndef PHGJ_BUILTINS_HPP
#define PHGJ_BUILTINS_HPP

#include "phgj/cubature.hpp"

#include <functional>
#include <string>
#include <vector>

namespace phgj::builtins {

/// Damped Poisson-kernel measure on the unit disk, by closed-form component
/// densities (no angular sampling):
///   k = 0:  sqrt(2 pi) r (1 - r^alpha) dr
///   k >= 1 (cos only):  2 sqrt(pi) r^{2k+1} (1 - r^alpha) dr
PseudoPositiveMeasure poisson_alpha(double alpha, int k_max);

/// Undamped Poisson-kernel measure; component moments int r^-k d mu decay
/// like 1/k, so the summability check is expected to flag it.
PseudoPositiveMeasure poisson_plain(int k_max);

/// Planar Lebesgue measure on the unit disk: single radial component
/// sqrt(2 pi) r dr.
PseudoPositiveMeasure disk_lebesgue();

/// Named integrands f(r, theta) for the CLI and tests.
struct Integrand {
    std::string id;
    std::function<double(double, double)> f;
};
const std::vector<Integrand>& integrands();
std::function<double(double, double)> integrand(const std::string& id);

/// Radial density registry for component-wise measure specs.
///   "poisson_component"  params {alpha, k}: 2 sqrt(pi) r^{2k+1}(1 - r^alpha)
///   "monomial"           params {coeff, power}: coeff * r^power
std::function<double(double)>
radial_density(const std::string& expr_id,
               const std::map<std::string, double>& params);

/// Parses a polynomial in x and y, e.g. "x^2+y^2", "2x^3y - 0.5y^2", "1".
/// Terms are monomials with optional real coefficient and optional '*'.
BivariatePolynomial parse_polynomial(const std::string& text);

} // namespace phgj::builtins

#endif
