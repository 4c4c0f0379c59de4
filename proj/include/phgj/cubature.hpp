#ifndef PHGJ_CUBATURE_HPP
#define PHGJ_CUBATURE_HPP

#include "phgj/laplace_fourier.hpp"
#include "phgj/measure.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace phgj {

/// Component representation of a pseudo-positive measure on the annulus
/// [rho, R] (rho = 0 gives the ball): a finite map (k,l) -> non-negative
/// univariate measure. Missing components are zero.
struct PseudoPositiveMeasure {
    std::map<ComponentIndex, UnivariateMeasure> components;
    double rho = 0.0;
    double R = 1.0;
    int k_max = 16;
};

enum class CubatureKind { Ball, Annulus };

/// Per-component atomic measure with <= s atoms (ball) or <= 2s atoms
/// (annulus), all weights positive, nodes in [rho, R].
struct Cubature {
    std::map<ComponentIndex, UnivariateMeasure> components;
    int order = 1;
    double rho = 0.0;
    double R = 1.0;
    CubatureKind kind = CubatureKind::Ball;
    std::vector<std::string> warnings;
};

/// Builds the component measures d mu_{k,l} = r^{k+1} w_{k,l}(r) dr from a
/// sampled planar density w(r, theta) (d = 2). Components whose circle
/// coefficient dips below -1e-10 * max|w| reject (NotPseudoPositive);
/// components that vanish identically are dropped.
PseudoPositiveMeasure from_density(const std::function<double(double, double)>& w,
                                   double rho, double R, int k_max, int M);

/// Polyharmonic Gauss-Jacobi cubature of order s: per component, the
/// Gauss quadrature of the squared-variable image measure pulled back under
/// sqrt. Components with <= s atoms pass through unchanged.
Cubature build_cubature(const PseudoPositiveMeasure& mu, int s);

/// Component-identity integral of an LFPolynomial:
///   sum_{k,l}  integral  p_{k,l}(r^2) d(target)_{k,l}(r).
double integrate_lf(const PseudoPositiveMeasure& mu, const LFPolynomial& f);
double integrate_lf(const Cubature& cub, const LFPolynomial& f);

/// Same identity with caller-supplied radial component callables g_{k,l}(r)
/// standing for f_{k,l}; the r^-k factor is applied here.
double integrate_components(
    const PseudoPositiveMeasure& mu,
    const std::map<ComponentIndex, std::function<double(double)>>& f_components);
double integrate_components(
    const Cubature& cub,
    const std::map<ComponentIndex, std::function<double(double)>>& f_components);

/// Integrate a sampled function against a ball cubature: Laplace-Fourier
/// coefficients at the radial nodes by M-point circle trapezoid sums.
double integrate_function(const Cubature& cub,
                          const std::function<double(double, double)>& f, int M);

/// Direct-measure counterpart of integrate_function (adaptive in r).
double integrate_function(const PseudoPositiveMeasure& mu,
                          const std::function<double(double, double)>& f, int M,
                          double rel_tol = 1e-12);

struct ChebyshevComponentReport {
    ComponentIndex index;
    double cubature_side; // integral r^-k d sigma_{k,l}
    double measure_side;  // integral r^-k d mu_{k,l}
    bool pass;
};

/// Checks the extremal inequality  int r^-k d sigma <= int r^-k d mu
/// per component, slack 1e-10 * |rhs|.
std::vector<ChebyshevComponentReport>
verify_chebyshev_inequality(const PseudoPositiveMeasure& mu, const Cubature& cub);

struct SummabilityReport {
    std::vector<double> partial_sums; // over K = 0..k_max
    std::vector<double> last_terms;   // per-degree contribution
    bool divergence_flag = false;
    double fitted_decay_exponent = 0.0;
};

/// Partial sums of sum_k sum_l int r^-k d mu_{k,l}; the divergence flag
/// trips when the per-degree terms decay slower than 1/k^{1.1}, fitted on
/// the top half of carried degrees.
SummabilityReport summability_report(const PseudoPositiveMeasure& mu,
                                     bool tail_fit = true);

struct ConvergenceRow {
    int s;
    double value;
    double abs_error;
};

std::vector<ConvergenceRow>
convergence_table(const PseudoPositiveMeasure& mu,
                  const std::function<double(double, double)>& f,
                  const std::vector<int>& s_list, double reference, int M);

} // namespace phgj

#endif
