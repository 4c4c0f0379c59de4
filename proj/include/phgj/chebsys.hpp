#ifndef PHGJ_CHEBSYS_HPP
#define PHGJ_CHEBSYS_HPP

#include "phgj/cubature.hpp"
#include "phgj/measure.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace phgj {

struct BasisFunction {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::string label;
};

/// Ordered function system on [a, b]; quadrature use expects 4s functions.
struct ChebyshevBasis {
    std::vector<BasisFunction> functions;
    double a = 0.0;
    double b = 1.0;
};

struct TplusVerdict {
    bool pass;
    double min_det;
    std::vector<double> witness; // node tuple attaining min_det
};

/// Probabilistic T+ certificate: random sorted node tuples, all collocation
/// determinants must exceed 1e-13 * (product of column sup-norms).
TplusVerdict verify_tplus(const ChebyshevBasis& basis, int trials,
                          unsigned long seed = 20240817ul);

/// Markov-Krein (lower chief) quadrature: 2s interior nodes and positive
/// weights matching the 4s generalized moments, by damped Newton with
/// polynomial-Gauss initialization. Residual target 1e-10 * ||m||_inf.
UnivariateMeasure markov_quadrature(const ChebyshevBasis& basis,
                                    const std::vector<double>& target_moments,
                                    double a, double b, int s);

/// The 4s solutions of L_(k)^{2s} f = 0 on an interval with a > 0 (d = 2):
/// powers r^{2j +/- k}, with r^e log r replacing collided exponents.
ChebyshevBasis annulus_basis(int k, int s, double a, double b);

/// Strip systems t^j e^{-|k| t}, t^j e^{|k| t} (j < 2s); plain polynomials
/// 1..t^{4s-1} in the k = 0 limit.
ChebyshevBasis strip_basis(int k_abs, int s, double a, double b);

/// Annulus cubature: per component <= 2s atoms matching the generalized
/// moments of annulus_basis(k, s). Integration of a function against it
/// uses  sum int f_{k,l}(r) d tau_{k,l}  (no r^-k factor). Input components
/// are therefore expected in the plain radial convention (no r^k weight),
/// unlike the ball construction.
Cubature build_annulus_cubature(const PseudoPositiveMeasure& mu, int s);

/// Annulus component identity: sum_{k,l} int g_{k,l}(r) d(target)_{k,l}
/// with g_{k,l} the Laplace-Fourier coefficients themselves.
double annulus_integrate(
    const std::map<ComponentIndex, UnivariateMeasure>& components,
    const std::map<ComponentIndex, std::function<double(double)>>& f_components);

/// Cylinder (periodic strip): per Fourier mode k a <= 2s atom quadrature
/// matching the strip_basis(|k|, s) moments of the component measure.
std::map<int, UnivariateMeasure>
build_strip_cubature(const std::map<int, UnivariateMeasure>& components, int s,
                     double a, double b);

/// Strip component identity sum_k int f_k(t) d(component)_k with complex
/// Fourier coefficients f_k of f(t, y) sampled by M-point trapezoid in y.
double strip_integrate(const std::map<int, UnivariateMeasure>& components,
                       const std::function<double(double, double)>& f, int M);

} // namespace phgj

#endif
