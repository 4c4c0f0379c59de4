#ifndef PHGJ_ERROR_BOUNDS_HPP
#define PHGJ_ERROR_BOUNDS_HPP

#include "phgj/cubature.hpp"

#include <functional>
#include <map>
#include <optional>

namespace phgj {

struct ComponentErrorTerm {
    double derivative_sup = 0.0;
    double norm_sq = 0.0;
    double term = 0.0; // derivative_sup * norm_sq
};

/// Markov-type error report: per-component term sum divided by (2s)!.
/// `heuristic` marks reports whose derivative sups came from the numerical
/// estimator rather than closed-form analysis.
struct ErrorReport {
    std::map<ComponentIndex, ComponentErrorTerm> contributions;
    double total_bound = 0.0;
    std::optional<double> observed_error;
    bool heuristic = false;
};

/// Error bound for the order-s cubature of mu:
///   bound = (1/(2s)!) sum_{k,l} sup|g_{k,l}^{(2s)}| * int |Q_{k,l}^s|^2 dmu^psi
/// with g_{k,l}(t) = f_{k,l}(sqrt t) t^{-k/2} and the squared monic norm taken
/// against the squared-variable image of each component measure. deriv_sup
/// must cover every carried component (MissingDerivativeBound otherwise).
ErrorReport markov_bound(const PseudoPositiveMeasure& mu, int s,
                         const std::map<ComponentIndex, double>& deriv_sup);

/// Numerical sup of |g^(order)| on [a,b]: Chebyshev interpolant of degree
/// max(64, 8*order), coefficient-recurrence differentiation, sup on a fine
/// grid, times safety factor 1.25. An estimate, not a certificate.
double derivative_sup_estimate(const std::function<double(double)>& g, double a,
                               double b, int order);

/// Closed form  s!(s+k+1)!/(2s+k+1)! * (s+1)!(s+k)!/(2s+k+2)!  evaluated with
/// log-gamma arithmetic; the squared norm of the degree-s monic orthogonal
/// polynomial of the alpha = 2 squared-variable component family.
double jacobi_norm_closed_form(int s, int k);

/// Bound for integrands extending holomorphically past the complex ball of
/// radius rho > R:
///   sqrt(2 pi) rho^2 / (rho^2 - R^2)^{2s+1} * max|f| *
///     [ sum_{carried} rho^-k norm_{k,l} + geometric tail majorant ].
double holomorphic_bound(double max_abs_f_on_rho, double rho, double R, int s,
                         const PseudoPositiveMeasure& mu);

} // namespace phgj

#endif
