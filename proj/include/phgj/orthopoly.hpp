#ifndef PHGJ_ORTHOPOLY_HPP
#define PHGJ_ORTHOPOLY_HPP

#include "phgj/measure.hpp"

#include <vector>

namespace phgj {

/// Three-term recurrence data of the monic orthogonal polynomials of a
/// measure: pi_{j+1}(t) = (t - alpha_j) pi_j(t) - beta_j pi_{j-1}(t),
/// beta_0 = total mass. effective_rank() < requested n signals that the
/// measure has fewer support points than n.
struct RecurrenceCoefficients {
    std::vector<double> alpha;
    std::vector<double> beta;

    std::size_t effective_rank() const { return alpha.size(); }

    /// Evaluate the monic orthogonal polynomial pi_s at t via the recurrence.
    double eval_monic(std::size_t s, double t) const;
};

/// Discretized Stieltjes procedure: measure-level inner products, early
/// termination at numerical rank. Throws ZeroMeasure if the total mass <= 0.
RecurrenceCoefficients recurrence_from_measure(const UnivariateMeasure& m, int n);

/// s-point Gauss rule from the Jacobi matrix eigen-decomposition.
/// Throws RankTooLow if the recurrence carries fewer than s coefficients.
UnivariateMeasure gauss_nodes_weights(const RecurrenceCoefficients& rc, int s);

/// ||pi_s||^2 = beta_0 * ... * beta_s; 0 when the rank is deficient.
double monic_norm_sq(const RecurrenceCoefficients& rc, int s);

/// Gauss-Jacobi quadrature of m with at most s atoms. Atomic measures with
/// <= s atoms pass through unchanged.
UnivariateMeasure gauss_jacobi(const UnivariateMeasure& m, int s);

} // namespace phgj

#endif
