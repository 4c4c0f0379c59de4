#ifndef PHGJ_QUAD_HPP
#define PHGJ_QUAD_HPP

#include <functional>

namespace phgj {

struct QuadResult {
    double value;
    double error_estimate;
    long evaluations;
};

/// Adaptive Gauss-Kronrod (7-15) integration on [a,b].
/// Bisects intervals whose local K15-G7 discrepancy exceeds the budget.
/// Throws NonIntegrable when the subdivision cap is hit before the
/// requested tolerance is met, or when non-finite values appear that
/// refinement cannot isolate.
QuadResult adaptive_integrate(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol = 1e-12,
                              double abs_tol = 1e-300,
                              long max_subdivisions = 1 << 20);

} // namespace phgj

#endif
