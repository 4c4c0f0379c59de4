#include "phgj/error_bounds.hpp"
#include "phgj/errors.hpp"
#include "phgj/orthopoly.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace phgj {

namespace {

double component_norm_sq(const UnivariateMeasure& m, int s) {
    RecurrenceCoefficients rc =
        recurrence_from_measure(image_measure(m, MeasureMap::Square), s + 1);
    return monic_norm_sq(rc, s);
}

} // namespace

ErrorReport markov_bound(const PseudoPositiveMeasure& mu, int s,
                         const std::map<ComponentIndex, double>& deriv_sup) {
    if (s < 1) throw Error("markov_bound: s must be >= 1");
    ErrorReport rep;
    double sum = 0.0;
    for (const auto& [idx, m] : mu.components) {
        auto it = deriv_sup.find(idx);
        if (it == deriv_sup.end()) {
            std::ostringstream os;
            os << "markov_bound: no derivative bound for component (" << idx.k
               << "," << idx.l << ")";
            throw MissingDerivativeBound(os.str());
        }
        ComponentErrorTerm t;
        t.derivative_sup = it->second;
        t.norm_sq = component_norm_sq(m, s);
        t.term = t.derivative_sup * t.norm_sq;
        sum += t.term;
        rep.contributions.emplace(idx, t);
    }
    rep.total_bound = sum / std::tgamma(2.0 * s + 1.0);
    return rep;
}

double derivative_sup_estimate(const std::function<double(double)>& g, double a,
                               double b, int order) {
    if (order < 0) throw Error("derivative_sup_estimate: order must be >= 0");
    const int n = std::max(64, 8 * order); // interpolant degree
    if (order > n / 2)
        throw OrderTooHigh("derivative_sup_estimate: order too high for degree");

    // Chebyshev coefficients from the n-point root grid on [a,b]
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> samples(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.5) / n);
        samples[i] = g(mid + half * x);
    }
    std::vector<double> c(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += samples[i] * std::cos(std::numbers::pi * j * (i + 0.5) / n);
        c[j] = 2.0 * s / n;
    }
    c[0] *= 0.5;
    // chop roundoff-level coefficients so exactly-annihilated inputs (e.g.
    // low-degree polynomials) differentiate to exactly zero
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::fabs(v));
    for (double& v : c)
        if (std::fabs(v) <= 1e-14 * cmax) v = 0.0;

    // differentiate the coefficient recurrence `order` times
    for (int pass = 0; pass < order; ++pass) {
        std::vector<double> d(n, 0.0);
        for (int j = n - 2; j >= 0; --j)
            d[j] = (j + 2 < n ? d[j + 2] : 0.0) + 2.0 * (j + 1) * c[j + 1];
        d[0] *= 0.5;
        for (int j = 0; j < n; ++j) c[j] = d[j] / half; // chain rule per pass
    }

    // Clenshaw sup on a fine grid
    double sup = 0.0;
    const int grid = 2000;
    for (int i = 0; i <= grid; ++i) {
        double x = -1.0 + 2.0 * i / grid;
        double b1 = 0.0, b2 = 0.0;
        for (int j = n - 1; j >= 1; --j) {
            double t = 2.0 * x * b1 - b2 + c[j];
            b2 = b1;
            b1 = t;
        }
        double v = x * b1 - b2 + c[0];
        sup = std::max(sup, std::fabs(v));
    }
    return sup * 1.25;
}

double jacobi_norm_closed_form(int s, int k) {
    if (s < 0 || k < 0) throw Error("jacobi_norm_closed_form: s, k must be >= 0");
    double lg = std::lgamma(s + 1.0) + std::lgamma(s + k + 2.0) -
                std::lgamma(2.0 * s + k + 2.0) + std::lgamma(s + 2.0) +
                std::lgamma(s + k + 1.0) - std::lgamma(2.0 * s + k + 3.0);
    return std::exp(lg);
}

double holomorphic_bound(double max_abs_f_on_rho, double rho, double R, int s,
                         const PseudoPositiveMeasure& mu) {
    if (!(rho > R && R > 0.0))
        throw InvalidRadii("holomorphic_bound: need rho > R > 0");
    if (s < 1) throw Error("holomorphic_bound: s must be >= 1");
    double carried = 0.0, max_norm = 0.0;
    int top_k = 0;
    for (const auto& [idx, m] : mu.components) {
        double norm = component_norm_sq(m, s);
        carried += std::pow(rho, -idx.k) * norm;
        max_norm = std::max(max_norm, norm);
        top_k = std::max(top_k, idx.k);
    }
    // geometric tail over the truncated degrees, two components per degree
    double tail;
    if (rho > 1.0)
        tail = 2.0 * max_norm * std::pow(rho, -(top_k + 1)) / (1.0 - 1.0 / rho);
    else
        tail = std::numeric_limits<double>::infinity();
    const double prefactor =
        std::sqrt(2.0 * std::numbers::pi) * rho * rho /
        std::pow(rho * rho - R * R, 2.0 * s + 1.0);
    return prefactor * max_abs_f_on_rho * (carried + tail);
}

} // namespace phgj
