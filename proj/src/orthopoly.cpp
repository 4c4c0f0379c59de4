#include "phgj/orthopoly.hpp"
#include "phgj/errors.hpp"
#include "phgj/linalg.hpp"

#include <cmath>

namespace phgj {

double RecurrenceCoefficients::eval_monic(std::size_t s, double t) const {
    double pm1 = 0.0, p = 1.0;
    for (std::size_t j = 0; j < s; ++j) {
        double next = (t - alpha[j]) * p - (j > 0 ? beta[j] : 0.0) * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

RecurrenceCoefficients recurrence_from_measure(const UnivariateMeasure& m, int n) {
    if (n < 1) throw Error("recurrence_from_measure: n must be >= 1");
    RecurrenceCoefficients rc;
    const double mass = power_moment(m, 0, 0);
    if (!(mass > 0.0)) throw ZeroMeasure("measure has non-positive total mass");
    const double len = m.upper() - m.lower();

    // inner products against the monic sequence evaluated via the
    // coefficients found so far
    auto pi = [&rc](std::size_t s, double t) { return rc.eval_monic(s, t); };

    double norm_prev = mass; // <pi_0, pi_0>
    rc.beta.push_back(mass);
    for (int j = 0; j < n; ++j) {
        double t_inner = generalized_moment(
            m, [&](double t) { double p = pi(j, t); return t * p * p; });
        rc.alpha.push_back(t_inner / norm_prev);
        if (j + 1 == n) break;
        double norm_next = generalized_moment(
            m, [&](double t) { double p = pi(j + 1, t); return p * p; });
        double cutoff = 1e-14 * mass * std::pow(std::max(len, 1e-300), 2.0 * (j + 1));
        if (!(norm_next > cutoff)) break; // support cardinality j+1
        rc.beta.push_back(norm_next / norm_prev);
        norm_prev = norm_next;
    }
    // atomic measures: rank can never exceed the atom count
    if (m.is_atomic() && rc.alpha.size() > m.atom_count()) {
        rc.alpha.resize(m.atom_count());
        rc.beta.resize(m.atom_count());
    }
    return rc;
}

UnivariateMeasure gauss_nodes_weights(const RecurrenceCoefficients& rc, int s) {
    if (s < 1) throw Error("gauss_nodes_weights: s must be >= 1");
    if (rc.effective_rank() < static_cast<std::size_t>(s))
        throw RankTooLow("effective rank below requested point count");
    std::vector<double> diag(rc.alpha.begin(), rc.alpha.begin() + s);
    std::vector<double> off(s > 1 ? s - 1 : 0);
    for (int j = 1; j < s; ++j) off[j - 1] = std::sqrt(rc.beta[j]);
    TridiagEigen eig = tridiagonal_eigen(std::move(diag), std::move(off));
    std::vector<Atom> atoms(s);
    for (int i = 0; i < s; ++i) {
        double w = rc.beta[0] * eig.first_components[i] * eig.first_components[i];
        atoms[i] = {eig.values[i], w};
    }
    return UnivariateMeasure::from_atoms(std::move(atoms));
}

double monic_norm_sq(const RecurrenceCoefficients& rc, int s) {
    if (s < 0) throw Error("monic_norm_sq: s must be >= 0");
    if (rc.beta.size() < static_cast<std::size_t>(s) + 1) return 0.0;
    double prod = 1.0;
    for (int j = 0; j <= s; ++j) prod *= rc.beta[j];
    return prod;
}

UnivariateMeasure gauss_jacobi(const UnivariateMeasure& m, int s) {
    if (s < 1) throw Error("gauss_jacobi: s must be >= 1");
    if (m.is_atomic() && m.atom_count() <= static_cast<std::size_t>(s)) return m;
    RecurrenceCoefficients rc = recurrence_from_measure(m, s + 1);
    int points = static_cast<int>(std::min<std::size_t>(rc.effective_rank(), s));
    return gauss_nodes_weights(rc, points);
}

} // namespace phgj
