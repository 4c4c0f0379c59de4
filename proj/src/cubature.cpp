#include "phgj/cubature.hpp"
#include "phgj/errors.hpp"
#include "phgj/orthopoly.hpp"
#include "phgj/quad.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace phgj {

PseudoPositiveMeasure from_density(const std::function<double(double, double)>& w,
                                   double rho, double R, int k_max, int M) {
    if (M < 4 * k_max + 4) throw InsufficientSamples("from_density: M < 4 k_max + 4");
    if (!(0.0 <= rho && rho < R)) throw InvalidSupport("from_density: bad radii");
    PseudoPositiveMeasure mu;
    mu.rho = rho;
    mu.R = R;
    mu.k_max = k_max;

    const int radial_grid = 256;
    double max_w = 0.0;
    for (int i = 0; i <= radial_grid; ++i) {
        double r = rho + (R - rho) * i / radial_grid;
        for (int m = 0; m < 16; ++m)
            max_w = std::max(max_w, std::fabs(w(r, 2.0 * std::numbers::pi * m / 16)));
    }

    for (int k = 0; k <= k_max; ++k)
        for (int l = 1; l <= (k == 0 ? 1 : 2); ++l) {
            const ComponentIndex idx{k, l};
            double comp_max = 0.0, comp_min = 0.0, min_r = rho;
            for (int i = 0; i <= radial_grid; ++i) {
                double r = rho + (R - rho) * i / radial_grid;
                double v = fourier_coefficient_sampled(w, r, idx, M);
                comp_max = std::max(comp_max, std::fabs(v));
                if (v < comp_min) {
                    comp_min = v;
                    min_r = r;
                }
            }
            if (comp_min < -1e-10 * std::max(max_w, 1e-300)) {
                std::ostringstream os;
                os << "from_density: component (" << k << "," << l
                   << ") negative near r = " << min_r;
                throw NotPseudoPositive(os.str());
            }
            if (comp_max <= 1e-13 * std::max(max_w, 1e-300)) continue; // zero
            auto density = [w, idx, M, k](double r) {
                double v = fourier_coefficient_sampled(w, r, idx, M);
                return std::pow(r, k + 1) * std::max(v, 0.0);
            };
            mu.components.emplace(idx,
                                  UnivariateMeasure::from_density(rho, R, density));
        }
    return mu;
}

Cubature build_cubature(const PseudoPositiveMeasure& mu, int s) {
    if (s < 1) throw Error("build_cubature: s must be >= 1");
    Cubature cub;
    cub.order = s;
    cub.rho = mu.rho;
    cub.R = mu.R;
    cub.kind = CubatureKind::Ball;
    for (const auto& [idx, m] : mu.components) {
        if (m.is_atomic() && m.atom_count() <= static_cast<std::size_t>(s)) {
            cub.components.emplace(idx, m);
            continue;
        }
        UnivariateMeasure nu = gauss_jacobi(image_measure(m, MeasureMap::Square), s);
        cub.components.emplace(idx, image_measure(nu, MeasureMap::Sqrt));
    }
    return cub;
}

namespace {

double lf_component_integral(const UnivariateMeasure& m, const ComponentIndex& idx,
                             const LFPolynomial& f) {
    // f_{k,l}(r) r^-k = p_{k,l}(r^2)
    return generalized_moment(
        m, [&](double r) { return f.component_eval(idx, r * r); });
}

template <typename TargetMap>
double integrate_lf_impl(const TargetMap& components, const LFPolynomial& f) {
    double total = 0.0;
    for (const auto& [idx, poly] : f.components) {
        auto it = components.find(idx);
        if (it == components.end()) continue; // zero measure component
        total += lf_component_integral(it->second, idx, f);
    }
    return total;
}

template <typename TargetMap>
double integrate_components_impl(
    const TargetMap& components,
    const std::map<ComponentIndex, std::function<double(double)>>& f_components) {
    double total = 0.0;
    for (const auto& [idx, g] : f_components) {
        auto it = components.find(idx);
        if (it == components.end()) continue;
        const int k = idx.k;
        total += generalized_moment(
            it->second, [&](double r) { return g(r) * std::pow(r, -k); });
    }
    return total;
}

} // namespace

double integrate_lf(const PseudoPositiveMeasure& mu, const LFPolynomial& f) {
    return integrate_lf_impl(mu.components, f);
}
double integrate_lf(const Cubature& cub, const LFPolynomial& f) {
    return integrate_lf_impl(cub.components, f);
}

double integrate_components(
    const PseudoPositiveMeasure& mu,
    const std::map<ComponentIndex, std::function<double(double)>>& f_components) {
    return integrate_components_impl(mu.components, f_components);
}
double integrate_components(
    const Cubature& cub,
    const std::map<ComponentIndex, std::function<double(double)>>& f_components) {
    return integrate_components_impl(cub.components, f_components);
}

double integrate_function(const Cubature& cub,
                          const std::function<double(double, double)>& f, int M) {
    int needed_k = 0;
    for (const auto& [idx, m] : cub.components) needed_k = std::max(needed_k, idx.k);
    if (M < 4 * needed_k + 4)
        throw InsufficientSamples("integrate_function: M < 4 k_max + 4");
    double total = 0.0;
    for (const auto& [idx, m] : cub.components)
        for (const Atom& at : m.atoms()) {
            double fkl = fourier_coefficient_sampled(f, at.node, idx, M);
            total += at.weight * fkl * std::pow(at.node, -idx.k);
        }
    return total;
}

double integrate_function(const PseudoPositiveMeasure& mu,
                          const std::function<double(double, double)>& f, int M,
                          double rel_tol) {
    int needed_k = 0;
    for (const auto& [idx, m] : mu.components) needed_k = std::max(needed_k, idx.k);
    if (M < 4 * needed_k + 4)
        throw InsufficientSamples("integrate_function: M < 4 k_max + 4");
    double total = 0.0;
    for (const auto& [idx, m] : mu.components) {
        const ComponentIndex index = idx;
        // sampled coefficients carry an absolute noise floor; once the running
        // total is established, refine later (tiny) components no further than
        // its scale warrants
        const double abs_tol = rel_tol * (1.0 + std::fabs(total));
        total += generalized_moment(
            m,
            [&](double r) {
                if (r <= 0.0) return 0.0;
                return fourier_coefficient_sampled(f, r, index, M) *
                       std::pow(r, -index.k);
            },
            rel_tol, abs_tol);
    }
    return total;
}

std::vector<ChebyshevComponentReport>
verify_chebyshev_inequality(const PseudoPositiveMeasure& mu, const Cubature& cub) {
    std::vector<ChebyshevComponentReport> out;
    for (const auto& [idx, sigma] : cub.components) {
        auto it = mu.components.find(idx);
        if (it == mu.components.end()) continue;
        double lhs = power_moment(sigma, 0, -idx.k);
        double rhs = power_moment(it->second, 0, -idx.k);
        out.push_back({idx, lhs, rhs, lhs <= rhs + 1e-10 * std::fabs(rhs)});
    }
    return out;
}

SummabilityReport summability_report(const PseudoPositiveMeasure& mu, bool tail_fit) {
    SummabilityReport rep;
    double running = 0.0;
    for (int k = 0; k <= mu.k_max; ++k) {
        double term = 0.0;
        for (int l = 1; l <= (k == 0 ? 1 : 2); ++l) {
            auto it = mu.components.find({k, l});
            if (it != mu.components.end()) term += power_moment(it->second, 0, -k);
        }
        running += term;
        rep.partial_sums.push_back(running);
        rep.last_terms.push_back(term);
    }
    if (!tail_fit) return rep;
    // log-log fit of term decay on the top half of carried degrees
    std::vector<std::pair<double, double>> pts;
    for (int k = mu.k_max / 2; k <= mu.k_max; ++k)
        if (k >= 1 && rep.last_terms[k] > 0.0)
            pts.push_back({std::log(static_cast<double>(k)),
                           std::log(rep.last_terms[k])});
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto& [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double n = static_cast<double>(pts.size());
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        rep.fitted_decay_exponent = -slope;
        rep.divergence_flag = rep.fitted_decay_exponent < 1.1;
    }
    return rep;
}

std::vector<ConvergenceRow>
convergence_table(const PseudoPositiveMeasure& mu,
                  const std::function<double(double, double)>& f,
                  const std::vector<int>& s_list, double reference, int M) {
    std::vector<ConvergenceRow> rows;
    for (int s : s_list) {
        Cubature cub = build_cubature(mu, s);
        double v = integrate_function(cub, f, M);
        rows.push_back({s, v, std::fabs(v - reference)});
    }
    return rows;
}

} // namespace phgj
