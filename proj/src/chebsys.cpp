#include "phgj/chebsys.hpp"
#include "phgj/errors.hpp"
#include "phgj/linalg.hpp"
#include "phgj/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

namespace phgj {

TplusVerdict verify_tplus(const ChebyshevBasis& basis, int trials,
                          unsigned long seed) {
    if (trials < 1) throw Error("verify_tplus: trials must be >= 1");
    const std::size_t n = basis.functions.size();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(basis.a, basis.b);

    // column sup-norms on a grid, for the determinant scale
    double scale = 1.0;
    for (const auto& u : basis.functions) {
        double sup = 0.0;
        for (int i = 0; i <= 128; ++i) {
            double t = basis.a + (basis.b - basis.a) * i / 128.0;
            sup = std::max(sup, std::fabs(u.f(t)));
        }
        scale *= std::max(sup, 1e-300);
    }

    TplusVerdict verdict{true, std::numeric_limits<double>::infinity(), {}};
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> nodes(n);
        for (auto& t : nodes) t = uni(rng);
        std::sort(nodes.begin(), nodes.end());
        bool distinct = true;
        for (std::size_t i = 1; i < n; ++i)
            if (nodes[i] - nodes[i - 1] < 1e-9 * (basis.b - basis.a)) distinct = false;
        if (!distinct) {
            --trial; // resample degenerate tuples
            continue;
        }
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = basis.functions[j].f(nodes[i]);
        double det = determinant(std::move(m));
        if (det < verdict.min_det) {
            verdict.min_det = det;
            verdict.witness = nodes;
        }
        if (!(det > 1e-13 * scale)) verdict.pass = false;
    }
    return verdict;
}

namespace {

struct ScaledBasis {
    std::vector<std::function<double(double)>> f, df;
    std::vector<double> moments; // rescaled targets
};

ScaledBasis rescale(const ChebyshevBasis& basis, const std::vector<double>& m) {
    ScaledBasis sb;
    for (std::size_t j = 0; j < basis.functions.size(); ++j) {
        double sup = 0.0;
        for (int i = 0; i <= 512; ++i) {
            double t = basis.a + (basis.b - basis.a) * i / 512.0;
            sup = std::max(sup, std::fabs(basis.functions[j].f(t)));
        }
        if (!(sup > 0.0)) sup = 1.0;
        const double inv = 1.0 / sup;
        auto f = basis.functions[j].f;
        auto df = basis.functions[j].df;
        sb.f.push_back([f, inv](double t) { return inv * f(t); });
        sb.df.push_back([df, inv](double t) { return inv * df(t); });
        sb.moments.push_back(inv * m[j]);
    }
    return sb;
}

} // namespace

UnivariateMeasure markov_quadrature(const ChebyshevBasis& basis,
                                    const std::vector<double>& target_moments,
                                    double a, double b, int s) {
    const int n_nodes = 2 * s;
    const std::size_t n_eq = 4 * static_cast<std::size_t>(s);
    if (basis.functions.size() != n_eq)
        throw Error("markov_quadrature: basis must hold 4s functions");
    if (target_moments.size() != n_eq)
        throw Error("markov_quadrature: need 4s target moments");

    ScaledBasis sb = rescale(basis, target_moments);
    double m_scale = 0.0;
    for (double v : target_moments) m_scale = std::max(m_scale, std::fabs(v));
    if (!(m_scale > 0.0)) throw ZeroMeasure("markov_quadrature: zero moment vector");

    // residual in the original (unscaled) basis, for the convergence test
    auto residual_unscaled = [&](const std::vector<double>& t,
                                 const std::vector<double>& w) {
        double worst = 0.0;
        for (std::size_t j = 0; j < n_eq; ++j) {
            double sum = 0.0;
            for (int i = 0; i < n_nodes; ++i) sum += w[i] * basis.functions[j].f(t[i]);
            worst = std::max(worst, std::fabs(sum - target_moments[j]));
        }
        return worst;
    };

    // initialization: polynomial Gauss nodes of Lebesgue on [a,b]
    UnivariateMeasure lebesgue =
        UnivariateMeasure::from_density(a, b, [](double) { return 1.0; });
    UnivariateMeasure init = gauss_jacobi(lebesgue, n_nodes);
    std::vector<double> nodes, weights;
    for (const Atom& at : init.atoms()) nodes.push_back(at.node);
    {
        Matrix A(n_eq, n_nodes);
        std::vector<double> rhs(n_eq);
        for (std::size_t j = 0; j < n_eq; ++j) {
            for (int i = 0; i < n_nodes; ++i) A(j, i) = sb.f[j](nodes[i]);
            rhs[j] = sb.moments[j];
        }
        weights = least_squares(A, rhs);
        double fallback = std::fabs(sb.moments[0]) / n_nodes + 1e-12;
        for (double& w : weights)
            if (!(w > 0.0)) w = fallback;
    }

    const double eps = 1e-9 * (b - a);
    auto scaled_residual = [&](const std::vector<double>& t,
                               const std::vector<double>& w,
                               std::vector<double>* out) {
        double norm2 = 0.0;
        for (std::size_t j = 0; j < n_eq; ++j) {
            double sum = 0.0;
            for (int i = 0; i < n_nodes; ++i) sum += w[i] * sb.f[j](t[i]);
            double rj = sum - sb.moments[j];
            if (out) (*out)[j] = rj;
            norm2 += rj * rj;
        }
        return norm2;
    };

    std::vector<double> res(n_eq);
    double best_residual = residual_unscaled(nodes, weights);
    const int max_iter = 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        // polish well past the acceptance threshold so downstream
        // cross-checks see node/weight accuracy near roundoff
        if (residual_unscaled(nodes, weights) <= 1e-13 * m_scale) break;
        double f0 = scaled_residual(nodes, weights, &res);
        Matrix jac(n_eq, n_eq);
        for (std::size_t j = 0; j < n_eq; ++j)
            for (int i = 0; i < n_nodes; ++i) {
                jac(j, i) = weights[i] * sb.df[j](nodes[i]);
                jac(j, n_nodes + i) = sb.f[j](nodes[i]);
            }
        std::vector<double> step;
        try {
            step = solve(std::move(jac), res);
        } catch (const Error&) {
            // singular Jacobian: nudge nodes apart and retry next iteration
            for (int i = 0; i < n_nodes; ++i)
                nodes[i] += (i % 2 == 0 ? 1.0 : -1.0) * 10.0 * eps;
            std::sort(nodes.begin(), nodes.end());
            continue;
        }
        // Armijo backtracking on the squared residual
        double lambda = 1.0;
        std::vector<double> tn(n_nodes), wn(n_nodes);
        bool accepted = false;
        while (lambda >= std::ldexp(1.0, -30)) {
            for (int i = 0; i < n_nodes; ++i) {
                tn[i] = nodes[i] - lambda * step[i];
                wn[i] = weights[i] - lambda * step[n_nodes + i];
                tn[i] = std::clamp(tn[i], a + eps, b - eps);
                if (!(wn[i] > 0.0)) wn[i] = 1e-6 * weights[i] + 1e-300;
            }
            // keep node ordering; sort node/weight pairs if crossed
            std::vector<int> order(n_nodes);
            for (int i = 0; i < n_nodes; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](int x, int y) { return tn[x] < tn[y]; });
            std::vector<double> ts(n_nodes), ws(n_nodes);
            for (int i = 0; i < n_nodes; ++i) {
                ts[i] = tn[order[i]];
                ws[i] = wn[order[i]];
            }
            double f1 = scaled_residual(ts, ws, nullptr);
            if (f1 < f0 * (1.0 - 1e-4 * lambda) || f1 < f0 * 0.999999) {
                nodes = ts;
                weights = ws;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) break; // stalled
        best_residual = std::min(best_residual, residual_unscaled(nodes, weights));
    }

    double final_residual = residual_unscaled(nodes, weights);
    if (final_residual > 1e-10 * m_scale) {
        std::ostringstream os;
        os << "markov_quadrature: no convergence, best residual "
           << std::min(best_residual, final_residual) << " vs tol "
           << 1e-10 * m_scale;
        throw NoConvergence(os.str());
    }
    for (int i = 0; i < n_nodes; ++i) {
        if (!(weights[i] > 0.0))
            throw NonPositiveWeight("markov_quadrature: non-positive weight");
        if (!(nodes[i] > a && nodes[i] < b))
            throw NodeEscape("markov_quadrature: node left the open interval");
    }
    std::vector<Atom> atoms(n_nodes);
    for (int i = 0; i < n_nodes; ++i) atoms[i] = {nodes[i], weights[i]};
    return UnivariateMeasure::from_atoms(a, b, std::move(atoms));
}

ChebyshevBasis annulus_basis(int k, int s, double a, double b) {
    if (k < 0 || s < 1) throw Error("annulus_basis: k >= 0, s >= 1 required");
    // exponent multiset {2j - k, 2j + k : j = 0..2s-1}; collisions get an
    // extra log factor per repeat
    std::vector<int> exps;
    for (int j = 0; j < 2 * s; ++j) {
        exps.push_back(2 * j - k);
        exps.push_back(2 * j + k);
    }
    std::sort(exps.begin(), exps.end());
    ChebyshevBasis basis;
    basis.a = a;
    basis.b = b;
    int log_power = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        int e = exps[i];
        log_power = (i > 0 && exps[i - 1] == e) ? log_power + 1 : 0;
        const double de = e;
        const int lp = log_power;
        std::ostringstream label;
        label << "r^" << e;
        if (lp == 1) label << " log r";
        if (lp > 1) label << " log^" << lp << " r";
        basis.functions.push_back(
            {[de, lp](double r) { return std::pow(r, de) * std::pow(std::log(r), lp); },
             [de, lp](double r) {
                 double lr = std::log(r);
                 double v = de * std::pow(r, de - 1.0) * std::pow(lr, lp);
                 if (lp > 0) v += lp * std::pow(r, de - 1.0) * std::pow(lr, lp - 1);
                 return v;
             },
             label.str()});
    }
    return basis;
}

ChebyshevBasis strip_basis(int k_abs, int s, double a, double b) {
    if (k_abs < 0 || s < 1) throw Error("strip_basis: k_abs >= 0, s >= 1 required");
    ChebyshevBasis basis;
    basis.a = a;
    basis.b = b;
    if (k_abs == 0) {
        for (int j = 0; j < 4 * s; ++j) {
            const double dj = j;
            std::ostringstream label;
            label << "t^" << j;
            basis.functions.push_back(
                {[dj](double t) { return std::pow(t, dj); },
                 [dj](double t) { return dj == 0.0 ? 0.0 : dj * std::pow(t, dj - 1.0); },
                 label.str()});
        }
        return basis;
    }
    for (int sign : {-1, +1})
        for (int j = 0; j < 2 * s; ++j) {
            const double rate = sign * k_abs;
            const double dj = j;
            std::ostringstream label;
            label << "t^" << j << " e^(" << rate << " t)";
            basis.functions.push_back(
                {[dj, rate](double t) { return std::pow(t, dj) * std::exp(rate * t); },
                 [dj, rate](double t) {
                     double e = std::exp(rate * t);
                     double v = rate * std::pow(t, dj) * e;
                     if (dj > 0.0) v += dj * std::pow(t, dj - 1.0) * e;
                     return v;
                 },
                 label.str()});
        }
    return basis;
}

Cubature build_annulus_cubature(const PseudoPositiveMeasure& mu, int s) {
    if (!(mu.rho > 0.0))
        throw InvalidSupport("build_annulus_cubature: rho must be positive");
    if (s < 1) throw Error("build_annulus_cubature: s must be >= 1");
    Cubature cub;
    cub.order = s;
    cub.rho = mu.rho;
    cub.R = mu.R;
    cub.kind = CubatureKind::Annulus;
    for (const auto& [idx, m] : mu.components) {
        if (m.is_atomic() && m.atom_count() <= 2 * static_cast<std::size_t>(s)) {
            cub.components.emplace(idx, m);
            continue;
        }
        ChebyshevBasis basis = annulus_basis(idx.k, s, mu.rho, mu.R);
        if (idx.k < 4 * s) {
            TplusVerdict cert = verify_tplus(basis, 64);
            if (!cert.pass) {
                std::ostringstream os;
                os << "WeakTplus: component (" << idx.k << "," << idx.l
                   << ") failed the numerical T+ certificate (min det "
                   << cert.min_det << ")";
                cub.warnings.push_back(os.str());
            }
        }
        std::vector<double> moments;
        for (const auto& u : basis.functions)
            moments.push_back(generalized_moment(m, u.f));
        cub.components.emplace(
            idx, markov_quadrature(basis, moments, mu.rho, mu.R, s));
    }
    return cub;
}

double annulus_integrate(
    const std::map<ComponentIndex, UnivariateMeasure>& components,
    const std::map<ComponentIndex, std::function<double(double)>>& f_components) {
    double total = 0.0;
    for (const auto& [idx, g] : f_components) {
        auto it = components.find(idx);
        if (it == components.end()) continue;
        total += generalized_moment(it->second, g);
    }
    return total;
}

std::map<int, UnivariateMeasure>
build_strip_cubature(const std::map<int, UnivariateMeasure>& components, int s,
                     double a, double b) {
    if (s < 1) throw Error("build_strip_cubature: s must be >= 1");
    std::map<int, UnivariateMeasure> out;
    for (const auto& [k, m] : components) {
        if (m.is_atomic() && m.atom_count() <= 2 * static_cast<std::size_t>(s)) {
            out.emplace(k, m);
            continue;
        }
        ChebyshevBasis basis = strip_basis(std::abs(k), s, a, b);
        std::vector<double> moments;
        for (const auto& u : basis.functions)
            moments.push_back(generalized_moment(m, u.f));
        out.emplace(k, markov_quadrature(basis, moments, a, b, s));
    }
    return out;
}

double strip_integrate(const std::map<int, UnivariateMeasure>& components,
                       const std::function<double(double, double)>& f, int M) {
    int k_needed = 0;
    for (const auto& [k, m] : components) k_needed = std::max(k_needed, std::abs(k));
    if (M < 4 * k_needed + 4)
        throw InsufficientSamples("strip_integrate: M < 4 k_max + 4");
    // trapezoid coefficients carry an absolute noise floor ~eps * sup|f|;
    // cap refinement there so identically-zero modes terminate
    double f_scale = 0.0;
    for (const auto& [k, m] : components)
        for (int i = 0; i <= 8; ++i) {
            double t = m.lower() + (m.upper() - m.lower()) * i / 8.0;
            for (int j = 0; j < 8; ++j)
                f_scale = std::max(
                    f_scale, std::fabs(f(t, 2.0 * std::numbers::pi * j / 8.0)));
        }
    const double abs_tol = 1e-12 * (1.0 + f_scale);
    std::complex<double> total = 0.0;
    for (const auto& [k, m] : components) {
        const int mode = k;
        // f_k(t) = (1/2pi) int f(t,y) e^{-i k y} dy by M-point trapezoid
        auto re_part = [&](double t) {
            std::complex<double> s = 0.0;
            for (int j = 0; j < M; ++j) {
                double y = 2.0 * std::numbers::pi * j / M;
                s += f(t, y) * std::exp(std::complex<double>(0.0, -mode * y));
            }
            return s / static_cast<double>(M);
        };
        double re = generalized_moment(
            m, [&](double t) { return re_part(t).real(); }, 1e-12, abs_tol);
        double im = generalized_moment(
            m, [&](double t) { return re_part(t).imag(); }, 1e-12, abs_tol);
        total += std::complex<double>(re, im);
    }
    return total.real();
}

} // namespace phgj
