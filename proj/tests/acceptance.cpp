// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] = CLI binary, argv[2] = directory with measure specs.
#include "phgj/builtins.hpp"
#include "phgj/chebsys.hpp"
#include "phgj/cubature.hpp"
#include "phgj/error_bounds.hpp"
#include "phgj/orthopoly.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace phgj;

namespace {

constexpr double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);
const double sqrt_2pi = std::sqrt(2.0 * pi);

std::string g_cli;
std::string g_specs;

// ---- independent oracles -------------------------------------------------

// Legendre value and derivative on [-1,1] by the three-term recurrence
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (n == 0) { p = 1.0; dp = 0.0; return; }
    for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (p0 - x * p1) / (1.0 - x * x);
}

// n-point Gauss rule for Lebesgue on [0,1] by Newton root-finding on the
// Legendre polynomial, independent of the library's recurrence machinery
std::vector<Atom> gauss_legendre_oracle(int n) {
    std::vector<Atom> out;
    for (int i = 1; i <= n; ++i) {
        double x = std::cos(pi * (i - 0.25) / (n + 0.5));
        double p, dp;
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, p, dp);
            double step = p / dp;
            x -= step;
            if (std::fabs(step) < 1e-15) break;
        }
        legendre(n, x, p, dp);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push_back({(1.0 - x) / 2.0, w / 2.0}); // roots found in descending x
    }
    std::sort(out.begin(), out.end(),
              [](const Atom& u, const Atom& v) { return u.node < v.node; });
    return out;
}

// adaptive Simpson on [0,1], independent of the library integrators
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth > 28 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, tol / 2.0, depth + 1) +
           simpson(f, m, b, fm, frm, fb, tol / 2.0, depth + 1);
}

double integrate01(const std::function<double(double)>& f, double tol) {
    return simpson(f, 0.0, 1.0, f(0.0), f(0.5), f(1.0), tol, 0);
}

// reference value of the integral of e^{r cos theta} against the damped
// kernel measure truncated at K, via the modified-Bessel cosine expansion
double bessel_reference(double alpha, int K, double tol) {
    double total = 2.0 * pi * integrate01(
                                  [alpha](double r) {
                                      return std::cyl_bessel_i(0, r) * r *
                                             (1.0 - std::pow(r, alpha));
                                  },
                                  tol);
    for (int k = 1; k <= K; ++k)
        total += 4.0 * pi * integrate01(
                                [alpha, k](double r) {
                                    return std::cyl_bessel_i(k, r) *
                                           std::pow(r, k + 1) *
                                           (1.0 - std::pow(r, alpha));
                                },
                                tol);
    return total;
}

// sup over [0,1] of the 2s-th derivative of g_k(t) = f_{k,1}(sqrt t) t^{-k/2}
// for f = e^{r cos theta}; all series terms are positive so the sup sits at
// t = 1. Series from I_k(r) = sum (r/2)^{k+2m} / (m! (m+k)!).
double exp_x_deriv_sup(int k, int s) {
    const double c = k == 0 ? sqrt_2pi : 2.0 * sqrt_pi;
    double sum = 0.0;
    for (int m = 2 * s; m < 2 * s + 60; ++m) {
        double lg = -(k + 2.0 * m) * std::log(2.0) - std::lgamma(m - 2 * s + 1.0) -
                    std::lgamma(m + k + 1.0);
        sum += std::exp(lg);
    }
    return c * sum;
}

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(1e-300, std::fabs(want));
}

int run_cmd(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---- criteria ------------------------------------------------------------

bool criterion_gauss_rules() {
    auto leb = UnivariateMeasure::from_density(0.0, 1.0, [](double) { return 1.0; });
    for (int s = 1; s <= 10; ++s) {
        auto got = gauss_jacobi(leb, s);
        auto want = gauss_legendre_oracle(s);
        if (got.atom_count() != want.size()) return false;
        for (int i = 0; i < s; ++i) {
            if (std::fabs(got.atoms()[i].node - want[i].node) > 1e-12) return false;
            if (rel_err(got.atoms()[i].weight, want[i].weight) > 1e-12) return false;
        }
    }
    return true;
}

bool criterion_component_moments() {
    for (double alpha : {1.0, 2.0, 3.0}) {
        auto mu = builtins::poisson_alpha(alpha, 20);
        for (int k = 0; k <= 20; ++k) {
            double got = power_moment(mu.components.at({k, 1}), 0, -k);
            // k = 0 carries the orthonormal radial normalization, which is
            // the k >= 1 constant divided by sqrt(2)
            double c = k == 0 ? sqrt_2pi : 2.0 * sqrt_pi;
            double want = c * alpha / ((k + 2.0) * (alpha + k + 2.0));
            if (rel_err(got, want) > 1e-10) return false;
        }
    }
    return true;
}

bool criterion_norm_formula() {
    for (int s = 1; s <= 5; ++s)
        for (int k : {0, 1, 2, 3, 5, 8, 12, 16, 20}) {
            auto m = UnivariateMeasure::from_density(0.0, 1.0, [k](double t) {
                return (1.0 - t) * std::pow(t, k);
            });
            double got = monic_norm_sq(recurrence_from_measure(m, s + 1), s);
            if (rel_err(got, jacobi_norm_closed_form(s, k)) > 1e-8) return false;
        }
    // the norms behave like (k + shift)^-(2s+2); a plain log-log fit over
    // k in [10, 60] is biased by the shift, so fit the exponent and the
    // shift jointly through three computed samples from that range
    auto decay_exponent = [](const double k[3], const double y[3]) {
        auto p01 = [&](double c) {
            return (y[0] - y[1]) / std::log((k[1] + c) / (k[0] + c));
        };
        auto g = [&](double c) {
            return p01(c) - (y[1] - y[2]) / std::log((k[2] + c) / (k[1] + c));
        };
        double lo = 0.0, hi = 64.0, glo = g(lo);
        if (glo * g(hi) > 0.0) return p01(0.0);
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (g(mid) * glo <= 0.0) hi = mid; else lo = mid;
        }
        return p01(0.5 * (lo + hi));
    };
    for (int s = 1; s <= 5; ++s) {
        const double ks[3] = {10.0, 25.0, 60.0};
        double ys[3];
        for (int i = 0; i < 3; ++i) {
            int k = static_cast<int>(ks[i]);
            auto m = UnivariateMeasure::from_density(0.0, 1.0, [k](double t) {
                return (1.0 - t) * std::pow(t, k);
            });
            ys[i] = std::log(monic_norm_sq(recurrence_from_measure(m, s + 1), s));
        }
        if (std::fabs(decay_exponent(ks, ys) - (2.0 * s + 2.0)) > 0.2) return false;
    }
    return true;
}

bool criterion_exactness() {
    auto mu = builtins::poisson_alpha(2.0, 12);
    std::map<int, Cubature> cubs;
    for (int s : {1, 2, 3}) cubs.emplace(s, build_cubature(mu, s));
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> pick_k(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        int s = 1 + trial % 3;
        LFPolynomial f;
        for (int c = 0; c < 5; ++c) {
            int k = pick_k(rng);
            std::vector<double> p(2 * s);
            for (double& v : p) v = coef(rng);
            f.components[{k, 1}] = p;
        }
        double lhs = integrate_lf(cubs.at(s), f);
        double rhs = integrate_lf(mu, f);
        if (std::fabs(lhs - rhs) > 1e-9 * (1.0 + std::fabs(rhs))) return false;
    }
    return true;
}

bool criterion_extremal_inequality() {
    for (double alpha : {1.0, 2.0, 3.0}) {
        auto mu = builtins::poisson_alpha(alpha, 12);
        for (int s : {1, 2, 3, 4}) {
            auto cub = build_cubature(mu, s);
            for (const auto& rep : verify_chebyshev_inequality(mu, cub))
                if (!rep.pass) return false;
        }
    }
    return true;
}

bool criterion_cardinality() {
    auto mu = builtins::poisson_alpha(2.0, 12);
    for (int s : {1, 2, 3}) {
        auto cub = build_cubature(mu, s);
        for (const auto& [idx, comp] : cub.components)
            if (comp.atom_count() > static_cast<std::size_t>(s)) return false;
    }

    PseudoPositiveMeasure ann;
    ann.rho = 0.5;
    ann.R = 1.0;
    ann.components.emplace(ComponentIndex{3, 1},
                           UnivariateMeasure::from_density(
                               0.5, 1.0, [](double r) { return r; }));
    for (int s : {1, 2}) {
        auto cub = build_annulus_cubature(ann, s);
        for (const auto& [idx, comp] : cub.components)
            if (comp.atom_count() > static_cast<std::size_t>(2 * s)) return false;
    }

    std::map<int, UnivariateMeasure> strip;
    strip.emplace(0, UnivariateMeasure::from_density(0.0, 1.0,
                                                     [](double) { return 1.0; }));
    strip.emplace(2, UnivariateMeasure::from_density(0.0, 1.0,
                                                     [](double) { return 0.5; }));
    for (int s : {1, 2}) {
        auto cub = build_strip_cubature(strip, s, 0.0, 1.0);
        for (const auto& [k, comp] : cub)
            if (comp.atom_count() > static_cast<std::size_t>(2 * s)) return false;
    }
    return true;
}

bool criterion_convergence() {
    const int K = 16;
    auto mu = builtins::poisson_alpha(2.0, K);
    double ref = bessel_reference(2.0, K, 1e-14);
    double ref_coarse = bessel_reference(2.0, K, 1e-13);
    if (std::fabs(ref - ref_coarse) > 1e-11 * (1.0 + std::fabs(ref))) return false;
    auto f = builtins::integrand("exp_x");
    auto rows = convergence_table(mu, f, {2, 8}, ref, 256);
    return rows[1].abs_error < rows[0].abs_error && rows[1].abs_error <= 1e-7;
}

bool criterion_error_bound_soundness() {
    const int K = 8;
    auto mu = builtins::poisson_alpha(2.0, K);
    for (int s : {1, 2}) {
        auto cub = build_cubature(mu, s);

        // radial monomial corpus r^{2m}: g(t) = sqrt(2 pi) t^m
        for (int m = 0; m <= 5; ++m) {
            LFPolynomial f;
            std::vector<double> p(m + 1, 0.0);
            p[m] = sqrt_2pi;
            f.components[{0, 1}] = p;
            double exact = 2.0 * pi * (1.0 / (2.0 * m + 2.0) - 1.0 / (2.0 * m + 4.0));
            double observed = std::fabs(exact - integrate_lf(cub, f));
            std::map<ComponentIndex, double> sups;
            for (const auto& [idx, comp] : mu.components) sups[idx] = 0.0;
            if (m >= 2 * s)
                sups[{0, 1}] =
                    sqrt_2pi * std::exp(std::lgamma(m + 1.0) -
                                        std::lgamma(m - 2.0 * s + 1.0));
            // the bound is attained exactly at m = 2s; allow roundoff ties.
            // zero-bound cases are exact up to roundoff, not dominated
            auto rep = markov_bound(mu, s, sups);
            if (rep.total_bound == 0.0) {
                if (observed > 1e-9) return false;
            } else if (rep.total_bound < observed * (1.0 - 1e-12)) {
                return false;
            }
        }

        // entire corpus e^{r cos theta} with exact per-component sups
        double exact = bessel_reference(2.0, K, 1e-14);
        double observed =
            std::fabs(exact - integrate_function(cub, builtins::integrand("exp_x"),
                                                 256));
        std::map<ComponentIndex, double> sups;
        for (const auto& [idx, comp] : mu.components)
            sups[idx] = exp_x_deriv_sup(idx.k, s);
        auto rep = markov_bound(mu, s, sups);
        if (rep.total_bound < observed) return false;
    }
    return true;
}

bool criterion_chebsys_quadrature() {
    auto residual_ok = [](const ChebyshevBasis& basis, const UnivariateMeasure& gen,
                          int s) {
        std::vector<double> m;
        double norm = 0.0;
        for (const auto& u : basis.functions) {
            m.push_back(generalized_moment(gen, u.f));
            norm = std::max(norm, std::fabs(m.back()));
        }
        auto q = markov_quadrature(basis, m, basis.a, basis.b, s);
        if (q.atom_count() != static_cast<std::size_t>(2 * s)) return false;
        for (std::size_t j = 0; j < m.size(); ++j) {
            double acc = 0.0;
            for (const Atom& at : q.atoms())
                acc += at.weight * basis.functions[j].f(at.node);
            if (std::fabs(acc - m[j]) > 1e-10 * norm) return false;
        }
        for (const Atom& at : q.atoms())
            if (!(at.weight > 0.0 && at.node > basis.a && at.node < basis.b))
                return false;
        return true;
    };

    // polynomial bases, cross-checked against the Gauss construction
    auto gen = UnivariateMeasure::from_density(0.1, 0.9,
                                               [](double t) { return 1.0 + t; });
    for (int s : {1, 2}) {
        ChebyshevBasis poly = strip_basis(0, s, 0.1, 0.9);
        std::vector<double> m;
        for (const auto& u : poly.functions)
            m.push_back(generalized_moment(gen, u.f));
        auto q = markov_quadrature(poly, m, 0.1, 0.9, s);
        auto g = gauss_jacobi(gen, 2 * s);
        if (q.atom_count() != g.atom_count()) return false;
        for (std::size_t i = 0; i < q.atom_count(); ++i) {
            if (std::fabs(q.atoms()[i].node - g.atoms()[i].node) > 1e-10)
                return false;
            if (rel_err(q.atoms()[i].weight, g.atoms()[i].weight) > 1e-10)
                return false;
        }
        if (!residual_ok(poly, gen, s)) return false;
    }

    auto radial = UnivariateMeasure::from_density(0.5, 1.0,
                                                  [](double r) { return r; });
    for (int s : {1, 2})
        for (int k : {5, 8, 12})
            if (!residual_ok(annulus_basis(k, s, 0.5, 1.0), radial, s)) return false;

    auto axis = UnivariateMeasure::from_density(0.0, 1.0, [](double) { return 1.0; });
    for (int s : {1, 2})
        for (int k : {0, 1, 2})
            if (!residual_ok(strip_basis(k, s, 0.0, 1.0), axis, s)) return false;
    return true;
}

bool criterion_annulus_strip_exactness() {
    PseudoPositiveMeasure ann;
    ann.rho = 0.5;
    ann.R = 1.0;
    ann.components.emplace(ComponentIndex{3, 1},
                           UnivariateMeasure::from_density(
                               0.5, 1.0, [](double r) { return r; }));
    for (int s : {1, 2}) {
        auto cub = build_annulus_cubature(ann, s);
        auto basis = annulus_basis(3, s, 0.5, 1.0);
        for (const auto& u : basis.functions) {
            std::map<ComponentIndex, std::function<double(double)>> g;
            g[{3, 1}] = u.f;
            double lhs = annulus_integrate(cub.components, g);
            double rhs = annulus_integrate(ann.components, g);
            if (rel_err(lhs, rhs) > 1e-8) return false;
        }
    }

    std::map<int, UnivariateMeasure> strip;
    auto leb = UnivariateMeasure::from_density(0.0, 1.0, [](double) { return 1.0; });
    auto half = UnivariateMeasure::from_density(0.0, 1.0, [](double) { return 0.5; });
    strip.emplace(0, leb);
    strip.emplace(2, half);
    strip.emplace(-2, half);
    auto cub = build_strip_cubature(strip, 1, 0.0, 1.0);
    auto basis = strip_basis(2, 1, 0.0, 1.0);
    for (const auto& u : basis.functions) {
        auto f = [&u](double t, double y) { return u.f(t) * std::cos(2.0 * y); };
        double lhs = strip_integrate(cub, f, 64);
        double rhs = strip_integrate(strip, f, 64);
        if (rel_err(lhs, rhs) > 1e-8) return false;
    }
    double exact = (1.0 - std::exp(-2.0)) / 4.0;
    auto sep = [](double t, double y) { return std::exp(-2.0 * t) * std::cos(2.0 * y); };
    return rel_err(strip_integrate(cub, sep, 64), exact) <= 1e-8;
}

bool criterion_summability() {
    if (!summability_report(builtins::poisson_plain(16)).divergence_flag)
        return false;
    for (double alpha : {1.0, 2.0, 3.0})
        if (summability_report(builtins::poisson_alpha(alpha, 16)).divergence_flag)
            return false;
    int rc_plain = run_cmd(g_cli + " check " + g_specs +
                           "/poisson_plain.json > /dev/null 2>&1");
    int rc_damped = run_cmd(g_cli + " check " + g_specs +
                            "/poisson_alpha2.json > /dev/null 2>&1");
    return rc_plain == 1 && rc_damped == 0;
}

bool criterion_determinism() {
    namespace fs = std::filesystem;
    fs::path tmp = fs::path("acceptance_tmp");
    fs::create_directories(tmp);
    auto p = [&](const char* name) { return (tmp / name).string(); };

    std::string spec = g_specs + "/poisson_alpha2.json";
    for (const char* out : {"b1.json", "b2.json"})
        if (run_cmd(g_cli + " build " + spec + " --order 3 --out " + p(out) +
                    " > /dev/null 2>&1") != 0)
            return false;
    if (slurp(p("b1.json")).empty() || slurp(p("b1.json")) != slurp(p("b2.json")))
        return false;

    for (const char* out : {"c1.csv", "c2.csv"})
        if (run_cmd(g_cli + " converge " + spec +
                    " --function exp_x --orders 1..6 --out " + p(out) +
                    " > /dev/null 2>&1") != 0)
            return false;
    return !slurp(p("c1.csv")).empty() && slurp(p("c1.csv")) == slurp(p("c2.csv"));
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <specs-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_specs = argv[2];

    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {"01 gauss rules match the root-finding oracle", criterion_gauss_rules},
        {"02 damped-kernel component moments", criterion_component_moments},
        {"03 closed-form norms and decay rate", criterion_norm_formula},
        {"04 exactness on random component polynomials", criterion_exactness},
        {"05 componentwise extremal inequality", criterion_extremal_inequality},
        {"06 support cardinality", criterion_cardinality},
        {"07 convergence for an entire integrand", criterion_convergence},
        {"08 error bound soundness", criterion_error_bound_soundness},
        {"09 chebyshev-system quadrature residuals", criterion_chebsys_quadrature},
        {"10 annulus and cylinder exactness", criterion_annulus_strip_exactness},
        {"11 summability flags", criterion_summability},
        {"12 byte-identical CLI outputs", criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << c.name << ": FAIL (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << c.name << (ok ? ": PASS" : ": FAIL") << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
