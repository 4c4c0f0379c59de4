#include "phgj/laplace_fourier.hpp"
#include "phgj/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace phgj {

namespace harmonic2d {

double normalization(int k) {
    return k == 0 ? 1.0 / std::sqrt(2.0 * std::numbers::pi)
                  : 1.0 / std::sqrt(std::numbers::pi);
}

double unit_circle_value(const ComponentIndex& idx, double theta) {
    double trig = idx.l == 1 ? std::cos(idx.k * theta) : std::sin(idx.k * theta);
    return normalization(idx.k) * trig;
}

} // namespace harmonic2d

void BivariatePolynomial::add(int a, int b, double c) {
    if (c == 0.0) return;
    auto key = std::make_pair(a, b);
    auto [it, inserted] = coefficients.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) coefficients.erase(it);
    }
}

double BivariatePolynomial::eval(double x, double y) const {
    double s = 0.0;
    for (const auto& [ab, c] : coefficients)
        s += c * std::pow(x, ab.first) * std::pow(y, ab.second);
    return s;
}

double BivariatePolynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [ab, c] : coefficients) m = std::max(m, std::fabs(c));
    return m;
}

double LFPolynomial::component_eval(const ComponentIndex& idx, double t) const {
    auto it = components.find(idx);
    if (it == components.end()) return 0.0;
    double s = 0.0;
    for (std::size_t n = it->second.size(); n-- > 0;) s = s * t + it->second[n];
    return s;
}

namespace {

void trim(std::vector<double>& poly) {
    while (!poly.empty() && poly.back() == 0.0) poly.pop_back();
}

} // namespace

LFPolynomial lf_decompose(const BivariatePolynomial& p) {
    using cd = std::complex<double>;
    // substitute x = (z + zbar)/2, y = (z - zbar)/(2i) and collect z^m zbar^n
    std::map<std::pair<int, int>, cd> zpow; // (m, n) -> coefficient
    for (const auto& [ab, c] : p.coefficients) {
        const int a = ab.first, b = ab.second;
        // x^a = 2^-a sum_i C(a,i) z^i zbar^(a-i)
        // y^b = (2i)^-b sum_j C(b,j) z^j (-zbar)^(b-j)
        std::vector<cd> xterm(a + 1), yterm(b + 1);
        double binom = 1.0;
        for (int i = 0; i <= a; ++i) {
            xterm[i] = binom * std::pow(0.5, a);
            binom = binom * (a - i) / (i + 1.0);
        }
        cd inv2i = 1.0 / (cd(0.0, 2.0));
        binom = 1.0;
        for (int j = 0; j <= b; ++j) {
            double sign = ((b - j) % 2 == 0) ? 1.0 : -1.0;
            yterm[j] = binom * sign * std::pow(inv2i, b);
            binom = binom * (b - j) / (j + 1.0);
        }
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
                int m = i + j, n = (a - i) + (b - j);
                zpow[{m, n}] += c * xterm[i] * yterm[j];
            }
    }
    // z^m zbar^n = r^(m+n) e^(i (m-n) theta); collect per frequency q = m - n.
    // For q >= 0: coefficient of r^(m+n) cos|sin(q theta) from the pair
    // (q, -q); real polynomial input makes the collected sum real.
    LFPolynomial out;
    const double scale = p.max_abs_coefficient();
    for (const auto& [mn, c] : zpow) {
        const int m = mn.first, n = mn.second;
        const int q = m - n;
        if (q < 0) continue; // handled together with its conjugate
        const int deg_t = n; // r^(m+n) = r^q * (r^2)^n
        cd pos = c;
        auto conj_it = zpow.find({n, m});
        cd neg = q == 0 ? cd(0.0) : (conj_it != zpow.end() ? conj_it->second : cd(0.0));
        double cos_part, sin_part;
        if (q == 0) {
            cos_part = pos.real();
            sin_part = 0.0;
            if (std::fabs(pos.imag()) > 1e-13 * std::max(scale, 1.0))
                throw Error("lf_decompose: imaginary residue exceeds tolerance");
        } else {
            cd csum = pos + neg;       // coefficient of cos(q theta)
            cd ssum = (pos - neg) * cd(0.0, 1.0); // of sin(q theta)
            if (std::fabs(csum.imag()) > 1e-13 * std::max(scale, 1.0) ||
                std::fabs(ssum.imag()) > 1e-13 * std::max(scale, 1.0))
                throw Error("lf_decompose: imaginary residue exceeds tolerance");
            cos_part = csum.real();
            sin_part = ssum.real();
        }
        const double norm = harmonic2d::normalization(q);
        auto deposit = [&](int l, double v) {
            if (v == 0.0) return;
            auto& poly = out.components[{q, l}];
            if (static_cast<int>(poly.size()) <= deg_t) poly.resize(deg_t + 1, 0.0);
            poly[deg_t] += v / norm;
        };
        deposit(1, cos_part);
        deposit(2, sin_part);
    }
    // drop numerically zero components
    for (auto it = out.components.begin(); it != out.components.end();) {
        trim(it->second);
        bool tiny = true;
        for (double c : it->second)
            if (std::fabs(c) > 1e-14 * std::max(scale, 1.0)) tiny = false;
        if (tiny || it->second.empty())
            it = out.components.erase(it);
        else
            ++it;
    }
    return out;
}

BivariatePolynomial lf_recompose(const LFPolynomial& lf) {
    BivariatePolynomial out;
    for (const auto& [idx, poly] : lf.components) {
        // r^k cos(k t) = Re (x+iy)^k, r^k sin(k t) = Im (x+iy)^k:
        // expand once per component, then multiply by (x^2+y^2)^n per term.
        const int k = idx.k;
        std::vector<std::pair<std::pair<int, int>, double>> harm; // monomials
        double binom = 1.0;
        for (int i = 0; i <= k; ++i) {
            // term C(k,i) x^(k-i) (iy)^i
            int mod = i % 4;
            double re = (mod == 0) ? 1.0 : (mod == 2 ? -1.0 : 0.0);
            double im = (mod == 1) ? 1.0 : (mod == 3 ? -1.0 : 0.0);
            double part = idx.l == 1 ? re : im;
            if (part != 0.0) harm.push_back({{k - i, i}, binom * part});
            binom = binom * (k - i) / (i + 1.0);
        }
        const double norm = harmonic2d::normalization(k);
        for (std::size_t n = 0; n < poly.size(); ++n) {
            if (poly[n] == 0.0) continue;
            // (x^2 + y^2)^n expansion
            double nb = 1.0;
            for (std::size_t i = 0; i <= n; ++i) {
                for (const auto& [ab, hc] : harm)
                    out.add(ab.first + 2 * static_cast<int>(i),
                            ab.second + 2 * static_cast<int>(n - i),
                            poly[n] * norm * nb * hc);
                nb = nb * (n - i) / (i + 1.0);
            }
        }
    }
    return out;
}

int polyharmonic_order(const LFPolynomial& lf) {
    int max_deg = -1;
    for (const auto& [idx, poly] : lf.components)
        for (std::size_t n = 0; n < poly.size(); ++n)
            if (poly[n] != 0.0) max_deg = std::max(max_deg, static_cast<int>(n));
    return max_deg < 0 ? 1 : max_deg + 1;
}

std::map<ComponentIndex, double>
fourier_coefficients_sampled(const std::function<double(double, double)>& f,
                             double r, int K, int M) {
    if (M < 4 * K + 4)
        throw InsufficientSamples("fourier_coefficients_sampled: M < 4K+4");
    std::vector<double> samples(M);
    for (int m = 0; m < M; ++m)
        samples[m] = f(r, 2.0 * std::numbers::pi * m / M);
    std::map<ComponentIndex, double> out;
    const double h = 2.0 * std::numbers::pi / M;
    for (int k = 0; k <= K; ++k)
        for (int l = 1; l <= (k == 0 ? 1 : 2); ++l) {
            double s = 0.0;
            for (int m = 0; m < M; ++m)
                s += samples[m] *
                     harmonic2d::unit_circle_value({k, l}, 2.0 * std::numbers::pi * m / M);
            out[{k, l}] = s * h;
        }
    return out;
}

double fourier_coefficient_sampled(const std::function<double(double, double)>& f,
                                   double r, const ComponentIndex& idx, int M) {
    if (M < 4 * idx.k + 4)
        throw InsufficientSamples("fourier_coefficient_sampled: M < 4k+4");
    const double h = 2.0 * std::numbers::pi / M;
    double s = 0.0;
    for (int m = 0; m < M; ++m) {
        double theta = h * m;
        s += f(r, theta) * harmonic2d::unit_circle_value(idx, theta);
    }
    return s * h;
}

std::vector<double>
distributed_moments(const std::map<std::pair<int, int>, double>& raw_moments,
                    int k, int l, int jmax) {
    std::vector<double> out;
    out.reserve(jmax + 1);
    for (int j = 0; j <= jmax; ++j) {
        LFPolynomial single;
        std::vector<double> poly(j + 1, 0.0);
        poly[j] = 1.0;
        single.components[{k, l}] = std::move(poly);
        BivariatePolynomial expanded = lf_recompose(single);
        double s = 0.0;
        for (const auto& [ab, c] : expanded.coefficients) {
            auto it = raw_moments.find(ab);
            if (it == raw_moments.end())
                throw MissingMoment("distributed_moments: missing raw moment");
            s += c * it->second;
        }
        out.push_back(s);
    }
    return out;
}

} // namespace phgj
