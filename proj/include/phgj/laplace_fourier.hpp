#ifndef PHGJ_LAPLACE_FOURIER_HPP
#define PHGJ_LAPLACE_FOURIER_HPP

#include <functional>
#include <map>
#include <vector>

namespace phgj {

/// Harmonic component index: degree k >= 0, l = 1 (cos) or 2 (sin).
/// For d = 2 the degree-0 space is one-dimensional (l = 1 only).
struct ComponentIndex {
    int k = 0;
    int l = 1;
    auto operator<=>(const ComponentIndex&) const = default;
};

/// d=2 orthonormal circle harmonics:
///   Y_0          = 1/sqrt(2 pi)
///   Y_{k,1}(r,t) = r^k cos(k t) / sqrt(pi)
///   Y_{k,2}(r,t) = r^k sin(k t) / sqrt(pi)
namespace harmonic2d {
double unit_circle_value(const ComponentIndex& idx, double theta);
double normalization(int k); // 1/sqrt(2 pi) for k = 0, 1/sqrt(pi) otherwise
inline constexpr double surface_measure = 6.283185307179586476925286766559; // 2 pi
} // namespace harmonic2d

/// Real bivariate polynomial as a sparse monomial-coefficient map.
struct BivariatePolynomial {
    std::map<std::pair<int, int>, double> coefficients; // (a,b) -> c of x^a y^b

    void add(int a, int b, double c);
    double eval(double x, double y) const;
    double max_abs_coefficient() const;
};

/// Laplace-Fourier (Gauss-decomposed) form: per component (k,l) the
/// univariate polynomial p_{k,l} in t = r^2, so that
///   f(x) = sum p_{k,l}(r^2) r^k Y_{k,l}(unit)  (orthonormal basis).
struct LFPolynomial {
    std::map<ComponentIndex, std::vector<double>> components;

    double component_eval(const ComponentIndex& idx, double t) const;
};

LFPolynomial lf_decompose(const BivariatePolynomial& p);
BivariatePolynomial lf_recompose(const LFPolynomial& lf);

/// Minimal s >= 1 with Delta^s P = 0: 1 + max component degree.
int polyharmonic_order(const LFPolynomial& lf);

/// Laplace-Fourier coefficients f_{k,l}(r) of a sampled function on the
/// circle of radius r, by M-point trapezoid. Requires M >= 4K + 4.
std::map<ComponentIndex, double>
fourier_coefficients_sampled(const std::function<double(double, double)>& f,
                             double r, int K, int M);

/// Single Laplace-Fourier coefficient at radius r (same trapezoid rule).
double fourier_coefficient_sampled(const std::function<double(double, double)>& f,
                                   double r, const ComponentIndex& idx, int M);

/// Distributed moments c_j^{(k,l)} = T(|x|^{2j} Y_{k,l}) for j = 0..jmax,
/// contracted against a raw monomial moment table. Throws MissingMoment if a
/// required monomial entry is absent.
std::vector<double>
distributed_moments(const std::map<std::pair<int, int>, double>& raw_moments,
                    int k, int l, int jmax);

} // namespace phgj

#endif
