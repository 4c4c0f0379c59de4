#include "phgj/linalg.hpp"
#include "phgj/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace phgj {

std::vector<double> solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows;
    if (a.cols != n || b.size() != n) throw Error("solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) throw Error("solve: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            double m = a(r, col) / a(col, col);
            if (m == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= m * a(col, j);
            b[r] -= m * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

double determinant(Matrix a) {
    const std::size_t n = a.rows;
    if (a.cols != n) throw Error("determinant: non-square");
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            double m = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= m * a(col, j);
        }
    }
    return det;
}

std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b) {
    const std::size_t m = a.rows, n = a.cols;
    if (b.size() != m) throw Error("least_squares: shape mismatch");
    Matrix ata(n, n);
    std::vector<double> atb(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < m; ++r) s += a(r, i) * a(r, j);
            ata(i, j) = s;
        }
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += a(r, i) * b[r];
        atb[i] = s;
    }
    // tiny Tikhonov term keeps the normal equations solvable for rank-deficient
    // starts; the Newton refinement downstream removes the bias
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += ata(i, i);
    for (std::size_t i = 0; i < n; ++i) ata(i, i) += 1e-14 * (trace / n + 1.0);
    return solve(ata, atb);
}

std::vector<double> symmetric_eigenvalues(Matrix a) {
    const std::size_t n = a.rows;
    if (a.cols != n) throw Error("symmetric_eigenvalues: non-square");
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a(p, q)) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

TridiagEigen tridiagonal_eigen(std::vector<double> d, std::vector<double> e,
                               int max_iter_per_eigenvalue) {
    const int n = static_cast<int>(d.size());
    TridiagEigen out;
    if (n == 0) return out;
    if (static_cast<int>(e.size()) != n - 1 && n > 1)
        throw Error("tridiagonal_eigen: off-diagonal size mismatch");
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    e.push_back(0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == max_iter_per_eigenvalue)
                    throw Error("tridiagonal_eigen: QL iteration cap reached");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]); // Wilkinson shift
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    double zi = z[i], zi1 = z[i + 1];
                    z[i + 1] = s * zi + c * zi1;
                    z[i] = c * zi - s * zi1;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    out.values.resize(n);
    out.first_components.resize(n);
    for (int i = 0; i < n; ++i) {
        out.values[i] = d[order[i]];
        out.first_components[i] = z[order[i]];
    }
    return out;
}

} // namespace phgj
