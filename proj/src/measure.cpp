#include "phgj/measure.hpp"
#include "phgj/errors.hpp"
#include "phgj/linalg.hpp"
#include "phgj/quad.hpp"

#include <algorithm>
#include <cmath>

namespace phgj {

UnivariateMeasure UnivariateMeasure::from_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw InvalidSupport("atomic measure needs at least one atom");
    double lo = atoms.front().node, hi = atoms.front().node;
    for (const Atom& at : atoms) {
        lo = std::min(lo, at.node);
        hi = std::max(hi, at.node);
    }
    return from_atoms(lo, hi, std::move(atoms));
}

UnivariateMeasure UnivariateMeasure::from_atoms(double a, double b,
                                                std::vector<Atom> atoms) {
    if (!(0.0 <= a && a <= b) || !std::isfinite(b))
        throw InvalidSupport("support must satisfy 0 <= a <= b < inf");
    if (atoms.empty()) throw InvalidSupport("atomic measure needs at least one atom");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return x.node < y.node; });
    const double merge_tol = 1e-14 * (b - a);
    std::vector<Atom> merged;
    for (const Atom& at : atoms) {
        if (!(at.weight > 0.0))
            throw InvalidSupport("atomic weights must be strictly positive");
        if (at.node < a - merge_tol || at.node > b + merge_tol)
            throw InvalidSupport("atom node outside support interval");
        if (!merged.empty() && at.node - merged.back().node <= merge_tol)
            merged.back().weight += at.weight;
        else
            merged.push_back(at);
    }
    UnivariateMeasure m;
    m.kind_ = Kind::Atomic;
    m.a_ = a;
    m.b_ = b;
    m.atoms_ = std::move(merged);
    return m;
}

UnivariateMeasure UnivariateMeasure::from_density(
    double a, double b, std::function<double(double)> density) {
    if (!(0.0 <= a && a < b) || !std::isfinite(b))
        throw InvalidSupport("support must satisfy 0 <= a < b < inf");
    const int grid = 64;
    double max_abs = 0.0, min_val = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double t = a + (b - a) * (i + 0.5) / (grid + 1);
        double v = density(t);
        if (!std::isfinite(v)) throw InvalidSupport("density not finite on grid");
        max_abs = std::max(max_abs, std::fabs(v));
        min_val = std::min(min_val, v);
    }
    if (min_val < -1e-10 * std::max(max_abs, 1.0))
        throw InvalidSupport("density negative on verification grid");
    UnivariateMeasure m;
    m.kind_ = Kind::Density;
    m.a_ = a;
    m.b_ = b;
    m.density_ = std::move(density);
    return m;
}

double power_moment(const UnivariateMeasure& m, int j, int exponent_shift,
                    double rel_tol) {
    if (j < 0) throw Error("power_moment: j must be >= 0");
    const int p = j + exponent_shift;
    if (m.is_atomic()) {
        if (exponent_shift < 0)
            for (const Atom& at : m.atoms())
                if (!(at.node > 0.0))
                    throw InvalidSupport("negative power moment of atom at 0");
        double s = 0.0;
        for (const Atom& at : m.atoms()) s += at.weight * std::pow(at.node, p);
        return s;
    }
    auto integrand = [&m, p](double t) {
        if (t <= 0.0) return 0.0; // density vanishes fast enough by precondition
        double w = m.density_at(t);
        if (w == 0.0) return 0.0; // avoid 0 * inf for negative p near t = 0
        return std::pow(t, p) * w;
    };
    return adaptive_integrate(integrand, m.lower(), m.upper(), rel_tol).value;
}

double generalized_moment(const UnivariateMeasure& m,
                          const std::function<double(double)>& u,
                          double rel_tol, double abs_tol) {
    if (m.is_atomic()) {
        double s = 0.0;
        for (const Atom& at : m.atoms()) s += at.weight * u(at.node);
        return s;
    }
    auto integrand = [&](double t) { return u(t) * m.density_at(t); };
    return adaptive_integrate(integrand, m.lower(), m.upper(), rel_tol, abs_tol)
        .value;
}

namespace {

double min_hankel_eigenvalue(const std::vector<double>& c, std::size_t offset,
                             double* frob_out) {
    // largest p with 2p + offset <= last index
    const std::size_t last = c.size() - 1;
    if (last < offset) {
        *frob_out = 0.0;
        return 0.0;
    }
    const std::size_t p = (last - offset) / 2;
    Matrix h(p + 1, p + 1);
    double frob = 0.0;
    for (std::size_t i = 0; i <= p; ++i)
        for (std::size_t j = 0; j <= p; ++j) {
            double v = c[i + j + offset];
            h(i, j) = v;
            frob += v * v;
        }
    *frob_out = std::sqrt(frob);
    return symmetric_eigenvalues(h).front();
}

} // namespace

StieltjesVerdict stieltjes_check(const MomentSequence& c) {
    if (c.values.size() < 2) throw TooShort("stieltjes_check needs >= 2 moments");
    double frob_h = 0.0, frob_hs = 0.0;
    double min_h = min_hankel_eigenvalue(c.values, 0, &frob_h);
    double min_hs = min_hankel_eigenvalue(c.values, 1, &frob_hs);
    StieltjesVerdict v;
    v.min_eigenvalue_h = min_h;
    v.min_eigenvalue_hshift = min_hs;
    v.is_positive_definite = min_h >= -1e-10 * frob_h;
    v.is_stieltjes = v.is_positive_definite && min_hs >= -1e-10 * frob_hs;
    return v;
}

UnivariateMeasure image_measure(const UnivariateMeasure& m, MeasureMap map) {
    if (m.lower() < 0.0) throw InvalidSupport("image_measure: negative support");
    if (m.is_atomic()) {
        std::vector<Atom> mapped;
        mapped.reserve(m.atom_count());
        for (const Atom& at : m.atoms()) {
            double node = map == MeasureMap::Square ? at.node * at.node
                                                    : std::sqrt(at.node);
            mapped.push_back({node, at.weight});
        }
        double a = map == MeasureMap::Square ? m.lower() * m.lower()
                                             : std::sqrt(m.lower());
        double b = map == MeasureMap::Square ? m.upper() * m.upper()
                                             : std::sqrt(m.upper());
        return UnivariateMeasure::from_atoms(a, b, std::move(mapped));
    }
    // density w(t)dt: under t -> t^2 the image density on [a^2,b^2] is
    // w(sqrt(u)) / (2 sqrt(u)); under t -> sqrt(t) it is w(u^2) * 2u.
    const UnivariateMeasure src = m;
    if (map == MeasureMap::Square) {
        double a2 = m.lower() * m.lower(), b2 = m.upper() * m.upper();
        return UnivariateMeasure::from_density(a2, b2, [src](double u) {
            if (u <= 0.0) return 0.0;
            double r = std::sqrt(u);
            return src.density_at(r) / (2.0 * r);
        });
    }
    double sa = std::sqrt(m.lower()), sb = std::sqrt(m.upper());
    return UnivariateMeasure::from_density(sa, sb, [src](double u) {
        return src.density_at(u * u) * 2.0 * u;
    });
}

} // namespace phgj
