#ifndef PHGJ_MEASURE_HPP
#define PHGJ_MEASURE_HPP

#include <functional>
#include <string>
#include <vector>

namespace phgj {

struct Atom {
    double node;
    double weight;
};

/// Non-negative univariate measure on a compact interval [a,b] of [0,inf).
/// Either finitely atomic or given by a density callable. Immutable after
/// construction; build through the factories, which validate invariants.
class UnivariateMeasure {
  public:
    enum class Kind { Atomic, Density };

    /// Atoms are sorted; nodes closer than 1e-14*(b-a) are merged with
    /// summed weights. Weights must be strictly positive, nodes within [a,b].
    static UnivariateMeasure from_atoms(std::vector<Atom> atoms);
    static UnivariateMeasure from_atoms(double a, double b, std::vector<Atom> atoms);

    /// Density measure w(t)dt on [a,b]; non-negativity is spot-checked on a
    /// verification grid (values below -1e-10 * max on the grid reject).
    static UnivariateMeasure from_density(double a, double b,
                                          std::function<double(double)> density);

    Kind kind() const { return kind_; }
    bool is_atomic() const { return kind_ == Kind::Atomic; }
    double lower() const { return a_; }
    double upper() const { return b_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    double density_at(double t) const { return density_(t); }

    std::size_t atom_count() const { return atoms_.size(); }

  private:
    UnivariateMeasure() = default;
    Kind kind_ = Kind::Atomic;
    double a_ = 0.0, b_ = 0.0;
    std::vector<Atom> atoms_;
    std::function<double(double)> density_;
};

struct MomentSequence {
    std::vector<double> values;
    std::string origin;
};

struct StieltjesVerdict {
    bool is_positive_definite;
    bool is_stieltjes;
    double min_eigenvalue_h;      // Hankel (c_{i+j})
    double min_eigenvalue_hshift; // shifted Hankel (c_{i+j+1})
};

enum class MeasureMap { Square, Sqrt };

/// integral of t^(j+exponent_shift) dm. Exact weighted sum for atomic
/// measures, adaptive quadrature for densities.
double power_moment(const UnivariateMeasure& m, int j, int exponent_shift = 0,
                    double rel_tol = 1e-12);

/// integral of u dm. abs_tol caps refinement when the integrand carries an
/// absolute noise floor (e.g. sampled Fourier coefficients).
double generalized_moment(const UnivariateMeasure& m,
                          const std::function<double(double)>& u,
                          double rel_tol = 1e-12, double abs_tol = 1e-300);

/// Positive-definiteness of the Hankel matrices of c and of its shift;
/// Stieltjes means both pass. PSD slack is 1e-10 * Frobenius norm.
StieltjesVerdict stieltjes_check(const MomentSequence& c);

/// Push-forward under t -> t^2 or t -> sqrt(t). Atomic measures map
/// nodewise with weights kept; densities pick up the change-of-variables
/// factor. Support must lie in [0, inf).
UnivariateMeasure image_measure(const UnivariateMeasure& m, MeasureMap map);

} // namespace phgj

#endif
