#ifndef PHGJ_SPEC_IO_HPP
#define PHGJ_SPEC_IO_HPP

#include "phgj/cubature.hpp"
#include "phgj/measure.hpp"

#include <map>
#include <string>
#include <vector>

namespace phgj {

/// Parsed measure specification (see docs/measure_spec.md for the schema).
struct MeasureSpec {
    std::string domain_type; // "ball" | "annulus" | "cylinder"
    double rho = 0.0;
    double R = 1.0;
    double a = 0.0; // cylinder axis interval
    double b = 1.0;
    int k_max = 16;
    int angular_samples = 256;

    std::string source_type; // "density2d" | "components"
    std::string builtin;     // density2d: "poisson_alpha" | "constant"
    bool has_alpha = false;
    double alpha = 0.0;

    struct ComponentEntry {
        int k = 0;
        int l = 1;
        std::string measure_type; // "atoms" | "density_radial"
        std::vector<double> nodes, weights;
        std::string expr_id;
        std::map<std::string, double> params;
    };
    std::vector<ComponentEntry> entries;
};

/// Throws Error on schema violations (unknown fields required by the schema,
/// missing keys, wrong domains, non-positive weights).
MeasureSpec load_measure_spec(const std::string& path);
MeasureSpec parse_measure_spec(const std::string& json_text);

/// Realizes a ball/annulus spec as a component measure map.
PseudoPositiveMeasure realize_ball_measure(const MeasureSpec& spec);

/// Realizes a cylinder spec: Fourier-mode index -> axis measure.
std::map<int, UnivariateMeasure> realize_cylinder_components(const MeasureSpec& spec);

/// Cubature JSON round trip; doubles use shortest round-trip encoding.
std::string cubature_to_json(const Cubature& cub);
Cubature cubature_from_json(const std::string& json_text);

/// Cylinder cubature serialization (per-mode atomic measures).
std::string strip_cubature_to_json(const std::map<int, UnivariateMeasure>& comps,
                                   int order, double a, double b);
std::map<int, UnivariateMeasure>
strip_cubature_from_json(const std::string& json_text, int* order = nullptr,
                         double* a = nullptr, double* b = nullptr);

} // namespace phgj

#endif
