#include "phgj/builtins.hpp"
#include "phgj/errors.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace phgj::builtins {

namespace {

constexpr double pi = std::numbers::pi;

UnivariateMeasure poisson_component(double alpha, int k, bool damped) {
    const double c = k == 0 ? std::sqrt(2.0 * pi) : 2.0 * std::sqrt(pi);
    const double p = k == 0 ? 1.0 : 2.0 * k + 1.0;
    return UnivariateMeasure::from_density(0.0, 1.0, [=](double r) {
        double damp = damped ? 1.0 - std::pow(r, alpha) : 1.0;
        return c * std::pow(r, p) * damp;
    });
}

} // namespace

PseudoPositiveMeasure poisson_alpha(double alpha, int k_max) {
    if (!(alpha > 0.0)) throw Error("poisson_alpha: alpha must be positive");
    PseudoPositiveMeasure mu;
    mu.rho = 0.0;
    mu.R = 1.0;
    mu.k_max = k_max;
    for (int k = 0; k <= k_max; ++k)
        mu.components.emplace(ComponentIndex{k, 1}, poisson_component(alpha, k, true));
    return mu;
}

PseudoPositiveMeasure poisson_plain(int k_max) {
    PseudoPositiveMeasure mu;
    mu.rho = 0.0;
    mu.R = 1.0;
    mu.k_max = k_max;
    for (int k = 0; k <= k_max; ++k)
        mu.components.emplace(ComponentIndex{k, 1}, poisson_component(0.0, k, false));
    return mu;
}

PseudoPositiveMeasure disk_lebesgue() {
    PseudoPositiveMeasure mu;
    mu.rho = 0.0;
    mu.R = 1.0;
    mu.k_max = 0;
    mu.components.emplace(
        ComponentIndex{0, 1},
        UnivariateMeasure::from_density(
            0.0, 1.0, [](double r) { return std::sqrt(2.0 * pi) * r; }));
    return mu;
}

const std::vector<Integrand>& integrands() {
    static const std::vector<Integrand> table = {
        {"one", [](double, double) { return 1.0; }},
        {"r2", [](double r, double) { return r * r; }},
        {"exp_x", [](double r, double t) { return std::exp(r * std::cos(t)); }},
        {"exp_y", [](double r, double t) { return std::exp(r * std::sin(t)); }},
    };
    return table;
}

std::function<double(double, double)> integrand(const std::string& id) {
    for (const auto& entry : integrands())
        if (entry.id == id) return entry.f;
    throw Error("unknown integrand id: " + id);
}

std::function<double(double)>
radial_density(const std::string& expr_id,
               const std::map<std::string, double>& params) {
    auto get = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw Error("radial_density: missing param " + key + " for " + expr_id);
        return it->second;
    };
    if (expr_id == "poisson_component") {
        double alpha = get("alpha");
        int k = static_cast<int>(get("k"));
        double c = 2.0 * std::sqrt(pi);
        return [=](double r) {
            return c * std::pow(r, 2.0 * k + 1.0) * (1.0 - std::pow(r, alpha));
        };
    }
    if (expr_id == "monomial") {
        double coeff = get("coeff"), power = get("power");
        return [=](double r) { return coeff * std::pow(r, power); };
    }
    throw Error("unknown radial density id: " + expr_id);
}

BivariatePolynomial parse_polynomial(const std::string& text) {
    BivariatePolynomial poly;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_exponent = [&]() -> int {
        if (i < n && text[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw Error("parse_polynomial: exponent expected");
            return std::stoi(text.substr(start, i - start));
        }
        return 1;
    };
    skip_ws();
    bool first = true;
    while (i < n) {
        double sign = 1.0;
        skip_ws();
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1.0 : 1.0;
            ++i;
        } else if (!first) {
            throw Error("parse_polynomial: expected '+' or '-' between terms");
        }
        skip_ws();
        double coeff = 1.0;
        bool saw_anything = false;
        if (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
            std::size_t pos = 0;
            coeff = std::stod(text.substr(i), &pos);
            i += pos;
            saw_anything = true;
        }
        int a = 0, b = 0;
        for (;;) {
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i < n && (text[i] == 'x' || text[i] == 'y')) {
                char var = text[i++];
                int e = parse_exponent();
                (var == 'x' ? a : b) += e;
                saw_anything = true;
            } else {
                break;
            }
        }
        if (!saw_anything) throw Error("parse_polynomial: empty term");
        poly.add(a, b, sign * coeff);
        first = false;
        skip_ws();
    }
    if (first) throw Error("parse_polynomial: empty input");
    return poly;
}

} // namespace phgj::builtins
