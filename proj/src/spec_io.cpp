#include "phgj/spec_io.hpp"
#include "phgj/builtins.hpp"
#include "phgj/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace phgj {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(std::string("invalid JSON in ") + what);
    return j;
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw Error(std::string("spec: missing or non-numeric field '") + key + "'");
    return j[key].get<double>();
}

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw Error(std::string("spec: missing or non-string field '") + key + "'");
    return j[key].get<std::string>();
}

} // namespace

MeasureSpec parse_measure_spec(const std::string& json_text) {
    json j = parse_json(json_text, "measure spec");
    MeasureSpec spec;
    if (!j.contains("domain") || !j["domain"].is_object())
        throw Error("spec: missing 'domain' object");
    const json& dom = j["domain"];
    spec.domain_type = require_string(dom, "type");
    if (spec.domain_type == "ball") {
        spec.R = require_number(dom, "R");
        spec.rho = 0.0;
    } else if (spec.domain_type == "annulus") {
        spec.R = require_number(dom, "R");
        spec.rho = require_number(dom, "rho");
        if (!(0.0 < spec.rho && spec.rho < spec.R))
            throw InvalidSupport("spec: annulus needs 0 < rho < R");
    } else if (spec.domain_type == "cylinder") {
        spec.a = require_number(dom, "a");
        spec.b = require_number(dom, "b");
        if (!(spec.a < spec.b)) throw InvalidSupport("spec: cylinder needs a < b");
    } else {
        throw Error("spec: unknown domain type '" + spec.domain_type + "'");
    }
    if (spec.domain_type != "cylinder" && !(spec.R > 0.0))
        throw InvalidSupport("spec: R must be positive");

    if (j.contains("k_max")) spec.k_max = j["k_max"].get<int>();
    if (j.contains("angular_samples"))
        spec.angular_samples = j["angular_samples"].get<int>();
    if (spec.k_max < 0) throw Error("spec: k_max must be >= 0");

    if (!j.contains("source") || !j["source"].is_object())
        throw Error("spec: missing 'source' object");
    const json& src = j["source"];
    spec.source_type = require_string(src, "type");
    if (spec.source_type == "density2d") {
        spec.builtin = require_string(src, "builtin");
        if (src.contains("alpha")) {
            spec.has_alpha = true;
            spec.alpha = src["alpha"].get<double>();
        }
    } else if (spec.source_type == "components") {
        if (!src.contains("entries") || !src["entries"].is_array())
            throw Error("spec: components source needs an 'entries' array");
        for (const json& e : src["entries"]) {
            MeasureSpec::ComponentEntry entry;
            entry.k = static_cast<int>(require_number(e, "k"));
            if (e.contains("l")) entry.l = e["l"].get<int>();
            if (!e.contains("measure") || !e["measure"].is_object())
                throw Error("spec: entry needs a 'measure' object");
            const json& m = e["measure"];
            entry.measure_type = require_string(m, "type");
            if (entry.measure_type == "atoms") {
                if (!m.contains("nodes") || !m.contains("weights"))
                    throw Error("spec: atoms measure needs nodes and weights");
                entry.nodes = m["nodes"].get<std::vector<double>>();
                entry.weights = m["weights"].get<std::vector<double>>();
                if (entry.nodes.size() != entry.weights.size())
                    throw Error("spec: nodes/weights length mismatch");
                for (double w : entry.weights)
                    if (!(w > 0.0))
                        throw NotPseudoPositive("spec: atom weight must be positive");
            } else if (entry.measure_type == "density_radial") {
                entry.expr_id = require_string(m, "expr_id");
                if (m.contains("params"))
                    for (auto it = m["params"].begin(); it != m["params"].end(); ++it)
                        entry.params[it.key()] = it.value().get<double>();
            } else {
                throw Error("spec: unknown measure type '" + entry.measure_type + "'");
            }
            spec.entries.push_back(std::move(entry));
        }
    } else {
        throw Error("spec: unknown source type '" + spec.source_type + "'");
    }
    return spec;
}

MeasureSpec load_measure_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_measure_spec(buf.str());
}

namespace {

UnivariateMeasure realize_entry(const MeasureSpec::ComponentEntry& e, double lo,
                                double hi) {
    if (e.measure_type == "atoms") {
        std::vector<Atom> atoms(e.nodes.size());
        for (std::size_t i = 0; i < atoms.size(); ++i)
            atoms[i] = {e.nodes[i], e.weights[i]};
        return UnivariateMeasure::from_atoms(lo, hi, std::move(atoms));
    }
    return UnivariateMeasure::from_density(lo, hi,
                                           builtins::radial_density(e.expr_id, e.params));
}

} // namespace

PseudoPositiveMeasure realize_ball_measure(const MeasureSpec& spec) {
    if (spec.domain_type == "cylinder")
        throw Error("realize_ball_measure: cylinder spec");
    if (spec.source_type == "density2d") {
        if (spec.builtin == "poisson_alpha") {
            PseudoPositiveMeasure mu = spec.has_alpha
                                           ? builtins::poisson_alpha(spec.alpha, spec.k_max)
                                           : builtins::poisson_plain(spec.k_max);
            mu.rho = spec.rho;
            mu.R = spec.R;
            return mu;
        }
        if (spec.builtin == "constant")
            return from_density([](double, double) { return 1.0; }, spec.rho, spec.R,
                                spec.k_max, spec.angular_samples);
        throw Error("spec: unknown density2d builtin '" + spec.builtin + "'");
    }
    PseudoPositiveMeasure mu;
    mu.rho = spec.rho;
    mu.R = spec.R;
    mu.k_max = spec.k_max;
    for (const auto& e : spec.entries) {
        if (e.k < 0 || e.l < 1 || e.l > 2 || (e.k == 0 && e.l != 1))
            throw Error("spec: invalid component index");
        mu.components.emplace(ComponentIndex{e.k, e.l},
                              realize_entry(e, spec.rho, spec.R));
    }
    return mu;
}

std::map<int, UnivariateMeasure> realize_cylinder_components(const MeasureSpec& spec) {
    if (spec.domain_type != "cylinder")
        throw Error("realize_cylinder_components: not a cylinder spec");
    if (spec.source_type != "components")
        throw Error("spec: cylinder measures must use the components source");
    std::map<int, UnivariateMeasure> out;
    for (const auto& e : spec.entries)
        out.emplace(e.k, realize_entry(e, spec.a, spec.b));
    return out;
}

std::string cubature_to_json(const Cubature& cub) {
    json j;
    j["kind"] = cub.kind == CubatureKind::Ball ? "ball" : "annulus";
    j["order"] = cub.order;
    j["rho"] = cub.rho;
    j["R"] = cub.R;
    j["warnings"] = cub.warnings;
    json comps = json::array();
    for (const auto& [idx, m] : cub.components) {
        json c;
        c["k"] = idx.k;
        c["l"] = idx.l;
        std::vector<double> nodes, weights;
        for (const Atom& at : m.atoms()) {
            nodes.push_back(at.node);
            weights.push_back(at.weight);
        }
        c["nodes"] = nodes;
        c["weights"] = weights;
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j.dump(2) + "\n";
}

Cubature cubature_from_json(const std::string& json_text) {
    json j = parse_json(json_text, "cubature");
    Cubature cub;
    std::string kind = require_string(j, "kind");
    if (kind == "ball")
        cub.kind = CubatureKind::Ball;
    else if (kind == "annulus")
        cub.kind = CubatureKind::Annulus;
    else
        throw Error("cubature: unknown kind '" + kind + "'");
    cub.order = static_cast<int>(require_number(j, "order"));
    cub.rho = require_number(j, "rho");
    cub.R = require_number(j, "R");
    if (j.contains("warnings"))
        cub.warnings = j["warnings"].get<std::vector<std::string>>();
    for (const json& c : j.at("components")) {
        ComponentIndex idx{c.at("k").get<int>(), c.at("l").get<int>()};
        auto nodes = c.at("nodes").get<std::vector<double>>();
        auto weights = c.at("weights").get<std::vector<double>>();
        if (nodes.size() != weights.size())
            throw Error("cubature: nodes/weights length mismatch");
        std::vector<Atom> atoms(nodes.size());
        for (std::size_t i = 0; i < atoms.size(); ++i)
            atoms[i] = {nodes[i], weights[i]};
        cub.components.emplace(idx,
                               UnivariateMeasure::from_atoms(cub.rho, cub.R,
                                                             std::move(atoms)));
    }
    return cub;
}

std::string strip_cubature_to_json(const std::map<int, UnivariateMeasure>& comps,
                                   int order, double a, double b) {
    json j;
    j["kind"] = "cylinder";
    j["order"] = order;
    j["a"] = a;
    j["b"] = b;
    json arr = json::array();
    for (const auto& [k, m] : comps) {
        json c;
        c["k"] = k;
        std::vector<double> nodes, weights;
        for (const Atom& at : m.atoms()) {
            nodes.push_back(at.node);
            weights.push_back(at.weight);
        }
        c["nodes"] = nodes;
        c["weights"] = weights;
        arr.push_back(std::move(c));
    }
    j["components"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::map<int, UnivariateMeasure>
strip_cubature_from_json(const std::string& json_text, int* order, double* a,
                         double* b) {
    json j = parse_json(json_text, "cubature");
    if (require_string(j, "kind") != "cylinder")
        throw Error("cubature: expected cylinder kind");
    double lo = require_number(j, "a"), hi = require_number(j, "b");
    if (order) *order = static_cast<int>(require_number(j, "order"));
    if (a) *a = lo;
    if (b) *b = hi;
    std::map<int, UnivariateMeasure> out;
    for (const json& c : j.at("components")) {
        auto nodes = c.at("nodes").get<std::vector<double>>();
        auto weights = c.at("weights").get<std::vector<double>>();
        std::vector<Atom> atoms(nodes.size());
        for (std::size_t i = 0; i < atoms.size(); ++i)
            atoms[i] = {nodes[i], weights[i]};
        out.emplace(c.at("k").get<int>(),
                    UnivariateMeasure::from_atoms(lo, hi, std::move(atoms)));
    }
    return out;
}

} // namespace phgj
