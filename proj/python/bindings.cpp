#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fareyplumb/changemaker.hpp"
#include "fareyplumb/configuration.hpp"
#include "fareyplumb/farey.hpp"
#include "fareyplumb/lens.hpp"
#include "fareyplumb/smoothing.hpp"
#include "fareyplumb/spheres.hpp"

namespace py = pybind11;
using namespace fareyplumb;

namespace {

using SlopePair = std::pair<Int, Int>;

// Paths arrive either as text "0/1,1/1,1/0" or as a list of (num, den) pairs.
FareyPath to_path(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_path(obj.cast<std::string>());
    std::vector<Slope> slopes;
    for (const auto& s : obj.cast<std::vector<SlopePair>>()) slopes.emplace_back(s.first, s.second);
    return FareyPath(std::move(slopes));
}

std::vector<SlopePair> from_path(const FareyPath& path) {
    std::vector<SlopePair> out;
    for (const auto& s : path.slopes()) out.emplace_back(s.num(), s.den());
    return out;
}

std::vector<std::vector<Int>> coords(const std::vector<IntVector>& vs) {
    std::vector<std::vector<Int>> out;
    for (const auto& v : vs) out.push_back(v.coords);
    return out;
}

py::dict config_dict(const FareyPath& path) {
    RingConfiguration c = build(path);
    std::vector<SlopePair> meridians;
    for (const auto& m : c.meridian_coeffs()) meridians.emplace_back(m.q, m.p);
    py::dict d;
    d["path"] = from_path(c.path());
    d["n"] = c.n();
    d["squares"] = c.squares();
    d["classes"] = coords(c.classes());
    d["w"] = coords(c.w_vectors());
    d["meridian_coeffs"] = meridians;
    return d;
}

py::dict smooth_dict(const py::object& path, const std::string& spec) {
    RingConfiguration c = build(to_path(path));
    SmoothedChain s = smooth(c, parse_spec(spec));
    py::dict d;
    d["chain"] = s.chain;
    d["sigma"] = s.sigma.coords;
    d["a"] = s.a;
    d["b"] = s.b;
    d["simply_connected"] = s.simply_connected;
    return d;
}

py::dict report_dict(const ObstructionReport& r) {
    py::list orientations;
    for (const auto& o : r.orientations) {
        py::dict od;
        od["q"] = o.q;
        od["chain"] = o.chain.entries();
        od["status"] = to_string(o.result.status);
        od["nodes"] = o.result.nodes;
        od["changemakers"] = o.result.candidates;
        if (o.result.certificate) {
            od["sigma"] = o.result.certificate->sigma.coords;
            od["vectors"] = coords(o.result.certificate->vectors);
        } else {
            od["sigma"] = py::none();
            od["vectors"] = py::none();
        }
        orientations.append(od);
    }
    py::dict d;
    d["p"] = r.lens.p();
    d["q_set"] = r.lens.q_set();
    d["verdict"] = to_string(r.verdict);
    d["orientations"] = orientations;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fareyplumb, m) {
    m.doc() = "Farey-path sphere configurations, lens space chains and changemaker searches";

    py::register_exception<OverflowError>(m, "IntegerOverflow", PyExc_OverflowError);

    m.def("distance", [](SlopePair a, SlopePair b) { return distance(Slope(a.first, a.second), Slope(b.first, b.second)); });
    m.def("parents", [](SlopePair s) {
        Parents p = parents(Slope(s.first, s.second));
        return std::make_pair(SlopePair{p.left.num(), p.left.den()}, SlopePair{p.right.num(), p.right.den()});
    });
    m.def(
        "enumerate_paths",
        [](std::size_t n, std::size_t cap) {
            std::vector<std::vector<SlopePair>> out;
            for (const auto& p : enumerate_paths(n, cap)) out.push_back(from_path(p));
            return out;
        },
        py::arg("n"), py::arg("cap") = kDefaultPathCap);
    m.def("integer_family_path", [](std::size_t n) { return from_path(integer_family_path(n)); });
    m.def("build", [](const py::object& path) { return config_dict(to_path(path)); }, py::arg("path"));
    m.def("weight_components", [](const py::object& path, std::size_t i) { return weight_components(build(to_path(path)), i); });

    m.def("smooth", &smooth_dict, py::arg("path"), py::arg("spec"));
    m.def(
        "enumerate_smoothings",
        [](const py::object& path, bool include_adjacent) {
            std::vector<std::string> out;
            for (const auto& s : enumerate_smoothings(build(to_path(path)), include_adjacent)) out.push_back(to_string(s));
            return out;
        },
        py::arg("path"), py::arg("include_adjacent") = false);
    m.def("family_sigma", [](std::size_t n, std::size_t k) { return family_sigma(n, k).coords; });
    m.def("family_chain", &family_chain);

    m.def("cf_evaluate", [](const std::vector<Int>& chain) {
        Fraction f = cf_evaluate(Chain(chain));
        return std::make_pair(f.p, f.q);
    });
    m.def("cf_expand", [](Int p, Int q) { return cf_expand(p, q).entries(); });
    m.def("is_positive_definite", [](const std::vector<Int>& chain) { return is_positive_definite(Chain(chain)); });
    m.def("lens_q_set", [](Int p, Int q) { return lens_canonical(p, q).q_set(); });
    m.def("linear_lattice_det", [](Int p, Int q) { return LinearLattice(p, q).det(); });
    m.def("family_lens", [](Int n, Int k) {
        FamilyLens f = family_lens(n, k);
        return std::make_pair(f.p, f.q);
    });

    m.def("is_changemaker", [](const std::vector<Int>& v) { return is_changemaker(IntVector(v)); });
    m.def(
        "enumerate_changemakers",
        [](Int p, std::size_t length, Int max_p) {
            std::vector<std::vector<Int>> out;
            for (const auto& v : enumerate_changemakers(p, length, max_p)) out.push_back(v.coords);
            return out;
        },
        py::arg("p"), py::arg("length"), py::arg("max_p") = kDefaultMaxP);
    m.def(
        "surgery_obstruction",
        [](const py::object& input, Int max_p, std::uint64_t max_nodes) {
            SearchLimits limits{max_p, max_nodes};
            const bool is_lens = py::isinstance<py::str>(input);
            std::string text = is_lens ? input.cast<std::string>() : std::string();
            std::vector<Int> chain = is_lens ? std::vector<Int>() : input.cast<std::vector<Int>>();
            ObstructionReport r = [&] {
                py::gil_scoped_release release;
                return is_lens ? surgery_obstruction(parse_lens(text), limits) : surgery_obstruction(Chain(chain), limits);
            }();
            return report_dict(r);
        },
        py::arg("input"), py::arg("max_p") = kDefaultMaxP, py::arg("max_nodes") = kDefaultMaxNodes);

    m.def("max_smoothed_square", [](const py::object& path) { return max_smoothed_square(build(to_path(path))); });
    m.def("twist_concordance_square", &twist_concordance_square);
    m.def("is_characteristic", [](const std::vector<Int>& v) { return is_characteristic(IntVector(v)); });
    m.def("pairing_bound_check", [](const std::vector<Int>& s, Int t) { return pairing_bound_check(IntVector(s), t); });
    m.def("petersen_induced_path", [](std::size_t len) { return find_induced_path(subdivided_petersen(), len); });
    m.def("petersen_induced_path_count", [](std::size_t len) { return count_induced_paths(subdivided_petersen(), len); });
}
