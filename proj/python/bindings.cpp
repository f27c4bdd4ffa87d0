#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gme/bipartition.hpp"
#include "gme/concurrence.hpp"
#include "gme/measures.hpp"
#include "gme/report.hpp"
#include "gme/state.hpp"
#include "gme/verify.hpp"

namespace py = pybind11;

namespace {

using cplx_array = py::array_t<gme::complex_t, py::array::c_style | py::array::forcecast>;

std::vector<gme::complex_t> to_vector(const cplx_array& a) {
    return {a.data(), a.data() + a.size()};
}

py::array_t<gme::complex_t> to_array(std::span<const gme::complex_t> v) {
    py::array_t<gme::complex_t> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::dict spectrum_dict(const gme::ConcurrenceSpectrum& s) {
    py::dict d;
    for (const auto& e : s.entries()) d[py::tuple(py::cast(e.cut.subset()))] = e.value;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Geometric genuine multipartite entanglement measures for pure states";
    m.attr("__version__") = gme::tool_version;

    py::register_exception<gme::state_error>(m, "StateError", PyExc_ValueError);
    py::register_exception<gme::measure_error>(m, "MeasureError", PyExc_ValueError);

    py::class_<gme::PureState>(m, "PureState")
        .def(py::init([](std::vector<int> dims, const cplx_array& amps, bool normalize) {
                 return gme::PureState(std::move(dims), to_vector(amps),
                                       normalize ? gme::Normalization::rescale : gme::Normalization::verify);
             }),
             py::arg("dims"), py::arg("amplitudes"), py::arg("normalize") = false)
        .def_property_readonly("dims", &gme::PureState::dims)
        .def_property_readonly("parties", &gme::PureState::parties)
        .def_property_readonly("amplitudes", [](const gme::PureState& s) { return to_array(s.amplitudes()); })
        .def("__repr__", [](const gme::PureState& s) {
            return "<PureState dims=" + py::repr(py::cast(s.dims())).cast<std::string>() + ">";
        });

    m.def("parse_state", [](const std::string& text, bool normalize) {
        return gme::parse_state(text, normalize ? gme::Normalization::rescale : gme::Normalization::verify);
    }, py::arg("text"), py::arg("normalize") = false);
    m.def("serialize_state", &gme::serialize_state);
    m.def("apply_local_unitary", [](const gme::PureState& s, int site, const cplx_array& u) {
        return gme::apply_local_unitary(s, site, to_vector(u));
    }, py::arg("state"), py::arg("site"), py::arg("unitary"));
    m.def("permute_subsystems", [](const gme::PureState& s, std::vector<int> perm) {
        return gme::permute_subsystems(s, perm);
    });
    m.def("ghz_state", &gme::ghz_state, py::arg("parties"), py::arg("local_dim") = 2);
    m.def("w_state", &gme::w_state);

    m.def("canonical_bipartitions", [](int n) {
        std::vector<std::vector<std::vector<int>>> groups;
        for (const auto& g : gme::canonical_bipartitions(n)) {
            auto& out = groups.emplace_back();
            for (const auto& c : g.cuts) out.push_back(c.subset());
        }
        return groups;
    });

    m.def("reduced_purity", [](const gme::PureState& s, std::vector<int> subset) {
        return gme::reduced_purity(s, subset);
    });
    m.def("dense_oracle_purity", [](const gme::PureState& s, std::vector<int> subset) {
        return gme::dense_oracle_purity(s, subset);
    });
    m.def("concurrence", [](const gme::PureState& s, std::vector<int> subset) {
        return gme::concurrence(s, subset);
    });
    m.def("full_spectrum", [](const gme::PureState& s) { return spectrum_dict(gme::full_spectrum(s)); });

    m.def("volume", [](const gme::PureState& s, double tol) {
        const auto g = gme::volume(gme::full_spectrum(s), tol);
        py::dict d;
        d["parties"] = g.parties;
        d["base_edge"] = g.base_edge;
        d["height"] = g.height;
        d["base_area"] = g.base_area;
        d["volume"] = g.volume;
        return d;
    }, py::arg("state"), py::arg("tol") = gme::default_zero_tolerance);
    m.def("c_gme", [](const gme::PureState& s) { return gme::c_gme(gme::full_spectrum(s)); });
    m.def("triangle_measure", [](const gme::PureState& s) { return gme::triangle_measure(gme::full_spectrum(s)); });
    m.def("classify", [](const gme::PureState& s, double tol) {
        const auto c = gme::classify(gme::full_spectrum(s), tol);
        std::vector<std::vector<int>> zeros;
        for (const auto& z : c.zero_cuts) zeros.push_back(z.subset());
        return py::make_tuple(std::string(gme::to_string(c.label)), zeros);
    }, py::arg("state"), py::arg("tol") = gme::default_zero_tolerance);
    m.def("evaluate_json", [](const gme::PureState& s, const std::string& id, double tol) {
        return gme::to_json(gme::evaluate(s, id, tol)).dump();
    }, py::arg("state"), py::arg("id") = "state", py::arg("tol") = gme::default_zero_tolerance);
    m.def("reference_report_json", [] { return gme::to_json(gme::reference_report()).dump(); });

    m.def("haar_random_state", [](std::vector<int> dims, std::uint64_t seed) {
        return gme::verify::haar_random_state(dims, seed);
    }, py::arg("dims"), py::arg("seed"));
    m.def("random_local_unitary", [](int d, std::uint64_t seed) {
        const auto u = gme::verify::random_local_unitary(d, seed);
        py::array_t<gme::complex_t> out(std::vector<py::ssize_t>{d, d});
        std::copy(u.begin(), u.end(), out.mutable_data());
        return out;
    }, py::arg("d"), py::arg("seed"));
    m.def("run_check", [](const std::string& name, std::vector<int> dims, int trials, std::uint64_t seed) {
        gme::verify::TrialConfig config{std::move(dims), trials, seed, std::nullopt};
        const auto o = gme::verify::run_check(gme::verify::parse_check(name), config);
        py::dict d;
        d["check"] = std::string(gme::verify::to_string(o.check));
        d["trials"] = o.trials;
        d["max_deviation"] = o.max_deviation;
        d["tolerance"] = o.tolerance;
        d["passed"] = o.passed;
        d["worst_trial"] = o.worst_trial;
        return d;
    }, py::arg("check"), py::arg("dims"), py::arg("trials") = 100, py::arg("seed") = 0);
}
