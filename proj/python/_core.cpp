#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vqoa/io.hpp"
#include "vqoa/oracle.hpp"
#include "vqoa/pauli.hpp"
#include "vqoa/photonics.hpp"
#include "vqoa/problems.hpp"
#include "vqoa/runner.hpp"

namespace py = pybind11;

namespace {

std::string solve(const vqoa::Polynomial& poly, const std::string& family, int replicas, std::uint64_t seed,
                  int workers, const std::string& mode, int shots, std::optional<int> m, std::optional<int> t,
                  std::optional<std::string> optimizer, std::optional<double> label_power,
                  std::optional<double> reference) {
    vqoa::EvalMode em = vqoa::EvalMode::parse(mode, shots);
    em.label_power = label_power.value_or(vqoa::default_label_power(poly.arity()));
    vqoa::RunConfig rc;
    rc.ansatz = vqoa::default_ansatz(poly.n(), poly.arity());
    if (m) rc.ansatz.m = *m;
    if (t) rc.ansatz.t = *t;
    rc.optimizer.method = optimizer ? vqoa::parse_method(*optimizer) : vqoa::default_method(poly.arity());
    rc.replicas = replicas;
    rc.seed = seed;
    rc.workers = workers;
    rc.keep_traces = false;
    rc.validate(poly.n());
    const vqoa::PolynomialCost cost(poly, em, family);
    auto result = vqoa::run(cost, rc);
    if (reference) result.set_reference(*reference, "external", family);
    const vqoa::io::json problem{{"kind", family}, {"n", poly.n()}, {"N", poly.arity()}, {"k", poly.max_order()}};
    return vqoa::io::run_result_to_json(result, rc, problem, em.name(), 1, {}, em.label_power).dump();
}

double tmm(const std::vector<std::tuple<double, double, double>>& layers, double wavelength_nm,
           double incidence_index, double exit_index) {
    namespace ph = vqoa::photonics;
    std::vector<ph::MaterialTable> mats;
    mats.reserve(layers.size());
    for (std::size_t i = 0; i < layers.size(); ++i)
        mats.push_back(ph::MaterialTable::constant("layer" + std::to_string(i), std::get<0>(layers[i]),
                                                   std::get<1>(layers[i])));
    ph::Stack stack{incidence_index, {}, exit_index};
    for (std::size_t i = 0; i < layers.size(); ++i) stack.layers.push_back({&mats[i], std::get<2>(layers[i])});
    return ph::tmm_transmission(stack, wavelength_nm);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "C++ core of the vqoa package";

    py::class_<vqoa::Polynomial>(m, "Polynomial")
        .def_property_readonly("n", &vqoa::Polynomial::n)
        .def_property_readonly("arity", &vqoa::Polynomial::arity)
        .def_property_readonly("max_order", &vqoa::Polynomial::max_order)
        .def_property_readonly("term_count", &vqoa::Polynomial::term_count)
        .def("evaluate", [](const vqoa::Polynomial& p, const std::vector<int>& x) {
            if (static_cast<int>(x.size()) != p.n()) throw py::value_error("assignment length must equal n");
            return p.evaluate(x);
        })
        .def("to_json", [](const vqoa::Polynomial& p, const std::string& kind) {
            return vqoa::io::polynomial_to_json(p, kind).dump();
        }, py::arg("kind") = "qubo")
        .def_static("from_json", [](const std::string& s) {
            return vqoa::io::polynomial_from_json(vqoa::io::json::parse(s));
        });

    m.def("interaction_count", &vqoa::interaction_count, py::arg("n"), py::arg("k"));
    m.def("gen_qubo", &vqoa::gen_qubo, py::arg("n"), py::arg("seed"));
    m.def("gen_higher_order", &vqoa::gen_higher_order, py::arg("n"), py::arg("k"), py::arg("arity"), py::arg("seed"));
    m.def("gen_maxcut", [](int n, std::uint64_t seed) {
        return vqoa::maxcut_polynomial(vqoa::gen_maxcut_graph(n, seed));
    }, py::arg("n"), py::arg("seed"));

    m.def("brute_force", [](const vqoa::Polynomial& p, int workers) {
        vqoa::OracleResult r;
        {
            py::gil_scoped_release release;
            r = vqoa::brute_force_poly(p, workers);
        }
        return py::make_tuple(r.optimum, r.optimizer, r.enumerated);
    }, py::arg("poly"), py::arg("workers") = 1);

    m.def("_solve_json", &solve, py::arg("poly"), py::arg("family"), py::arg("replicas"), py::arg("seed"),
          py::arg("workers"), py::arg("mode"), py::arg("shots"), py::arg("m"), py::arg("t"), py::arg("optimizer"),
          py::arg("label_power"), py::arg("reference"), py::call_guard<py::gil_scoped_release>());

    m.def("pauli_min_eigenvalue", [](const std::string& text) {
        return vqoa::dense_min_eigenvalue(vqoa::parse_pauli_text(text));
    }, py::arg("text"));

    m.def("tmm_transmission", &tmm, py::arg("layers"), py::arg("wavelength_nm"), py::arg("incidence_index") = 1.0,
          py::arg("exit_index") = 1.5);
}
