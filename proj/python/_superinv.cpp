#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superinv/errors.hpp"
#include "superinv/json_io.hpp"
#include "superinv/molien.hpp"
#include "superinv/shuffle.hpp"
#include "superinv/symfunc.hpp"
#include "superinv/verify.hpp"
#include "superinv/wreath_series.hpp"

namespace py = pybind11;
using namespace superinv;

namespace {

// Everything crosses the boundary as JSON text; the Python wrapper does the decoding.
std::string dump(const json& j) { return j.dump(); }

LinearCharacter character(const std::string& spec, const MatrixGroup& g) {
    if (spec == "trivial" || spec == "sgn")
        return character_from_json(json(spec), g);
    return character_from_json(json::parse(spec), g);
}

std::string molien(const std::string& group, int dq, std::optional<int> du, const std::string& chi) {
    const MatrixGroup g = matrix_group_from_json(json::parse(group));
    return dump(series_to_json(super_molien(GroupAction::of_group(g, character(chi, g)), dq, du)));
}

std::string molien_check(const std::string& group, int dq, const std::string& chi) {
    const MatrixGroup g = matrix_group_from_json(json::parse(group));
    return dump(molien_report_to_json(molien_vs_oracle(GroupAction::of_group(g, character(chi, g)), dq)));
}

std::string cycle_index_json(const std::string& perm, const std::string& flavor) {
    return dump(symfunc_to_json(cycle_index(perm_group_from_json(json::parse(perm)), parse_flavor(flavor))));
}

std::string wreath(const std::string& perm, const std::string& group, int n, const std::string& flavor, int dq,
                   std::optional<int> du, const std::string& route) {
    const PermGroup p = perm_group_from_json(json::parse(perm));
    const MatrixGroup g = matrix_group_from_json(json::parse(group));
    const Flavor f = parse_flavor(flavor);
    if (route == "direct")
        return dump(series_to_json(wreath_hilbert_direct(p, g, n, f, dq, du)));
    if (route == "plethysm")
        return dump(series_to_json(wreath_hilbert_plethysm(p, g, n, f, dq, du)));
    throw Error(ErrorKind::Parse, "unknown route '" + route + "'");
}

std::string collate(const std::string& group, int N, int dq, std::optional<int> du, const std::string& flavor,
                    const std::string& route) {
    CollationSpec spec{matrix_group_from_json(json::parse(group)), N, dq, du.value_or(-1), parse_flavor(flavor)};
    if (route == "sum")
        return dump(series_to_json(collated_sum_series(spec)));
    if (route == "product")
        return dump(series_to_json(collated_product_series(spec)));
    throw Error(ErrorKind::Parse, "unknown route '" + route + "'");
}

std::string shuffle(const std::string& a, const std::string& b, bool signed_sum) {
    return dump(poly_to_json(shuffle_product(poly_from_json(json::parse(a)), poly_from_json(json::parse(b)), signed_sum)));
}

std::string verify(const std::string& suite, std::uint64_t seed) { return dump(run_suite(suite, seed).to_json()); }

}  // namespace

PYBIND11_MODULE(_superinv, m) {
    m.doc() = "Exact Hilbert series of superpolynomial invariants";
    py::register_exception<Error>(m, "SuperinvError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
    m.def("molien", &molien, py::arg("group"), py::arg("dq"), py::arg("du") = py::none(),
          py::arg("character") = "trivial");
    m.def("molien_check", &molien_check, py::arg("group"), py::arg("dq"), py::arg("character") = "trivial");
    m.def("cycle_index", &cycle_index_json, py::arg("perm"), py::arg("flavor") = "invariant");
    m.def("wreath", &wreath, py::arg("perm"), py::arg("group"), py::arg("n"), py::arg("flavor") = "invariant",
          py::arg("dq") = 6, py::arg("du") = py::none(), py::arg("route") = "plethysm");
    m.def("collate", &collate, py::arg("group"), py::arg("N") = 3, py::arg("dq") = 6, py::arg("du") = py::none(),
          py::arg("flavor") = "invariant", py::arg("route") = "product");
    m.def("shuffle", &shuffle, py::arg("a"), py::arg("b"), py::arg("signed") = false);
    m.def("verify", &verify, py::arg("suite") = "all", py::arg("seed") = 42);
}
