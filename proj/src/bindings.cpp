#include "covex/capacity_tree.hpp"
#include "covex/cli.hpp"
#include "covex/errors.hpp"
#include "covex/inductive.hpp"
#include "covex/oracle.hpp"
#include "covex/polyq.hpp"
#include "covex/triples.hpp"
#include "covex/weyl.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace covex;

namespace {

LieType lie(const std::string& s) { return parse_lie_type(s); }

Triple triple(const std::string& type, int n, std::vector<int> k, std::vector<int> p, std::vector<int> q) {
    return Triple{lie(type), n, std::move(k), std::move(p), std::move(q)};
}

WeylElement element(const std::string& type, const std::vector<int>& w) { return WeylElement(lie(type), w); }

py::list coeffs(const QPoly& p) {
    py::list out;
    py::object to_int = py::module_::import("builtins").attr("int");
    for (const auto& c : p.coeffs()) out.append(to_int(c.get_str()));
    return out;
}

py::dict matrix(const MatrixResult& r) {
    py::dict d;
    d["a"] = r.m.a;
    d["b"] = r.m.b;
    d["partition"] = r.partition;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kazhdan-Lusztig polynomials of covexillary Schubert varieties";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<QPoly>(m, "QPoly")
        .def(py::init([](const std::string& s) { return QPoly::parse(s); }))
        .def_property_readonly("coeffs", &coeffs)
        .def_property_readonly("degree", &QPoly::degree)
        .def("__call__", [](const QPoly& p, long x) {
            return py::module_::import("builtins").attr("int")(p.eval(x).get_str());
        })
        .def("__str__", &QPoly::str)
        .def("__repr__", [](const QPoly& p) { return "QPoly('" + p.str() + "')"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self * py::self);

    m.def("q_binomial", &q_binomial, py::arg("alpha"), py::arg("beta"));

    m.def("length", [](const std::string& t, const std::vector<int>& w) { return length(element(t, w)); });
    m.def("longest_element", [](const std::string& t, int n) { return longest_element(lie(t), n).window(); });
    m.def("bruhat_leq", [](const std::string& t, const std::vector<int>& u, const std::vector<int>& w) {
        return bruhat_leq(element(t, u), element(t, w));
    });
    m.def("reduced_word", [](const std::string& t, const std::vector<int>& w) { return reduced_word(element(t, w)); });

    m.def(
        "validate",
        [](const std::string& t, int n, std::vector<int> k, std::vector<int> p, std::vector<int> q) {
            auto rep = validate_triple(triple(t, n, k, p, q));
            py::list out;
            for (const auto& v : rep.violations) out.append(py::make_tuple(v.rule, v.index, v.message));
            py::list side;
            for (const auto& v : rep.side_violations) side.append(py::make_tuple(v.rule, v.index, v.message));
            py::dict d;
            d["ok"] = rep.ok();
            d["violations"] = out;
            d["side_conditions_ok"] = rep.side_conditions_ok();
            d["side_violations"] = side;
            return d;
        },
        py::arg("type"), py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"));

    m.def(
        "vexillary",
        [](const std::string& t, int n, std::vector<int> k, std::vector<int> p, std::vector<int> q) {
            return vexillary_from_triple(triple(t, n, k, p, q)).window();
        },
        py::arg("type"), py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"));

    m.def(
        "intermediates",
        [](const std::string& t, int n, std::vector<int> k, std::vector<int> p, std::vector<int> q,
           const std::vector<int>& v) {
            Triple tr = triple(t, n, k, p, q);
            auto r = trees_pipeline(tr, element(t, v));
            py::dict d;
            d["w"] = r.w.window();
            d["weak_k"] = r.weak.k;
            d["h"] = matrix(r.h);
            d["K"] = matrix(r.k);
            d["capacity"] = r.c;
            d["word"] = r.word.str();
            d["edges"] = r.tree.edges.size();
            return d;
        },
        py::arg("type"), py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"), py::arg("v"));

    m.def(
        "kl_trees",
        [](const std::string& t, int n, std::vector<int> k, std::vector<int> p, std::vector<int> q,
           const std::vector<int>& v) { return kl_via_trees(triple(t, n, k, p, q), element(t, v)); },
        py::arg("type"), py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"), py::arg("v"));

    m.def(
        "kl_inductive",
        [](const std::string& t, int n, std::vector<int> k, std::vector<int> p, std::vector<int> q,
           const std::vector<int>& v) { return kl_via_inductive(triple(t, n, k, p, q), element(t, v)); },
        py::arg("type"), py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"), py::arg("v"));

    m.def(
        "kl_inductive_matrix",
        [](std::vector<int> a, std::vector<int> b, const std::vector<int>& c) {
            return kl_via_inductive(ABMatrix{std::move(a), std::move(b)}, c);
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "kl_oracle",
        [](const std::string& t, int n, const std::vector<int>& v, const std::vector<int>& w, py::object budget) {
            std::uint64_t b = budget.is_none() ? oracle_budget() : budget.cast<std::uint64_t>();
            return kl_oracle(lie(t), n, element(t, v), element(t, w), b);
        },
        py::arg("type"), py::arg("n"), py::arg("v"), py::arg("w"), py::arg("budget") = py::none());

    m.def(
        "compute_json",
        [](const std::string& request, const std::string& method) {
            auto req = cli::parse_request_json(request);
            if (!method.empty()) req.method = method;
            req.emit = "json";
            req.budget = oracle_budget();
            auto out = cli::cmd_compute(req);
            return py::make_tuple(out.code, out.out);
        },
        py::arg("request"), py::arg("method") = "");
}
