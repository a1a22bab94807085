#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dgsp/bgft.hpp"
#include "dgsp/errors.hpp"
#include "dgsp/frequency_order.hpp"
#include "dgsp/harness.hpp"
#include "dgsp/nonnormality.hpp"
#include "dgsp/sampling.hpp"
#include "dgsp/variation.hpp"

namespace py = pybind11;
using namespace dgsp;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<cdouble, py::array::c_style | py::array::forcecast>;

RMatrix to_rmatrix(const RealArray& a) {
    if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
    RMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    std::copy(a.data(), a.data() + a.size(), m.data().begin());
    return m;
}

CVector to_cvector(const ComplexArray& a) {
    if (a.ndim() != 1) throw DimensionError("expected a 1-d array");
    return CVector(a.data(), a.data() + a.size());
}

template <class T>
py::array_t<T> to_array(const Matrix<T>& m) {
    py::array_t<T> out({m.rows(), m.cols()});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

template <class T>
py::array_t<T> to_array(const std::vector<T>& v) {
    py::array_t<T> out(v.size());
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

la::EigOptions options(bool balance, double eig_tol, bool accept) { return {balance, eig_tol, accept}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Biorthogonal graph Fourier analysis of directed graphs";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", base.ptr());
    py::register_exception<NearDefectiveError>(m, "NearDefectiveError", base.ptr());
    py::register_exception<UnrecoverableError>(m, "UnrecoverableError", base.ptr());

    py::class_<Digraph>(m, "Digraph")
        .def(py::init([](const RealArray& a) { return Digraph(to_rmatrix(a)); }), py::arg("adjacency"))
        .def_property_readonly("size", &Digraph::size)
        .def_property_readonly("edge_count", &Digraph::edge_count)
        .def_property_readonly("adjacency", [](const Digraph& g) { return to_array(g.adjacency()); })
        .def("weight", &Digraph::weight)
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; });

    m.def("directed_cycle", &directed_cycle, py::arg("n"));
    m.def("perturbed_cycle", &perturbed_cycle, py::arg("n"), py::arg("p"), py::arg("weight"), py::arg("seed"));
    m.def(
        "from_edge_list",
        [](std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
            std::vector<Edge> list;
            for (const auto& [s, d, w] : edges) list.push_back({s, d, w});
            return from_edge_list(n, list);
        },
        py::arg("n"), py::arg("edges"));
    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); }, py::arg("text"));
    m.def("read_edge_list", &read_edge_list, py::arg("path"));
    m.def("laplacian", [](const Digraph& g) { return to_array(laplacian(g).matrix()); }, py::arg("graph"));

    py::class_<la::EigenSystem>(m, "EigenSystem")
        .def_property_readonly("values", [](const la::EigenSystem& e) { return to_array(e.values); })
        .def_property_readonly("vectors", [](const la::EigenSystem& e) { return to_array(e.vectors); })
        .def_readonly("sigma_min", &la::EigenSystem::sigma_min)
        .def_readonly("sigma_max", &la::EigenSystem::sigma_max)
        .def_readonly("kappa", &la::EigenSystem::kappa)
        .def_readonly("residual", &la::EigenSystem::residual);

    m.def(
        "eig",
        [](const RealArray& a, bool balance, double eig_tol, bool accept) {
            return la::eig(to_rmatrix(a), options(balance, eig_tol, accept));
        },
        py::arg("a"), py::arg("balance") = false, py::arg("eig_tol") = 1e-9, py::arg("accept_near_defective") = false);
    m.def("svd_values", [](const RealArray& a) { return to_array(la::svd_values(to_rmatrix(a))); }, py::arg("a"));
    m.def(
        "frequency_order", [](const ComplexArray& v) { return frequency_order(to_cvector(v)).permutation; },
        py::arg("values"));

    py::class_<Spectrum>(m, "Spectrum")
        .def(py::init([](const Digraph& g, bool balance, double eig_tol) {
                 return Spectrum(laplacian(g), options(balance, eig_tol, false));
             }),
             py::arg("graph"), py::arg("balance") = false, py::arg("eig_tol") = 1e-9)
        .def_property_readonly("size", &Spectrum::size)
        .def_property_readonly("values", [](const Spectrum& s) { return to_array(s.values()); })
        .def_property_readonly("vectors", [](const Spectrum& s) { return to_array(s.vectors()); })
        .def_property_readonly("gram", [](const Spectrum& s) { return to_array(s.gram()); })
        .def_property_readonly("sigma_min", &Spectrum::sigma_min)
        .def_property_readonly("sigma_max", &Spectrum::sigma_max)
        .def_property_readonly("kappa", &Spectrum::kappa)
        .def(
            "forward",
            [](const Spectrum& s, const ComplexArray& x) {
                return to_array(forward(s, Signal::vertex(to_cvector(x))).values);
            },
            py::arg("x"))
        .def(
            "inverse",
            [](const Spectrum& s, const ComplexArray& xh) {
                return to_array(inverse(s, Signal::spectral(to_cvector(xh))).values);
            },
            py::arg("x_hat"))
        .def(
            "energy", [](const Spectrum& s, const ComplexArray& xh) { return spectral_energy(s, Signal::spectral(to_cvector(xh))); },
            py::arg("x_hat"))
        .def(
            "parseval_bounds",
            [](const Spectrum& s, const ComplexArray& xh) {
                const Interval b = parseval_bounds(s, Signal::spectral(to_cvector(xh)));
                return std::make_pair(b.lower, b.upper);
            },
            py::arg("x_hat"))
        .def(
            "tv_bounds",
            [](const Spectrum& s, const ComplexArray& xh) {
                const Interval b = tv_bounds(s, Signal::spectral(to_cvector(xh)));
                return std::make_pair(b.lower, b.upper);
            },
            py::arg("x_hat"))
        .def(
            "filter",
            [](const Spectrum& s, const ComplexArray& h, const ComplexArray& x) {
                return to_array(apply_filter(s, to_cvector(h), Signal::vertex(to_cvector(x))).values);
            },
            py::arg("h"), py::arg("x"))
        .def("lowest_band", &lowest_band, py::arg("k"));

    m.def(
        "directed_tv",
        [](const Digraph& g, const ComplexArray& x) { return directed_tv(laplacian(g), Signal::vertex(to_cvector(x))); },
        py::arg("graph"), py::arg("x"));

    m.def("asymmetry_index", [](const RealArray& a) { return asymmetry_index(to_rmatrix(a)); }, py::arg("a"));
    m.def("commutator_departure", [](const RealArray& a) { return commutator_departure(to_rmatrix(a)); }, py::arg("a"));
    m.def(
        "henrici_departure",
        [](const RealArray& a, const ComplexArray& values) { return henrici_departure(to_rmatrix(a), to_cvector(values)); },
        py::arg("a"), py::arg("values"));

    py::class_<MetricsReport>(m, "MetricsReport")
        .def_readonly("graph_label", &MetricsReport::graph_label)
        .def_readonly("kappa", &MetricsReport::kappa)
        .def_readonly("henrici", &MetricsReport::henrici)
        .def_readonly("alpha", &MetricsReport::alpha)
        .def_readonly("delta", &MetricsReport::delta);
    m.def(
        "report",
        [](const Digraph& g, std::string label, bool balance) {
            return report(g, std::move(label), options(balance, 1e-9, false));
        },
        py::arg("graph"), py::arg("label") = "graph", py::arg("balance") = false);

    py::class_<SamplingPlan>(m, "SamplingPlan")
        .def(py::init<const Spectrum&, std::vector<std::size_t>, std::vector<std::size_t>>(), py::arg("spectrum"),
             py::arg("omega"), py::arg("samples"))
        .def_property_readonly("omega", &SamplingPlan::omega)
        .def_property_readonly("samples", &SamplingPlan::samples)
        .def_property_readonly("basis", [](const SamplingPlan& p) { return to_array(p.basis()); })
        .def_property_readonly("matrix", [](const SamplingPlan& p) { return to_array(p.matrix()); })
        .def_property_readonly("gamma", &SamplingPlan::gamma)
        .def_property_readonly("basis_norm", &SamplingPlan::basis_norm)
        .def_property_readonly("full_rank", &SamplingPlan::full_rank)
        .def(
            "take_samples", [](const SamplingPlan& p, const ComplexArray& x) { return to_array(p.take_samples(to_cvector(x))); },
            py::arg("x"))
        .def(
            "recover",
            [](const SamplingPlan& p, const ComplexArray& y, double eta_norm) {
                const RecoveryResult r = recover(p, to_cvector(y), eta_norm);
                py::dict out;
                out["x_hat"] = to_array(r.x_hat);
                out["c_hat"] = to_array(r.c_hat);
                out["residual"] = r.residual;
                out["bound_noise"] = r.bound_noise;
                return out;
            },
            py::arg("y"), py::arg("eta_norm") = 0.0)
        .def("noise_bound", &noise_bound, py::arg("eta_norm"));

    m.def("amplification_bound", &amplification_bound, py::arg("kappa"), py::arg("eta_norm"), py::arg("coeff_norm"));
}
