#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepcert/modulus.hpp"
#include "sepcert/table.hpp"
#include "sepcert/thermal.hpp"
#include "sepcert/verify.hpp"

namespace py = pybind11;
using namespace sepcert;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral separability certification toolkit";

  py::class_<CompositeDims>(m, "CompositeDims")
      .def(py::init<std::vector<int>>(), py::arg("factors"))
      .def_property_readonly("factors", &CompositeDims::factors)
      .def_property_readonly("total", &CompositeDims::total)
      .def("__repr__", [](const CompositeDims& d) {
        std::string s = "CompositeDims([";
        for (std::size_t j = 0; j < d.factors().size(); ++j)
          s += (j ? "," : "") + std::to_string(d.factors()[j]);
        return s + "])";
      });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_static(
          "validate",
          [](const Matrix& mat, const std::vector<int>& dims) {
            return DensityMatrix::validate(mat, CompositeDims(dims));
          },
          py::arg("matrix"), py::arg("dims"))
      .def_static("maximally_mixed",
                  [](const std::vector<int>& dims) {
                    return DensityMatrix::maximally_mixed(CompositeDims(dims));
                  })
      .def_static("pure",
                  [](const Vector& psi, const std::vector<int>& dims) {
                    return DensityMatrix::pure(psi, CompositeDims(dims));
                  })
      .def_property_readonly("matrix", &DensityMatrix::entries)
      .def_property_readonly("dims",
                             [](const DensityMatrix& r) { return r.dims().factors(); });

  m.def("spectrum",
        [](const DensityMatrix& rho) { return spectrum(rho).values(); });
  m.def("min_eigenvalue", &min_eigenvalue);
  m.def("purity", &purity);
  m.def("mix_with_trace", &mix_with_trace, py::arg("rho"), py::arg("t"));

  py::class_<PPTReport>(m, "PPTReport")
      .def_readonly("min_pt_eigenvalue", &PPTReport::min_pt_eigenvalue)
      .def_readonly("is_ppt", &PPTReport::is_ppt);
  m.def("is_ppt", &is_ppt);
  m.def("partial_transpose", &partial_transpose, py::arg("rho"), py::arg("factor"));

  py::class_<ModulusEstimate>(m, "ModulusEstimate")
      .def_readonly("lower", &ModulusEstimate::lower)
      .def_readonly("upper", &ModulusEstimate::upper)
      .def_readonly("exact", &ModulusEstimate::exact)
      .def_property_readonly("value", &ModulusEstimate::value)
      .def_property_readonly("random_robustness", &ModulusEstimate::random_robustness);
  m.def("modulus_ppt", &modulus_ppt, py::arg("rho"), py::arg("tol") = tol::bisection);
  m.def("l_constant",
        [](const std::vector<int>& dims) { return l_constant(CompositeDims(dims)).value; });

  py::enum_<Verdict>(m, "Verdict")
      .value("certified_separable", Verdict::certified_separable)
      .value("inconclusive", Verdict::inconclusive);
  py::class_<DetectorReport>(m, "DetectorReport")
      .def_readonly("detector_name", &DetectorReport::detector_name)
      .def_readonly("value", &DetectorReport::value)
      .def_readonly("threshold", &DetectorReport::threshold)
      .def_readonly("verdict", &DetectorReport::verdict)
      .def_readonly("conditional", &DetectorReport::conditional);
  m.def("run_all_detectors", &run_all_detectors);
  m.def("theorem1_detector", &theorem1_detector);

  py::class_<Hamiltonian>(m, "Hamiltonian")
      .def(py::init([](const Matrix& mat, const std::vector<int>& dims) {
             return Hamiltonian(mat, CompositeDims(dims));
           }),
           py::arg("matrix"), py::arg("dims"));
  m.def("gibbs", &gibbs, py::arg("h"), py::arg("beta"));
  m.def("beta_o_bound",
        [](const Hamiltonian& h) { return beta_o_bound(h); });

  py::class_<TableEntry>(m, "TableEntry")
      .def_readonly("name", &TableEntry::name)
      .def_readonly("exact", &TableEntry::exact)
      .def_readonly("lo", &TableEntry::lo)
      .def_readonly("hi", &TableEntry::hi);
  m.def("critical_table",
        [](const std::vector<int>& dims) { return critical_table(CompositeDims(dims)); });

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("detail", &CheckResult::detail);
  m.def("run_suite", &run_suite, py::arg("suite"), py::arg("samples") = 0,
        py::arg("seed") = 42, py::arg("counterexample_path") = "");
}
