#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <sstream>

#include "rabiparity/errors.hpp"
#include "rabiparity/fock.hpp"
#include "rabiparity/model.hpp"
#include "rabiparity/parity.hpp"
#include "rabiparity/riccati.hpp"
#include "rabiparity/spectra.hpp"

namespace py = pybind11;
using namespace rabiparity;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  ComplexArray out({n, n});
  std::memcpy(out.mutable_data(), m.entries().data(), m.entries().size() * sizeof(Complex));
  return out;
}

ComplexMatrix from_numpy(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DimensionError("expected a square 2-D array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

ComplexArray vector_to_numpy(const ComplexVector& v) {
  ComplexArray out(static_cast<py::ssize_t>(v.size()));
  std::memcpy(out.mutable_data(), v.data(), v.size() * sizeof(Complex));
  return out;
}

ModelParams make_params(int k, std::size_t dim, double alpha, double omega, Complex g) {
  ModelParams p;
  p.k = k;
  p.dim = dim;
  p.alpha = alpha;
  p.omega = omega;
  p.g = g;
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized parity and block diagonalization of the truncated k-photon Rabi model.";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init(&make_params), py::arg("k"), py::arg("dim"), py::arg("alpha") = 0.0, py::arg("omega") = 1.0,
           py::arg("g") = Complex(0.0))
      .def_readwrite("k", &ModelParams::k)
      .def_readwrite("dim", &ModelParams::dim)
      .def_readwrite("alpha", &ModelParams::alpha)
      .def_readwrite("omega", &ModelParams::omega)
      .def_readwrite("g", &ModelParams::g)
      .def("validate", &ModelParams::validate)
      .def("__repr__", [](const ModelParams& p) {
        std::ostringstream out;
        out << "ModelParams(k=" << p.k << ", dim=" << p.dim << ", alpha=" << p.alpha << ", omega=" << p.omega
            << ", g=(" << p.g.real() << std::showpos << p.g.imag() << "j))";
        return out.str();
      });

  m.def("parse_complex", [](const std::string& s) { return parse_complex(s); });

  m.def(
      "build_hpm",
      [](const ModelParams& p) {
        const BlockOperator b = build_hpm(p);
        return py::make_tuple(to_numpy(b.hp), to_numpy(b.hm));
      },
      "(H+, H-) for the model.");
  m.def("build_full", [](const ModelParams& p) { return to_numpy(build_full(p)); });

  m.def("annihilation", [](std::size_t dim) { return to_numpy(annihilation(dim).matrix); });
  m.def("creation", [](std::size_t dim) { return to_numpy(creation(dim).matrix); });
  m.def("number", [](std::size_t dim) { return to_numpy(number(dim).matrix); });

  m.def("generalized_parity", [](int k, std::size_t dim) {
    const ParityOperator x = generalized_parity(k, dim);
    return std::vector<int>(x.signs().begin(), x.signs().end());
  });
  m.def("generalized_parity_sign", &generalized_parity_sign, py::arg("k"), py::arg("p"));
  m.def("special_parity_P", [](std::size_t dim) {
    const ParityOperator x = special_parity_P(dim);
    return std::vector<int>(x.signs().begin(), x.signs().end());
  });
  m.def("special_parity_T", [](std::size_t dim) {
    const ParityOperator x = special_parity_T(dim);
    return std::vector<int>(x.signs().begin(), x.signs().end());
  });

  m.def(
      "decompose",
      [](int k, std::size_t dim) {
        const SectorDecomposition sd(k, dim);
        std::vector<std::vector<std::size_t>> sectors;
        for (int l = 1; l <= k; ++l) {
          const auto states = sd.sector_states(l);
          sectors.emplace_back(states.begin(), states.end());
        }
        return sectors;
      },
      "Fock indices of each sector l = 1..k.");
  m.def("partial_parity", [](int k, std::size_t dim, int l) {
    return to_numpy(partial_parity(SectorDecomposition(k, dim), l));
  });

  m.def(
      "verify",
      [](const ModelParams& p, const std::string& candidate, double tol, bool with_spectra) {
        const VerificationReport r = verify_model(p, parse_candidate(candidate), tol, with_spectra);
        return py::module_::import("json").attr("loads")(r.to_json(-1));
      },
      py::arg("params"), py::arg("candidate") = "xk", py::arg("tol") = kDefaultVerifyTolerance,
      py::arg("with_spectra") = true, "Verification report as a dict.");

  m.def(
      "block_diagonalize",
      [](const ModelParams& p) {
        const RiccatiCoefficients c = riccati_coefficients(p);
        const BlockDiagonalForm f = block_diagonalize(c, generalized_parity(p.k, p.dim).matrix());
        return py::make_tuple(to_numpy(f.top), to_numpy(f.bottom));
      },
      "(H+ + alpha X_k, H- - alpha X_k).");

  m.def(
      "sector_spectrum",
      [](const ModelParams& p, std::size_t levels) {
        const SectorSpectrum s = sector_spectrum(p, levels);
        return py::make_tuple(s.top, s.bottom);
      },
      py::arg("params"), py::arg("levels"));

  m.def("eigvalsh", [](const ComplexArray& a) { return eigvals_hermitian(from_numpy(a)); });
  m.def("eigh", [](const ComplexArray& a) {
    const HermitianEigen e = eig_hermitian(from_numpy(a));
    return py::make_tuple(e.values, to_numpy(e.vectors));
  });

  m.def(
      "evolve",
      [](const ModelParams& p, const ComplexArray& initial, double dt, int steps) {
        if (initial.ndim() != 1) throw DimensionError("initial state must be 1-D");
        ComplexVector psi(initial.data(), initial.data() + initial.shape(0));
        const Trajectory t = evolve(p, EvolutionSpec{psi, dt, steps});
        const auto rows = static_cast<py::ssize_t>(t.states.size());
        const auto cols = static_cast<py::ssize_t>(psi.size());
        ComplexArray states({rows, cols});
        for (py::ssize_t r = 0; r < rows; ++r)
          std::memcpy(states.mutable_data(r, 0), t.states[static_cast<std::size_t>(r)].data(),
                      psi.size() * sizeof(Complex));
        return py::make_tuple(t.times, states);
      },
      py::arg("params"), py::arg("initial"), py::arg("dt"), py::arg("steps"),
      "(times, states) with one state per row.");
  m.def("vacuum_state", [](const ModelParams& p) { return vector_to_numpy(vacuum_state(p)); });
}
