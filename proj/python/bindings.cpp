#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>

#include "qgeom/entanglement.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/sampling.hpp"
#include "qgeom/spinops.hpp"
#include "qgeom/states.hpp"

namespace py = pybind11;
using namespace qgeom;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

ComplexMatrix from_numpy(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1) || a.shape(0) == 0) {
    throw DimensionError("expected a square matrix");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

DensityMatrix density(const CArray& a) { return DensityMatrix::from_matrix(from_numpy(a)); }

Sector parse_sector(const std::string& s) {
  if (s == "s0") return Sector::S0;
  if (s == "s1") return Sector::S1;
  throw DomainError("sector must be 's0' or 's1'");
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw DomainError("axis must be 'x', 'y' or 'z'");
}

Qubit parse_qubit(int q) {
  if (q == 1) return Qubit::First;
  if (q == 2) return Qubit::Second;
  throw DomainError("qubit must be 1 or 2");
}

Spin parse_spin(const std::string& s) {
  if (s == "up") return Spin::Up;
  if (s == "down") return Spin::Down;
  throw DomainError("spin must be 'up' or 'down'");
}

Ensemble parse_terms(const std::vector<std::tuple<double, std::string, double, double>>& terms) {
  std::vector<EnsembleTerm> out;
  out.reserve(terms.size());
  for (const auto& [w, sector, theta, phi] : terms) {
    out.push_back({w, PureStateParams(parse_sector(sector), theta, phi)});
  }
  return Ensemble(std::move(out));
}

py::dict trig_dict(const TrigExpectations& e) {
  py::dict d;
  d["cos_mean"] = e.cos_mean;
  d["sin_mean"] = e.sin_mean;
  d["cos_variance"] = e.cos_variance;
  d["sin_variance"] = e.sin_variance;
  return d;
}

py::object optional(const std::optional<double>& v) {
  return v ? py::object(py::float_(*v)) : py::object(py::none());
}

py::dict report_dict(const ConcurrenceReport& r) {
  py::dict d;
  d["c_s0"] = r.c_s0;
  d["c_s1"] = r.c_s1;
  d["c_mixed"] = optional(r.c_mixed);
  d["c_mixed_reason"] = r.c_mixed ? py::object(py::none()) : py::object(py::str(r.c_mixed_unavailable_reason));
  d["c_wootters"] = r.c_wootters;
  d["residual"] = optional(r.residual);
  d["eof"] = r.entanglement_of_formation;
  py::dict proj;
  proj["uu"] = r.projectors.uu;
  proj["ud"] = r.projectors.ud;
  proj["du"] = r.projectors.du;
  proj["dd"] = r.projectors.dd;
  d["projectors"] = proj;
  d["s0"] = trig_dict(r.s0);
  d["s1"] = trig_dict(r.s1);
  d["big_phi_mean"] = r.big_phi.mean;
  d["big_phi_variance"] = r.big_phi.variance;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trigonometric phase operators and concurrence for two spin-1/2 particles";

  auto base = py::register_exception<Error>(m, "QGeomError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
  py::register_exception<NotPsdError>(m, "NotPsdError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NotInClassError>(m, "NotInClassError", base.ptr());

  m.def("pauli", [](const std::string& axis) { return to_numpy(pauli(parse_axis(axis))); }, py::arg("axis"));
  m.def("spin_component",
        [](int q, const std::string& axis) { return to_numpy(spin_component(parse_qubit(q), parse_axis(axis))); },
        py::arg("qubit"), py::arg("axis"));
  m.def("trig_operators", [](const std::string& sector) {
    const TrigOperatorSet t = trig_operators(parse_sector(sector));
    py::dict d;
    d["cos"] = to_numpy(t.cos_op);
    d["sin"] = to_numpy(t.sin_op);
    d["conjugate_momentum"] = to_numpy(t.conjugate_momentum);
    return d;
  }, py::arg("sector"));
  m.def("angle_operators", [](const std::string& sector) {
    const AngleOperatorPair a = angle_operators(trig_operators(parse_sector(sector)));
    py::dict d;
    d["phi_c"] = to_numpy(a.phi_c);
    d["phi_s"] = to_numpy(a.phi_s);
    return d;
  }, py::arg("sector"));
  m.def("cos_big_phi", [] { return to_numpy(cos_big_phi()); });
  m.def("projector",
        [](int q, const std::string& spin) { return to_numpy(projector(parse_qubit(q), parse_spin(spin))); },
        py::arg("qubit"), py::arg("spin"));
  m.def("rotation",
        [](int q, const std::string& axis, double angle) {
          return to_numpy(rotation(parse_qubit(q), parse_axis(axis), angle));
        },
        py::arg("qubit"), py::arg("axis"), py::arg("angle"));
  m.def("hermitian_eig", [](const CArray& a) {
    const EigenDecomposition e = hermitian_eig(from_numpy(a));
    return py::make_tuple(e.eigenvalues, to_numpy(e.eigenvectors));
  }, py::arg("matrix"));

  m.def("pure_state", [](const std::string& sector, double theta, double phi) {
    const auto amp = pure_state(PureStateParams(parse_sector(sector), theta, phi)).amplitudes();
    CArray out(4);
    std::copy(amp.begin(), amp.end(), out.mutable_data());
    return out;
  }, py::arg("sector"), py::arg("theta"), py::arg("phi"));
  m.def("pure_density", [](const std::string& sector, double theta, double phi) {
    return to_numpy(density_from_pure(pure_state(PureStateParams(parse_sector(sector), theta, phi))).matrix());
  }, py::arg("sector"), py::arg("theta"), py::arg("phi"));
  m.def("ensemble_density",
        [](const std::vector<std::tuple<double, std::string, double, double>>& terms) {
          return to_numpy(ensemble_density(parse_terms(terms)).matrix());
        },
        py::arg("terms"), "terms: list of (weight, sector, theta, phi)");
  m.def("werner_density", [](double p) { return to_numpy(ensemble_density(werner_ensemble(p)).matrix()); },
        py::arg("p"));
  m.def("is_sz2_symmetric", [](const CArray& rho, double tol) { return validate_sz2_symmetry(density(rho), tol); },
        py::arg("rho"), py::arg("tol") = kSz2SymmetryTol);

  m.def("expectation", [](const CArray& rho, const CArray& op) { return expectation(density(rho), from_numpy(op)); },
        py::arg("rho"), py::arg("op"));
  m.def("variance", [](const CArray& rho, const CArray& op) { return variance(density(rho), from_numpy(op)); },
        py::arg("rho"), py::arg("op"));
  m.def("trig_expectations",
        [](const CArray& rho, const std::string& sector) {
          return trig_dict(trig_expectations(density(rho), parse_sector(sector)));
        },
        py::arg("rho"), py::arg("sector"));
  m.def("geometric_concurrence",
        [](const CArray& rho, const std::string& sector) {
          return geometric_concurrence(density(rho), parse_sector(sector));
        },
        py::arg("rho"), py::arg("sector"));
  m.def("mixed_concurrence", [](const CArray& rho) { return mixed_concurrence(density(rho)); }, py::arg("rho"));
  m.def("wootters_concurrence", [](const CArray& rho) { return wootters_concurrence(density(rho)); },
        py::arg("rho"));
  m.def("entanglement_of_formation", &entanglement_of_formation, py::arg("c"));
  m.def("analyze", [](const CArray& rho) { return report_dict(analyze(density(rho))); }, py::arg("rho"));

  m.def("compare_random",
        [](std::size_t samples, std::uint64_t seed, unsigned shards) {
          RandomComparison r = [&] {
            py::gil_scoped_release release;
            return compare_random_ensembles(samples, seed, shards);
          }();
          py::dict d;
          d["samples"] = r.samples;
          d["max_abs_diff"] = r.max_abs_diff;
          d["mean_abs_diff"] = r.mean_abs_diff;
          d["worst_index"] = r.worst_index;
          py::list worst;
          for (const auto& t : r.worst.terms()) {
            worst.append(py::make_tuple(t.weight, std::string(to_string(t.params.sector())), t.params.theta(),
                                        t.params.phi()));
          }
          d["worst_terms"] = worst;
          return d;
        },
        py::arg("samples") = 10000, py::arg("seed") = 42, py::arg("shards") = 1);
}
