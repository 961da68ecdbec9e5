// Python bindings for the main operations: the four spectral functions and
// the derived family on complex matrices, splitting, the geometric mean, the
// segment square root, exact rational scalar evaluation, the identity
// catalog, the verification suites, and fixture generation.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "ringcalc/fixtures.hpp"
#include "ringcalc/halffree.hpp"
#include "ringcalc/identities.hpp"
#include "ringcalc/spectral.hpp"
#include "ringcalc/verify_suites.hpp"

namespace py = pybind11;
using namespace ringcalc;

namespace {

using CM = ComplexMatrixRing<double>;
using MatC = Matrix<Cplx<double>>;
using PyMat = std::vector<std::vector<std::complex<double>>>;

MatC to_matrix(const PyMat& rows) {
  std::size_t n = rows.size();
  MatC m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {rows[i][j].real(), rows[i][j].imag()};
  }
  return m;
}

PyMat from_matrix(const MatC& m) {
  PyMat rows(m.dim(), std::vector<std::complex<double>>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = {m(i, j).re, m(i, j).im};
  return rows;
}

Backend<CM> make_backend(const std::string& backend, int nodes,
                         const std::optional<PyMat>& oracle_v,
                         const std::optional<std::vector<std::complex<double>>>& oracle_eigs) {
  if (backend == "quadrature") return Backend<CM>::quadrature(nodes);
  if (backend == "oracle") {
    if (!oracle_v || !oracle_eigs)
      throw std::invalid_argument("oracle backend needs oracle_v and oracle_eigs");
    OracleData<CM> od;
    od.v = to_matrix(*oracle_v);
    auto inv = od.v.try_invert();
    if (!inv) throw std::invalid_argument("oracle conjugation matrix is singular");
    od.v_inv = *inv;
    for (const auto& e : *oracle_eigs) od.eigs.push_back({e.real(), e.imag()});
    return Backend<CM>::with_oracle(std::move(od));
  }
  throw std::invalid_argument("backend must be quadrature or oracle");
}

py::dict result_dict(const SpectralResult<CM>& res) {
  py::dict d;
  d["value"] = from_matrix(res.value);
  d["residuals"] = res.residuals;
  d["error_budget"] = res.error_budget;
  d["backend"] = backend_name(res.backend);
  d["nodes"] = res.nodes;
  d["class_verified"] = res.class_verified;
  return d;
}

py::dict compute(const std::string& fn, const PyMat& a, const std::string& backend, int nodes,
                 const std::optional<PyMat>& oracle_v,
                 const std::optional<std::vector<std::complex<double>>>& oracle_eigs) {
  auto m = to_matrix(a);
  CM ring(m.dim());
  auto b = make_backend(backend, nodes, oracle_v, oracle_eigs);
  if (fn == "sgn") return result_dict(sgn(ring, m, b));
  if (fn == "sqrt") return result_dict(sqrt_spec(ring, m, b));
  if (fn == "idem") return result_dict(idem_spec(ring, m, b));
  if (fn == "fsqrt") return result_dict(fsqrt_spec(ring, m, b));
  if (fn == "absr") return result_dict(derived_decomposition(ring, DerivedKind::AbsR, m, b));
  if (fn == "absi") return result_dict(derived_decomposition(ring, DerivedKind::AbsI, m, b));
  if (fn == "pol") return result_dict(derived_decomposition(ring, DerivedKind::Pol, m, b));
  if (fn == "absF") return result_dict(derived_decomposition(ring, DerivedKind::AbsF, m, b));
  if (fn == "pertr") return result_dict(derived_decomposition(ring, DerivedKind::PertR, m, b));
  throw std::invalid_argument("unknown fn: " + fn);
}

Rational parse_rational(const std::string& s) {
  auto q = rational_parse(s);
  if (!q) throw std::invalid_argument("not a rational: " + s);
  return *q;
}

std::string exact_fn(const std::string& fn, const std::string& value) {
  RationalRing ring;
  auto b = Backend<RationalRing>::series(32);
  auto x = parse_rational(value);
  if (fn == "sgn") return sgn(ring, x, b).value.str();
  if (fn == "sqrt") return sqrt_spec(ring, x, b).value.str();
  if (fn == "idem") return idem_spec(ring, x, b).value.str();
  if (fn == "fsqrt") return fsqrt_spec(ring, x, b).value.str();
  if (fn == "fsqrt_nohalf") return fsqrt_nohalf(ring, x).value.str();
  if (fn == "idem_nohalf") return idem_nohalf(ring, x).value.str();
  throw std::invalid_argument("unknown fn: " + fn);
}

}  // namespace

PYBIND11_MODULE(_ringcalc, m) {
  m.doc() = "spectral functional calculus on generic rings";

  m.def("compute", &compute, py::arg("fn"), py::arg("a"), py::arg("backend") = "quadrature",
        py::arg("nodes") = 64, py::arg("oracle_v") = std::nullopt,
        py::arg("oracle_eigs") = std::nullopt,
        "evaluate sgn/sqrt/idem/fsqrt/absr/absi/pol/absF/pertr on a complex matrix");

  m.def(
      "split",
      [](const PyMat& a, int nodes) {
        auto mat = to_matrix(a);
        CM ring(mat.dim());
        auto sp = spectral_split(ring, mat, Backend<CM>::quadrature(nodes));
        py::dict d;
        d["proj_minus"] = from_matrix(sp.proj_minus);
        d["proj_plus"] = from_matrix(sp.proj_plus);
        d["q_minus"] = from_matrix(sp.q_minus);
        d["q_plus"] = from_matrix(sp.q_plus);
        d["residuals"] = sp.residuals;
        return d;
      },
      py::arg("a"), py::arg("nodes") = 64);

  m.def(
      "geometric_mean",
      [](const PyMat& a, const PyMat& b, int nodes) {
        auto ma = to_matrix(a), mb = to_matrix(b);
        CM ring(ma.dim());
        return result_dict(geometric_mean(ring, ma, mb, Backend<CM>::quadrature(nodes)));
      },
      py::arg("a"), py::arg("b"), py::arg("nodes") = 128);

  m.def(
      "sqrt_segment",
      [](const PyMat& a, int nodes) {
        auto ma = to_matrix(a);
        CM ring(ma.dim());
        return result_dict(sqrt_real_segment(ring, ma, nodes));
      },
      py::arg("a"), py::arg("nodes") = 64);

  m.def(
      "cayley",
      [](std::complex<double> q) {
        ComplexRing<double> ring;
        auto w = cayley(ring, Cplx<double>(q.real(), q.imag()));
        return std::complex<double>(w.re, w.im);
      },
      py::arg("q"), "q -> (1-q)(1+q)^{-1}; the map is its own inverse");

  m.def("exact", &exact_fn, py::arg("fn"), py::arg("value"),
        "exact rational scalar evaluation; value and result are 'num/den' strings");

  m.def(
      "verify_identities",
      [](const std::string& set) {
        py::list out;
        for (const auto& r : verify_identities(set)) {
          py::dict d;
          d["id"] = r.id;
          d["set"] = r.set_tag;
          d["verified"] = r.verified;
          d["needs_half"] = r.needs_half;
          d["residual"] = r.residual;
          out.append(d);
        }
        return out;
      },
      py::arg("set") = "all");

  m.def(
      "run_suite",
      [](const std::string& name, double tol) {
        py::list out;
        for (const auto& c : run_suite(name, tol)) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("name") = "all", py::arg("tol") = 1e-8);

  m.def(
      "generate_fixture",
      [](int n, const std::vector<std::complex<double>>& eigs, std::uint64_t seed) {
        std::vector<Cplx<double>> es;
        for (const auto& e : eigs) es.push_back({e.real(), e.imag()});
        auto fx = make_fixture<double>(n, es, seed);
        py::dict d;
        d["a"] = from_matrix(fx.a);
        d["v"] = from_matrix(fx.v);
        d["v_inv"] = from_matrix(fx.v_inv);
        d["eigs"] = eigs;
        return d;
      },
      py::arg("n"), py::arg("eigs"), py::arg("seed") = 1);

  py::register_exception<spectral_class_error>(m, "SpectralClassError");
  py::register_exception<decay_error>(m, "DecayError");
}
