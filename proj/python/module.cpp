// Python bindings for the transformation non-locality toolkit.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "diracnl/dirac_algebra.hpp"
#include "diracnl/special_functions.hpp"
#include "diracnl/transform_core.hpp"
#include "diracnl/variance.hpp"

namespace py = pybind11;
using namespace diracnl;

namespace {

py::array_t<std::complex<double>> to_numpy(const Matrix4C& m) {
  py::array_t<std::complex<double>> out({4, 4});
  auto buf = out.mutable_unchecked<2>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) buf(i, j) = m(i, j);
  return out;
}

TransformKind parse_kind(const std::string& name) {
  if (name == "fw" || name == "FW") return TransformKind::FW;
  if (name == "mo" || name == "MO") return TransformKind::MO;
  throw std::invalid_argument("transform must be 'fw' or 'mo'");
}

Momentum3 as_momentum(double px, double py_, double pz) { return {px, py_, pz}; }

py::array_t<std::complex<double>> profile_values(const ProfileCurve& curve) {
  py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(curve.values.size()));
  auto buf = out.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < out.size(); ++i)
    buf(i) = curve.values[static_cast<std::size_t>(i)];
  return out;
}

} // namespace

PYBIND11_MODULE(_diracnl, m) {
  m.doc() = "Coordinate-space non-locality of the Foldy-Wouthuysen and "
            "Moss-Okninski transformations of the free Dirac equation. "
            "Natural units: hbar = m = c = 1, lengths in Compton wavelengths.";

  // momentum-space unitaries and Hamiltonians
  m.def("hamiltonian",
        [](double px, double py_, double pz) {
          return to_numpy(hamiltonian(as_momentum(px, py_, pz)));
        },
        py::arg("px"), py::arg("py"), py::arg("pz"));
  m.def("hamiltonian_prime",
        [](double px, double py_, double pz) {
          return to_numpy(hamiltonian_prime(as_momentum(px, py_, pz)));
        },
        py::arg("px"), py::arg("py"), py::arg("pz"));
  m.def("u_fw",
        [](double px, double py_, double pz) {
          return to_numpy(u_fw(as_momentum(px, py_, pz)));
        },
        py::arg("px"), py::arg("py"), py::arg("pz"));
  m.def("u_mo",
        [](double px, double py_, double pz) {
          return to_numpy(u_mo(as_momentum(px, py_, pz)));
        },
        py::arg("px"), py::arg("py"), py::arg("pz"));
  m.def("u_mo_total",
        [](double px, double py_, double pz) {
          return to_numpy(u_mo_total(as_momentum(px, py_, pz)));
        },
        py::arg("px"), py::arg("py"), py::arg("pz"));
  m.def("v_op", [] { return to_numpy(v_op()); });
  m.def("dirac_matrices", [] {
    const auto& d = dirac_matrices();
    py::dict out;
    out["alpha_x"] = to_numpy(d.alpha_x);
    out["alpha_y"] = to_numpy(d.alpha_y);
    out["alpha_z"] = to_numpy(d.alpha_z);
    out["beta"] = to_numpy(d.beta);
    out["delta"] = to_numpy(d.delta);
    return out;
  });

  // kernel moments
  m.def("moment",
        [](const std::string& kind, int order) {
          const auto res = moment(parse_kind(kind), order);
          return py::make_tuple(to_numpy(res.matrix), to_numpy(res.analytic_reference));
        },
        py::arg("transform"), py::arg("order"),
        "Numeric kernel moment and its analytic reference, as 4x4 arrays.");

  // special functions
  m.def("bessel_k", &bessel_k, py::arg("nu"), py::arg("x"));
  m.def("bessel_k_scaled", &bessel_k_scaled, py::arg("nu"), py::arg("x"));
  m.def("erf", &diracnl::erf, py::arg("x"));
  m.def("erfcx", &erfcx, py::arg("x"));
  m.def("a_integral_closed",
        [](double nu, int mu, double dbar) {
          return a_integral_closed({nu, mu, dbar});
        },
        py::arg("nu"), py::arg("mu"), py::arg("dbar"));
  m.def("a_integral_quadrature",
        [](double nu, int mu, double dbar) {
          return a_integral_quadrature({nu, mu, dbar});
        },
        py::arg("nu"), py::arg("mu"), py::arg("dbar"));

  // transformed-packet integrals
  m.def("t0", [](double d, double r) { return t0_value(PacketSpec::gaussian(d), r); },
        py::arg("d"), py::arg("r"));
  m.def("t0_eta",
        [](double d, double r) { return t0_value_eta(PacketSpec::gaussian(d), r); },
        py::arg("d"), py::arg("r"));
  m.def("tz", [](double d, double z) { return tz_value(PacketSpec::gaussian(d), z); },
        py::arg("d"), py::arg("z"));
  m.def("s0", [](double d, double r) { return s0_value(PacketSpec::gaussian(d), r); },
        py::arg("d"), py::arg("r"));
  m.def("sz", [](double d, double z) { return sz_value(PacketSpec::gaussian(d), z); },
        py::arg("d"), py::arg("z"));
  m.def("s_aux",
        [](double d, double r) { return s_aux_value(PacketSpec::gaussian(d), r); },
        py::arg("d"), py::arg("r"));
  m.def("packet_f", [](double d, double r) { return PacketSpec::gaussian(d).f(r); },
        py::arg("d"), py::arg("r"));
  m.def("d0", &d0_value, py::arg("r"));
  m.def("dz_regular", [](double z) { return dz_regular_value(z); }, py::arg("z"));
  m.def("b0_regular_exact", [](double r) { return b0_regular_exact(r); }, py::arg("r"));
  m.def("b0_regular_approx", &b0_regular_approx, py::arg("r"), py::arg("c0"));
  m.def("b0_g", &b0_g_function, py::arg("k"));

  m.def("t0_profile",
        [](double d, const std::vector<double>& grid) {
          return profile_values(t0_profile(PacketSpec::gaussian(d), grid, {}));
        },
        py::arg("d"), py::arg("r_grid"));
  m.def("s0_profile",
        [](double d, const std::vector<double>& grid) {
          return profile_values(s0_profile(PacketSpec::gaussian(d), grid, {}));
        },
        py::arg("d"), py::arg("r_grid"));
  m.def("tz_profile",
        [](double d, const std::vector<double>& grid) {
          return profile_values(tz_profile(PacketSpec::gaussian(d), grid, {}));
        },
        py::arg("d"), py::arg("z_grid"));
  m.def("sz_profile",
        [](double d, const std::vector<double>& grid) {
          return profile_values(sz_profile(PacketSpec::gaussian(d), grid, {}));
        },
        py::arg("d"), py::arg("z_grid"));

  // variances
  m.def("variance_closed",
        [](const std::string& kind, double d) {
          const auto res = variance_closed(parse_kind(kind), d);
          py::dict out;
          out["value"] = res.value;
          out["norm_check"] = res.norm_check;
          out["breakdown"] = res.breakdown;
          return out;
        },
        py::arg("transform"), py::arg("d"));
  m.def("variance_oracle",
        [](const std::string& kind, double d) {
          return variance_oracle(parse_kind(kind), d);
        },
        py::arg("transform"), py::arg("d"));
  m.def("variance_sweep",
        [](const std::string& kind, const std::vector<double>& grid) {
          const auto results = variance_sweep(parse_kind(kind), grid);
          std::vector<double> values;
          values.reserve(results.size());
          for (const auto& r : results) values.push_back(r.value);
          return values;
        },
        py::arg("transform"), py::arg("d_grid"));
  m.def("log_grid", &log_grid, py::arg("lo"), py::arg("hi"), py::arg("points"));
}
