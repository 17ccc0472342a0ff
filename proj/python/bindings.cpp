#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfangular/core_params.hpp"
#include "gfangular/frobenius.hpp"
#include "gfangular/harmonics.hpp"
#include "gfangular/special.hpp"
#include "gfangular/sturm.hpp"
#include "gfangular/symbolic.hpp"

namespace py = pybind11;
using namespace gfangular;

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Angular equation toolkit for charged massive scalars on Kerr";

  py::register_exception<BracketError>(mod, "BracketError");
  py::register_exception<IntegrationError>(mod, "IntegrationError");

  py::class_<PhysicalParams>(mod, "PhysicalParams")
      .def(py::init([](double alpha, double k, double mu, int m, int n,
                       double lambda) {
             return PhysicalParams{alpha, k, mu, m, n, lambda};
           }),
           py::arg("alpha") = 0.0, py::arg("k") = 0.0, py::arg("mu") = 0.0,
           py::arg("m") = 0, py::arg("n") = 0, py::arg("lam") = 0.0)
      .def_readwrite("alpha", &PhysicalParams::alpha)
      .def_readwrite("k", &PhysicalParams::k)
      .def_readwrite("mu", &PhysicalParams::mu_tilde)
      .def_readwrite("m", &PhysicalParams::m)
      .def_readwrite("n", &PhysicalParams::n)
      .def_readwrite("lam", &PhysicalParams::lambda);

  py::class_<GeneralParams>(mod, "GeneralParams")
      .def(py::init([](double a, double A, double B, double C) {
             return GeneralParams{a, A, B, C};
           }),
           py::arg("a") = 0.0, py::arg("A") = 0.0, py::arg("B") = 0.0,
           py::arg("C") = 0.0)
      .def_readwrite("a", &GeneralParams::a)
      .def_readwrite("A", &GeneralParams::A)
      .def_readwrite("B", &GeneralParams::B)
      .def_readwrite("C", &GeneralParams::C);

  mod.def("compute_q",
          [](const PhysicalParams& p) { return compute_q(p).as_array(); },
          py::arg("params"), "Bocher Q-coefficients (Q0..Q4)");
  mod.def("general_to_q",
          [](const GeneralParams& g) { return general_to_q(g).as_array(); });
  mod.def("gf_to_general", &gf_to_general, py::arg("params"));
  mod.def("compute_a0", &compute_a0, py::arg("B"), py::arg("C"));
  mod.def("exponents", &exponents, py::arg("a0"), py::arg("C"));

  mod.def(
      "frobenius_coeffs",
      [](const PhysicalParams& p, int beta, int N) {
        return frobenius_coeffs(compute_q(p), beta, N).coeffs;
      },
      py::arg("params"), py::arg("beta"), py::arg("N"));
  mod.def(
      "eval_series",
      [](const PhysicalParams& p, int beta, double z) {
        SeriesSolution s = frobenius_adaptive(compute_q(p), beta);
        return eval_series(s, z).value;
      },
      py::arg("params"), py::arg("beta"), py::arg("z"),
      "adaptive Frobenius series value at z, |z| <= 0.9");
  mod.def(
      "ode_residual",
      [](const PhysicalParams& p, int beta, double z) {
        QVector q = compute_q(p);
        SeriesSolution s = frobenius_adaptive(q, beta);
        return ode_residual(q, series_jet(s, z), z);
      },
      py::arg("params"), py::arg("beta"), py::arg("z"));

  mod.def("gauss_2f1", &gauss_2f1, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("z"));
  mod.def("jacobi_poly", &jacobi_poly, py::arg("N"), py::arg("alpha"),
          py::arg("beta"), py::arg("z"));
  mod.def("solve_A0", &solve_A0, py::arg("params"), py::arg("z"));
  mod.def("quantization_a", &quantization_a, py::arg("a0"), py::arg("N"));
  mod.def("quantization_lambda", &quantization_lambda, py::arg("a0"),
          py::arg("N"));
  mod.def("quantized_solution", &quantized_solution, py::arg("N"),
          py::arg("params"), py::arg("z"));

  py::class_<Harmonic>(mod, "Harmonic")
      .def_static("from_general", &Harmonic::from_general)
      .def_static("from_quantized", &Harmonic::from_quantized, py::arg("B"),
                  py::arg("C"), py::arg("N"))
      .def_readonly("a0", &Harmonic::a0)
      .def_readonly("a", &Harmonic::a)
      .def_readonly("alpha_exp", &Harmonic::alpha_exp)
      .def_readonly("beta_exp", &Harmonic::beta_exp);
  mod.def("eval_Z", &eval_Z, py::arg("harmonic"), py::arg("phi"),
          py::arg("theta"));
  mod.def("lz_eigenvalue", &Lz_eigenvalue, py::arg("harmonic"));
  mod.def(
      "check_eigen_relations",
      [](const Harmonic& h, double grid_h, double band) {
        EigenRelationReport r = check_eigen_relations(h, grid_h, band);
        return py::make_tuple(r.lz_residual, r.l2_residual);
      },
      py::arg("harmonic"), py::arg("h"), py::arg("band") = 0.35,
      "(lz_residual, l2_residual) on the interior band");

  py::class_<EigenResult>(mod, "EigenResult")
      .def_readonly("l_index", &EigenResult::l_index)
      .def_readonly("lam", &EigenResult::lambda)
      .def_readonly("node_count", &EigenResult::node_count)
      .def_readonly("residual", &EigenResult::residual);

  py::class_<ShootingSolver>(mod, "ShootingSolver")
      .def(py::init<const PhysicalParams&>(), py::arg("params"))
      .def("matching", &ShootingSolver::matching, py::arg("lam"))
      .def("solve", &ShootingSolver::solve, py::arg("lambda_lo"),
           py::arg("lambda_hi"))
      .def("scan", &ShootingSolver::scan, py::arg("lambda_min"),
           py::arg("lambda_max"), py::arg("count") = 200)
      .def("eigenfunction_values", &ShootingSolver::eigenfunction_values,
           py::arg("lam"), py::arg("xs"));
  mod.def("orthogonality_integral", &orthogonality_integral, py::arg("solver"),
          py::arg("lambda_i"), py::arg("lambda_j"));

  mod.def("verify_tables", []() {
    TableReport rep = verify_tables();
    py::list rows;
    for (const auto& r : rep.rows)
      rows.append(py::make_tuple(r.table, r.j, r.pass, r.computed, r.expected));
    return py::make_tuple(rep.all_pass, rows);
  });
}
