// Command-line front end: every subcommand emits CSV or JSON on stdout,
// diagnostics on stderr.  Exit codes: 1 usage, 2 bracket failure,
// 3 integration failure, 4 domain error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfangular/core_params.hpp"
#include "gfangular/frobenius.hpp"
#include "gfangular/harmonics.hpp"
#include "gfangular/special.hpp"
#include "gfangular/sturm.hpp"
#include "gfangular/symbolic.hpp"

using json = nlohmann::ordered_json;
using namespace gfangular;

namespace {

constexpr double kPi = std::numbers::pi;

struct GridSpec {
  double lo = 0.0, hi = 0.0, step = 1.0;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &g.lo, &g.hi, &g.step) != 3 ||
      g.step <= 0.0)
    throw CLI::ValidationError("--grid", "expected lo:hi:step with step > 0");
  return g;
}

std::pair<double, double> parse_range(const std::string& s) {
  double lo = 0.0, hi = 0.0;
  if (std::sscanf(s.c_str(), "%lf:%lf", &lo, &hi) != 2 || !(lo < hi))
    throw CLI::ValidationError("--range", "expected lo:hi with lo < hi");
  return {lo, hi};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    out << text;
  }
}

struct PhysFlags {
  PhysicalParams p;
  void attach(CLI::App* cmd, bool with_lambda = true) {
    cmd->add_option("--alpha", p.alpha, "spin ratio a/M");
    cmd->add_option("--k", p.k, "frequency omega*M");
    cmd->add_option("--mu", p.mu_tilde, "mass mu*M");
    cmd->add_option("--m", p.m, "azimuthal integer");
    cmd->add_option("--n", p.n, "Chern number");
    if (with_lambda) cmd->add_option("--lambda", p.lambda, "eigenvalue");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angular equation toolkit for charged massive scalars on Kerr"};
  app.require_subcommand(1);

  std::string config_path;
  if (const char* env = std::getenv("GF_ANGULAR_CONFIG")) config_path = env;
  app.set_config("--config", config_path, "flat key=value config file");

  std::string output;
  app.add_option("--output", output, "write to file instead of stdout")
      ->capture_default_str();
  unsigned seed = 12345;
  app.add_option("--seed", seed, "seed for randomized checks");

  // ---- q ----
  auto* cmd_q = app.add_subcommand("q", "Bocher Q-coefficients");
  PhysFlags qf;
  qf.attach(cmd_q);

  // ---- coeffs ----
  auto* cmd_coeffs = app.add_subcommand("coeffs", "Frobenius coefficients");
  PhysFlags cf;
  cf.attach(cmd_coeffs);
  int coeffs_beta = 1, coeffs_N = 20;
  cmd_coeffs->add_option("--beta", coeffs_beta, "indicial root (0 or 1)");
  cmd_coeffs->add_option("-N,--terms", coeffs_N, "truncation order");

  // ---- verify-tables ----
  auto* cmd_vt = app.add_subcommand("verify-tables",
                                    "regenerate and check the coefficient tables");

  // ---- solve ----
  auto* cmd_solve = app.add_subcommand("solve", "series solutions on a grid");
  PhysFlags sf;
  sf.attach(cmd_solve);
  std::string solve_grid;
  int solve_beta = -1;  // accepted for symmetry; both solutions are emitted
  cmd_solve->add_option("--grid", solve_grid, "z grid lo:hi:step")->required();
  cmd_solve->add_option("--beta", solve_beta, "restrict to one indicial root");

  // ---- quantize ----
  auto* cmd_quant = app.add_subcommand("quantize", "quantized (N, a) table");
  double qB = 0.0, qC = 0.0;
  int qmax = 5;
  cmd_quant->add_option("--B", qB)->required();
  cmd_quant->add_option("--C", qC)->required();
  cmd_quant->add_option("--max-degree", qmax, "largest N");

  // ---- harmonic ----
  auto* cmd_harm = app.add_subcommand("harmonic", "monopole harmonic samples");
  double hB = 0.0, hC = 0.0, ha = 0.0;
  int hN = -1;
  bool closed_form = false, sample = false;
  std::string harm_grid = "-0.9:0.9:0.1";
  cmd_harm->add_option("--B", hB)->required();
  cmd_harm->add_option("--C", hC)->required();
  cmd_harm->add_option("--a", ha, "eigenvalue parameter (generic solution)");
  cmd_harm->add_option("--N", hN, "Jacobi degree (quantized solution)");
  cmd_harm->add_flag("--closed-form", closed_form, "emit u(z) and residuals");
  cmd_harm->add_flag("--sample", sample, "emit Z(phi,theta) samples");
  cmd_harm->add_option("--grid", harm_grid, "z grid lo:hi:step");

  // ---- wuyang-check ----
  auto* cmd_wy = app.add_subcommand("wuyang-check",
                                    "operator identity and eigen-relation report");
  double wy_a0 = 0.0;
  int wy_B_set = 0;
  double wyB = 0.0, wyC = 0.0;
  int wyN = 0;
  cmd_wy->add_option("--a0", wy_a0, "monopole strength for the identity check");
  auto* optB = cmd_wy->add_option("--B", wyB, "also check eigen-relations");
  cmd_wy->add_option("--C", wyC);
  cmd_wy->add_option("--N", wyN);

  // ---- eigen ----
  auto* cmd_eigen = app.add_subcommand("eigen", "eigenvalue scan");
  PhysFlags ef;
  ef.attach(cmd_eigen, false);
  std::string eigen_range;
  int eigen_count = 200;
  cmd_eigen->add_option("--range", eigen_range, "lambda range lo:hi")->required();
  cmd_eigen->add_option("--count", eigen_count, "scan resolution");

  // ---- ortho ----
  auto* cmd_ortho = app.add_subcommand("ortho", "pairwise orthogonality matrix");
  PhysFlags of;
  of.attach(cmd_ortho, false);
  std::string ortho_range;
  int ortho_count = 200;
  cmd_ortho->add_option("--range", ortho_range, "lambda range lo:hi")->required();
  cmd_ortho->add_option("--count", ortho_count, "scan resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_q) {
      QVector q = compute_q(qf.p);
      json out;
      out["Q"] = {q.q0, q.q1, q.q2, q.q3, q.q4};
      emit(out.dump() + "\n", output);
      return 0;
    }

    if (*cmd_coeffs) {
      SeriesSolution s = frobenius_coeffs(compute_q(cf.p), coeffs_beta, coeffs_N);
      json out;
      out["beta"] = s.beta;
      out["coeffs"] = s.coeffs;
      emit(out.dump() + "\n", output);
      return 0;
    }

    if (*cmd_vt) {
      TableReport rep = verify_tables();
      json out;
      out["all_pass"] = rep.all_pass;
      out["rows"] = json::array();
      for (const auto& r : rep.rows) {
        json row;
        row["table"] = r.table;
        row["j"] = r.j;
        row["pass"] = r.pass;
        row["computed"] = r.computed;
        row["expected"] = r.expected;
        if (!r.pass) row["difference"] = r.difference;
        out["rows"].push_back(row);
      }
      emit(out.dump(2) + "\n", output);
      for (const auto& r : rep.rows)
        std::cerr << (r.pass ? "pass  " : "FAIL  ") << r.table << "[" << r.j
                  << "] = " << r.computed << "\n";
      return rep.all_pass ? 0 : 4;
    }

    if (*cmd_solve) {
      GridSpec g = parse_grid(solve_grid);
      QVector q = compute_q(sf.p);
      SeriesSolution s1 = frobenius_adaptive(q, 1);
      SeriesSolution s2 = frobenius_adaptive(q, 0);
      std::string csv = "z,S1,S2,res1,res2\n";
      for (double z = g.lo; z <= g.hi + 1e-12; z += g.step) {
        Jet j1 = series_jet(s1, z);
        Jet j2 = series_jet(s2, z);
        csv += fmt(z) + "," + fmt(j1.f) + "," + fmt(j2.f) + "," +
               fmt(ode_residual(q, j1, z)) + "," + fmt(ode_residual(q, j2, z)) +
               "\n";
      }
      emit(csv, output);
      return 0;
    }

    if (*cmd_quant) {
      double a0 = compute_a0(qB, qC);
      json out = json::array();
      for (int N = 0; N <= qmax; ++N) {
        json row;
        row["N"] = N;
        row["a"] = quantization_a(a0, N);
        out.push_back(row);
      }
      emit(out.dump() + "\n", output);
      return 0;
    }

    if (*cmd_harm) {
      GeneralParams g{ha, 0.0, hB, hC};
      if (hN >= 0) g.a = quantization_a(compute_a0(hB, hC), hN);
      if (sample) {
        Harmonic h = (hN >= 0) ? Harmonic::from_quantized(hB, hC, hN)
                               : Harmonic::from_general(g);
        std::string csv = "phi,theta,reZ,imZ\n";
        for (int i = 1; i < 16; ++i)
          for (int j = 0; j < 16; ++j) {
            double theta = kPi * i / 16, phi = 2 * kPi * j / 16;
            Complex z = eval_Z(h, phi, theta);
            csv += fmt(phi) + "," + fmt(theta) + "," + fmt(z.real()) + "," +
                   fmt(z.imag()) + "\n";
          }
        emit(csv, output);
        return 0;
      }
      // default: closed-form u(z) samples with residuals
      GridSpec grid = parse_grid(harm_grid);
      std::string csv = "z,u,residual\n";
      for (double z = grid.lo; z <= grid.hi + 1e-12; z += grid.step) {
        Jet j = (hN >= 0) ? quantized_solution_jet(hN, g, z) : solve_A0_jet(g, z);
        csv += fmt(z) + "," + fmt(j.f) + "," + fmt(general_residual(g, j, z)) +
               "\n";
      }
      emit(csv, output);
      return 0;
    }

    if (*cmd_wy) {
      json out;
      std::array<double, 3> hs{kPi / 64, kPi / 128, kPi / 256};
      std::array<double, 3> diffs{};
      std::mt19937 rng(seed);
      std::uniform_real_distribution<double> real(-1.0, 1.0);
      std::array<double, 5> cr{}, ci{};
      for (auto& c : cr) c = real(rng);
      for (auto& c : ci) c = real(rng);
      for (int step = 0; step < 3; ++step) {
        AngularGrid grid = AngularGrid::make(hs[step]);
        grid.fill([&](double th, double ph) {
          Complex v = 0.0;
          for (int k = -2; k <= 2; ++k)
            v += Complex(cr[k + 2], ci[k + 2]) *
                 std::pow(std::sin(th), std::abs(k)) *
                 (1.0 + 0.3 * std::cos(th)) * std::exp(Complex(0, k * ph));
          return v;
        });
        diffs[step] = grid_band_maxdiff(apply_L2_composed(grid, wy_a0),
                                        apply_L2_closed(grid, wy_a0), 0.35);
      }
      out["a0"] = wy_a0;
      out["h"] = hs;
      out["composed_vs_closed_maxdiff"] = diffs;
      out["order_estimates"] = {std::log2(diffs[0] / diffs[1]),
                                std::log2(diffs[1] / diffs[2])};
      if (optB->count() > 0) {
        Harmonic h = Harmonic::from_quantized(wyB, wyC, wyN);
        EigenRelationReport fine = check_eigen_relations(h, kPi / 256);
        EigenRelationReport coarse = check_eigen_relations(h, kPi / 128);
        out["eigen_relations"] = {
            {"lz_residual", fine.lz_residual},
            {"l2_residual", fine.l2_residual},
            {"l2_order", std::log2(coarse.l2_residual / fine.l2_residual)}};
      }
      emit(out.dump(2) + "\n", output);
      return 0;
    }

    if (*cmd_eigen) {
      auto [lo, hi] = parse_range(eigen_range);
      ShootingSolver solver(ef.p);
      auto results = solver.scan(lo, hi, eigen_count);
      json out = json::array();
      for (const auto& r : results) {
        json row;
        row["l_index"] = r.l_index;
        row["lambda"] = r.lambda;
        row["nodes"] = r.node_count;
        row["residual"] = r.residual;
        out.push_back(row);
      }
      emit(out.dump() + "\n", output);
      return 0;
    }

    if (*cmd_ortho) {
      auto [lo, hi] = parse_range(ortho_range);
      ShootingSolver solver(of.p);
      auto results = solver.scan(lo, hi, ortho_count);
      json out;
      json lambdas = json::array();
      for (const auto& r : results) lambdas.push_back(r.lambda);
      out["lambda"] = lambdas;
      json matrix = json::array();
      for (const auto& ri : results) {
        json row = json::array();
        for (const auto& rj : results)
          row.push_back(orthogonality_integral(solver, ri.lambda, rj.lambda));
        matrix.push_back(row);
      }
      out["integrals"] = matrix;
      emit(out.dump() + "\n", output);
      return 0;
    }
  } catch (const BracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IntegrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
