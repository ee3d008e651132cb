// Command-line front end: phase-space spinor amplitudes, Wigner and Husimi
// functions for finite spin on the sphere and on the (2j+1)^2 lattice.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "spinphase/errors.hpp"
#include "spinphase/lattice.hpp"
#include "spinphase/nmr.hpp"
#include "spinphase/output.hpp"
#include "spinphase/sphere.hpp"
#include "spinphase/statespec.hpp"
#include "spinphase/verify.hpp"

namespace {

using namespace spinphase;
using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
  double j_value = 0.5;
  bool j_given = false;
  std::string state_spec = "up";
  std::string window_spec = "up";
  int band_limit = -1;  // -1: derive from j
  std::string format = "csv";
  std::string output = "-";
  bool no_normalize = false;

  void add_state_flags(CLI::App* cmd, bool with_window = true) {
    cmd->add_option("--state", state_spec, "state spec: components | css:t,p | up | down");
    if (with_window) {
      cmd->add_option("--window", window_spec, "window state spec (default: up)");
    }
    cmd->add_flag("--no-normalize", no_normalize, "accept unnormalized state input");
    cmd->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", output, "output path (default: stdout)");
  }

  void add_j_flag(CLI::App* cmd) {
    cmd->add_option("--j", j_value, "spin quantum number (multiple of 1/2)")
        ->each([this](const std::string&) { j_given = true; });
  }

  void add_grid_flag(CLI::App* cmd) {
    cmd->add_option("-L,--L,--band-limit", band_limit, "quadrature band limit");
  }

  HalfInt j() const { return HalfInt::from_value(j_value); }

  std::optional<HalfInt> expected_j() const {
    if (j_given) return j();
    return std::nullopt;
  }

  SpinState state() const {
    return parse_state_spec(state_spec, expected_j(), no_normalize);
  }
  SpinState window() const { return parse_state_spec(window_spec, expected_j(), false); }

  GridPtr grid(HalfInt spin) const {
    const int fallback = recommended_band_limit(spin.twice());
    return build_grid(band_limit >= 0 ? band_limit : fallback);
  }
};

std::string csv_line(std::initializer_list<double> values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ",";
    line += format_double(v);
  }
  line += "\n";
  return line;
}

ordered_json meta_json(const std::string& command, ordered_json params) {
  return ordered_json{{"meta", ordered_json{{"command", command},
                                            {"params", std::move(params)}}}};
}

void emit_sphere_field(const CommonOpts& opts, const std::string& command,
                       const SphereField& field, ordered_json params,
                       const HalfSpinCoeffs* coeffs = nullptr) {
  const SphereGrid& grid = *field.grid;
  if (opts.format == "csv") {
    std::string text = "theta,phi,re,im\n";
    for (int node = 0; node < grid.size(); ++node) {
      text += csv_line({grid.node_theta(node), grid.node_phi(node),
                        field.values(node).real(), field.values(node).imag()});
    }
    write_text(opts.output, text);
    return;
  }
  ordered_json doc = meta_json(command, std::move(params));
  if (coeffs != nullptr) {
    doc["coefficients"] =
        ordered_json{{"a00", complex_json(coeffs->a00)},
                     {"a1m1", complex_json(coeffs->a1m1)},
                     {"a10", complex_json(coeffs->a10)},
                     {"a11", complex_json(coeffs->a11)}};
  }
  ordered_json rows = ordered_json::array();
  for (int node = 0; node < grid.size(); ++node) {
    rows.push_back(ordered_json{{"theta", grid.node_theta(node)},
                                {"phi", grid.node_phi(node)},
                                {"value", complex_json(field.values(node))}});
  }
  doc["data"] = std::move(rows);
  write_text(opts.output, doc.dump(2) + "\n");
}

void emit_lattice_field(const CommonOpts& opts, const std::string& command,
                        const LatticeField& field, ordered_json params) {
  if (opts.format == "csv") {
    std::string text = "alpha,beta,re,im\n";
    for (int alpha = 0; alpha < field.d; ++alpha) {
      for (int beta = 0; beta < field.d; ++beta) {
        text += csv_line({static_cast<double>(alpha), static_cast<double>(beta),
                          field.at(alpha, beta).real(), field.at(alpha, beta).imag()});
      }
    }
    write_text(opts.output, text);
    return;
  }
  ordered_json doc = meta_json(command, std::move(params));
  ordered_json rows = ordered_json::array();
  for (int alpha = 0; alpha < field.d; ++alpha) {
    for (int beta = 0; beta < field.d; ++beta) {
      rows.push_back(ordered_json{{"alpha", alpha},
                                  {"beta", beta},
                                  {"value", complex_json(field.at(alpha, beta))}});
    }
  }
  doc["data"] = std::move(rows);
  write_text(opts.output, doc.dump(2) + "\n");
}

void warn_if_not_real(const Vector& values) {
  const double worst = values.imag().cwiseAbs().maxCoeff();
  if (worst > 1e-12) {
    std::cerr << "warning: imaginary part up to " << format_double(worst)
              << " in a function expected to be real\n";
  }
}

LatticeKernel lattice_kernel_for(int d) {
  if (d == 2) return LatticeKernel::half_spin();
  return LatticeKernel::odd(d);
}

int run_verify(const std::string& level_name, bool inject_fault) {
  const VerifyLevel level =
      level_name == "full" ? VerifyLevel::Full : VerifyLevel::Fast;
  const auto results = run_verification(level, inject_fault);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
              << "  (max error " << format_double(r.max_error) << ", tolerance "
              << format_double(r.tolerance) << ")\n";
  }
  std::cout << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinphase: phase-space spinor amplitudes for finite spin"};
  app.require_subcommand(1);

  CommonOpts opts;
  int lattice_d = 2;
  std::string alpha_expr = "0";
  std::string theta_expr, phi_expr;
  std::string f_spec = "amplitude", g_spec = "conj-amplitude";
  std::string route_name = "operator";
  std::string space = "sphere";
  std::string times_spec;
  double tmax = 0.0;
  int steps = 0;
  NMRParams nmr;
  std::string chi_expr = "0";
  std::string level_name = "fast";
  bool inject_fault = false;

  // kernel ------------------------------------------------------------
  auto* kernel_cmd = app.add_subcommand(
      "kernel", "evaluate the phase-space kernel matrices");
  opts.add_j_flag(kernel_cmd);
  opts.add_grid_flag(kernel_cmd);
  kernel_cmd->add_option("--d", lattice_d, "lattice dimension (2 or odd)");
  kernel_cmd->add_option("--theta", theta_expr, "sphere: evaluate at this theta");
  kernel_cmd->add_option("--phi", phi_expr, "sphere: evaluate at this phi");
  kernel_cmd->add_option("--format", opts.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  kernel_cmd->add_option("-o,--output", opts.output, "output path");
  kernel_cmd->callback([&] {
    std::string text = "theta,phi,row,col,re,im\n";
    ordered_json rows = ordered_json::array();
    auto add_point = [&](double theta, double phi, const Matrix& m) {
      for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
          if (opts.format == "csv") {
            text += csv_line({theta, phi, static_cast<double>(r),
                              static_cast<double>(c), m(r, c).real(), m(r, c).imag()});
          } else {
            rows.push_back(ordered_json{{"theta", theta},
                                        {"phi", phi},
                                        {"row", r},
                                        {"col", c},
                                        {"value", complex_json(m(r, c))}});
          }
        }
      }
    };
    if (kernel_cmd->count("--d") > 0) {
      const LatticeKernel kernel = lattice_kernel_for(lattice_d);
      text = "alpha,beta,row,col,re,im\n";
      rows = ordered_json::array();
      for (int a = 0; a < lattice_d; ++a) {
        for (int b = 0; b < lattice_d; ++b) {
          const Matrix& m = kernel.at(a, b);
          for (int r = 0; r < lattice_d; ++r) {
            for (int c = 0; c < lattice_d; ++c) {
              if (opts.format == "csv") {
                text += csv_line({static_cast<double>(a), static_cast<double>(b),
                                  static_cast<double>(r), static_cast<double>(c),
                                  m(r, c).real(), m(r, c).imag()});
              } else {
                rows.push_back(ordered_json{{"alpha", a},
                                            {"beta", b},
                                            {"row", r},
                                            {"col", c},
                                            {"value", complex_json(m(r, c))}});
              }
            }
          }
        }
      }
      if (opts.format == "csv") {
        write_text(opts.output, text);
      } else {
        ordered_json doc = meta_json("kernel", ordered_json{{"d", lattice_d}});
        doc["data"] = std::move(rows);
        write_text(opts.output, doc.dump(2) + "\n");
      }
      return;
    }
    const SWKernel kernel = SWKernel::standard(opts.j());
    if (!theta_expr.empty() || !phi_expr.empty()) {
      const double theta = theta_expr.empty() ? 0.0 : parse_real_expr(theta_expr);
      const double phi = phi_expr.empty() ? 0.0 : parse_real_expr(phi_expr);
      add_point(theta, phi, kernel.evaluate(theta, phi));
    } else {
      const GridPtr grid = opts.grid(opts.j());
      auto table = kernel.table(grid);
      for (int node = 0; node < grid->size(); ++node) {
        add_point(grid->node_theta(node), grid->node_phi(node), (*table)[node]);
      }
    }
    if (opts.format == "csv") {
      write_text(opts.output, text);
    } else {
      ordered_json doc =
          meta_json("kernel", ordered_json{{"j", opts.j_value}});
      doc["data"] = std::move(rows);
      write_text(opts.output, doc.dump(2) + "\n");
    }
  });

  // amplitude ----------------------------------------------------------
  auto* amp_cmd = app.add_subcommand("amplitude", "spinor amplitude on the sphere");
  opts.add_j_flag(amp_cmd);
  opts.add_grid_flag(amp_cmd);
  opts.add_state_flags(amp_cmd);
  amp_cmd->callback([&] {
    const SpinState psi = opts.state();
    const SpinState phi = opts.window();
    const SWKernel kernel = SWKernel::standard(psi.j());
    const GridPtr grid = opts.grid(psi.j());
    const SphereField field = amplitude_field(psi, phi, kernel, grid);
    ordered_json params{{"j", psi.j().value()},
                        {"state", opts.state_spec},
                        {"window", opts.window_spec},
                        {"L", grid->band_limit()}};
    if (psi.j() == half()) {
      const HalfSpinCoeffs coeffs = amplitude_coeffs_half(psi, phi);
      emit_sphere_field(opts, "amplitude", field, std::move(params), &coeffs);
    } else {
      emit_sphere_field(opts, "amplitude", field, std::move(params));
    }
  });

  // wigner ---------------------------------------------------------------
  auto* wigner_cmd = app.add_subcommand("wigner", "Wigner function on the sphere");
  opts.add_j_flag(wigner_cmd);
  opts.add_grid_flag(wigner_cmd);
  opts.add_state_flags(wigner_cmd, /*with_window=*/false);
  wigner_cmd->callback([&] {
    const SpinState psi = opts.state();
    const SWKernel kernel = SWKernel::standard(psi.j());
    const GridPtr grid = opts.grid(psi.j());
    const SphereField field = wigner_field(psi, kernel, grid);
    warn_if_not_real(field.values);
    emit_sphere_field(opts, "wigner", field,
                      ordered_json{{"j", psi.j().value()},
                                   {"state", opts.state_spec},
                                   {"L", grid->band_limit()}});
  });

  // husimi ---------------------------------------------------------------
  auto* husimi_cmd = app.add_subcommand("husimi", "Husimi function on the sphere");
  opts.add_j_flag(husimi_cmd);
  opts.add_grid_flag(husimi_cmd);
  opts.add_state_flags(husimi_cmd);
  husimi_cmd->callback([&] {
    const SpinState psi = opts.state();
    const SpinState phi = opts.window();
    const SWKernel kernel = SWKernel::standard(psi.j());
    const GridPtr grid = opts.grid(psi.j());
    const SphereField field = husimi_field(psi, phi, kernel, grid);
    emit_sphere_field(opts, "husimi", field,
                      ordered_json{{"j", psi.j().value()},
                                   {"state", opts.state_spec},
                                   {"window", opts.window_spec},
                                   {"L", grid->band_limit()}});
  });

  // star -------------------------------------------------------------------
  auto* star_cmd = app.add_subcommand("star", "star product of two symbols");
  opts.add_j_flag(star_cmd);
  opts.add_grid_flag(star_cmd);
  opts.add_state_flags(star_cmd);
  star_cmd->add_option("--f", f_spec,
                       "left factor: amplitude | conj-amplitude | identity | sx | sy | sz");
  star_cmd->add_option("--g", g_spec, "right factor (same choices)");
  star_cmd->add_option("--route", route_name, "operator | integral | both")
      ->check(CLI::IsMember({"operator", "integral", "both"}));
  star_cmd->callback([&] {
    const SpinState psi = opts.state();
    const SpinState phi = opts.window();
    const SWKernel kernel = SWKernel::standard(psi.j());
    const GridPtr grid = opts.grid(psi.j());
    auto factor = [&](const std::string& spec) -> SphereField {
      if (spec == "amplitude") return amplitude_field(psi, phi, kernel, grid);
      if (spec == "conj-amplitude")
        return conjugate(amplitude_field(psi, phi, kernel, grid));
      if (spec == "identity")
        return symbol_of_operator(identity_operator(psi.j()), kernel, grid);
      if (spec == "sx" || spec == "sy" || spec == "sz") {
        if (psi.j() != half()) throw ParseError("Pauli symbols need j = 1/2");
        const Axis axis = spec == "sx" ? Axis::X : (spec == "sy" ? Axis::Y : Axis::Z);
        return symbol_of_operator(pauli(axis), kernel, grid);
      }
      throw ParseError("unknown star factor '" + spec + "'");
    };
    const SphereField f = factor(f_spec);
    const SphereField g = factor(g_spec);
    SphereField result = star_product(
        f, g, kernel,
        route_name == "integral" ? StarRoute::Integral : StarRoute::Operator);
    ordered_json params{{"j", psi.j().value()}, {"f", f_spec}, {"g", g_spec},
                        {"route", route_name},  {"L", grid->band_limit()}};
    if (route_name == "both") {
      const SphereField other = star_product(f, g, kernel, StarRoute::Integral);
      params["route_deviation"] = max_abs_difference(result, other);
    }
    emit_sphere_field(opts, "star", result, std::move(params));
  });

  // rotate -------------------------------------------------------------------
  auto* rotate_cmd =
      app.add_subcommand("rotate", "rotate an amplitude about the y-axis");
  opts.add_j_flag(rotate_cmd);
  opts.add_grid_flag(rotate_cmd);
  opts.add_state_flags(rotate_cmd);
  rotate_cmd->add_option("--alpha", alpha_expr, "rotation angle (expression)");
  rotate_cmd->add_option("--space", space, "sphere | lattice")
      ->check(CLI::IsMember({"sphere", "lattice"}));
  rotate_cmd->callback([&] {
    const SpinState psi = opts.state();
    const SpinState phi = opts.window();
    const double alpha = parse_real_expr(alpha_expr);
    ordered_json params{{"j", psi.j().value()},
                        {"alpha", alpha},
                        {"state", opts.state_spec},
                        {"window", opts.window_spec}};
    if (space == "lattice") {
      if (psi.j() != half()) throw ParseError("lattice rotation needs j = 1/2");
      const LatticeKernel kernel = LatticeKernel::half_spin();
      emit_lattice_field(opts, "rotate", lattice_rotate(psi, phi, alpha, kernel),
                         std::move(params));
      return;
    }
    const SWKernel kernel = SWKernel::standard(psi.j());
    const GridPtr grid = opts.grid(psi.j());
    const SphereField rotated = rotate_amplitude(
        psi, phi, rotation_y(psi.j(), alpha), kernel, grid);
    params["L"] = grid->band_limit();
    emit_sphere_field(opts, "rotate", rotated, std::move(params));
  });

  // lattice fields -------------------------------------------------------
  auto* amp_lat_cmd =
      app.add_subcommand("amplitude-lattice", "spinor amplitude on the lattice");
  opts.add_state_flags(amp_lat_cmd);
  amp_lat_cmd->add_option("--d", lattice_d, "lattice dimension (2 or odd)");
  amp_lat_cmd->callback([&] {
    const SpinState psi = opts.state();
    const SpinState phi = opts.window();
    if (amp_lat_cmd->count("--d") > 0 && lattice_d != psi.dim()) {
      throw ParseError("--d does not match the state dimension");
    }
    const LatticeKernel kernel = lattice_kernel_for(psi.dim());
    emit_lattice_field(opts, "amplitude-lattice",
                       lattice_amplitude(psi, phi, kernel),
                       ordered_json{{"d", psi.dim()},
                                    {"state", opts.state_spec},
                                    {"window", opts.window_spec}});
  });

  auto* wig_lat_cmd =
      app.add_subcommand("wigner-lattice", "Wigner function on the lattice");
  opts.add_state_flags(wig_lat_cmd, /*with_window=*/false);
  wig_lat_cmd->add_option("--d", lattice_d, "lattice dimension (2 or odd)");
  wig_lat_cmd->callback([&] {
    const SpinState psi = opts.state();
    if (wig_lat_cmd->count("--d") > 0 && lattice_d != psi.dim()) {
      throw ParseError("--d does not match the state dimension");
    }
    const LatticeKernel kernel = lattice_kernel_for(psi.dim());
    const LatticeField field =
        lattice_wigner(psi, kernel, /*require_normalized=*/!opts.no_normalize);
    warn_if_not_real(Eigen::Map<const Vector>(field.values.data(), field.values.size()));
    emit_lattice_field(opts, "wigner-lattice", field,
                       ordered_json{{"d", psi.dim()}, {"state", opts.state_spec}});
  });

  // evolve ------------------------------------------------------------------
  auto* evolve_cmd =
      app.add_subcommand("evolve", "NMR rotating-frame evolution of the amplitude");
  opts.add_j_flag(evolve_cmd);
  opts.add_grid_flag(evolve_cmd);
  opts.add_state_flags(evolve_cmd);
  evolve_cmd->add_option("--omega0", nmr.omega0, "Larmor frequency");
  evolve_cmd->add_option("--omega-nut", nmr.omega_nut, "nutation frequency");
  evolve_cmd->add_option("--omega-ref", nmr.omega_ref, "reference frequency");
  evolve_cmd->add_option("--chi", chi_expr, "pulse phase angle (expression)");
  evolve_cmd->add_option("--times", times_spec, "comma-separated time list");
  evolve_cmd->add_option("--tmax", tmax, "final time (with --steps)");
  evolve_cmd->add_option("--steps", steps, "number of uniform steps to tmax");
  evolve_cmd->add_option("--space", space, "sphere | lattice | both (json)")
      ->check(CLI::IsMember({"sphere", "lattice", "both"}));
  evolve_cmd->callback([&] {
    const SpinState psi = opts.state();
    const SpinState phi = opts.window();
    if (psi.j() != half()) throw ParseError("evolution needs j = 1/2");
    nmr.chi_p = parse_real_expr(chi_expr);
    std::vector<double> times;
    if (!times_spec.empty()) {
      std::stringstream ss(times_spec);
      std::string item;
      while (std::getline(ss, item, ',')) times.push_back(parse_real_expr(item));
    } else if (steps > 0) {
      for (int k = 0; k <= steps; ++k) times.push_back(tmax * k / steps);
    } else {
      times.push_back(0.0);
    }
    const LatticeKernel lattice = LatticeKernel::half_spin();
    const bool want_sphere = space != "lattice";
    const bool want_lattice = space != "sphere";
    if (space == "both" && opts.format == "csv") {
      throw ParseError("--space both needs --format json");
    }
    ordered_json params{{"omega0", nmr.omega0},     {"omega_nut", nmr.omega_nut},
                        {"omega_ref", nmr.omega_ref}, {"chi_p", nmr.chi_p},
                        {"state", opts.state_spec},  {"window", opts.window_spec},
                        {"space", space}};
    if (opts.format == "csv") {
      std::string text = want_sphere
                             ? "t,a00_re,a00_im,a1m1_re,a1m1_im,a10_re,a10_im,"
                               "a11_re,a11_im\n"
                             : "t,alpha,beta,re,im\n";
      for (double t : times) {
        if (want_sphere) {
          const HalfSpinCoeffs c = nmr_coeffs(psi, phi, nmr, t);
          text += csv_line({t, c.a00.real(), c.a00.imag(), c.a1m1.real(),
                            c.a1m1.imag(), c.a10.real(), c.a10.imag(),
                            c.a11.real(), c.a11.imag()});
        } else {
          const LatticeField f = evolve_amplitude_lattice(psi, phi, nmr, t, lattice);
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              text += csv_line({t, static_cast<double>(a), static_cast<double>(b),
                                f.at(a, b).real(), f.at(a, b).imag()});
            }
          }
        }
      }
      write_text(opts.output, text);
      return;
    }
    ordered_json doc = meta_json("evolve", std::move(params));
    ordered_json blocks = ordered_json::array();
    for (double t : times) {
      ordered_json block{{"t", t}};
      if (want_sphere) {
        const HalfSpinCoeffs c = nmr_coeffs(psi, phi, nmr, t);
        block["sphere"] = ordered_json{{"a00", complex_json(c.a00)},
                                       {"a1m1", complex_json(c.a1m1)},
                                       {"a10", complex_json(c.a10)},
                                       {"a11", complex_json(c.a11)}};
      }
      if (want_lattice) {
        const LatticeField f = evolve_amplitude_lattice(psi, phi, nmr, t, lattice);
        ordered_json rows = ordered_json::array();
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            rows.push_back(ordered_json{
                {"alpha", a}, {"beta", b}, {"value", complex_json(f.at(a, b))}});
          }
        }
        block["lattice"] = std::move(rows);
      }
      blocks.push_back(std::move(block));
    }
    doc["data"] = std::move(blocks);
    write_text(opts.output, doc.dump(2) + "\n");
  });

  // verify -----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the numerical identity suite");
  verify_cmd->add_option("--level", level_name, "fast | full")
      ->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test hook
  int verify_exit = 0;
  verify_cmd->callback([&] { verify_exit = run_verify(level_name, inject_fault); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EvenDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // Numerical contract violations: NotNormalized, NotUnitary, grid issues...
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return verify_exit;
}
