// majolab: representation checks, tables, boosts and box simulations for Majorana spinors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "majolab/boost.hpp"
#include "majolab/boxsim.hpp"
#include "majolab/errors.hpp"
#include "majolab/json_io.hpp"
#include "majolab/report.hpp"

using namespace majolab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

RepSpec select_rep(const std::string& rep, const std::string& dim) {
  const bool looks_like_file = rep.size() > 5 && rep.substr(rep.size() - 5) == ".json";
  if (looks_like_file) return custom_rep_from_json(read_json_file(rep), rep);
  return builtin(rep, dim_from_string(dim));
}

struct HamiltonianOptions {
  std::string rep = "majorana";
  std::string bc = "confining-mm";
  double m0 = 0.0, m1 = 1.0, m3 = 0.0;
  double mass = 1.0;
  std::string potential = "const:0";
  std::size_t n = 256;
  double length = 1.0;
};

void add_hamiltonian_flags(CLI::App* cmd, HamiltonianOptions& o) {
  cmd->add_option("--rep", o.rep, "dirac | weyl | majorana (1+1)")->capture_default_str();
  cmd->add_option("--bc", o.bc,
                  "confining-mm | confining-pp | confining-pm | confining-mp | dirac-{re,im}-{re,im} | "
                  "self-inverse | phase-flip")
      ->capture_default_str();
  cmd->add_option("--m0", o.m0, "self-inverse family parameter (m2 = sqrt(1 - m0^2))")->capture_default_str();
  cmd->add_option("--m1", o.m1, "phase-flip family parameter")->capture_default_str();
  cmd->add_option("--m3", o.m3, "phase-flip family parameter")->capture_default_str();
  cmd->add_option("--mass", o.mass, "mass energy")->capture_default_str();
  cmd->add_option("--potential", o.potential, "const:V | linear:V0:VL | path to a JSON array of N samples")
      ->capture_default_str();
  cmd->add_option("--N", o.n, "grid points")->capture_default_str()->check(CLI::Range(8, 1 << 16));
  cmd->add_option("--L", o.length, "box length")->capture_default_str()->check(CLI::PositiveNumber);
}

std::vector<double> parse_potential(const std::string& spec, const Grid1D& grid) {
  std::vector<double> v(grid.n());
  auto number = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      const double x = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return x;
    } catch (const std::exception&) {
      throw UsageError("bad potential value '" + s + "'");
    }
  };
  if (spec.rfind("const:", 0) == 0) {
    std::fill(v.begin(), v.end(), number(spec.substr(6)));
  } else if (spec.rfind("linear:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("linear potential needs linear:V0:VL");
    const double a = number(rest.substr(0, colon)), b = number(rest.substr(colon + 1));
    for (std::size_t j = 0; j < grid.n(); ++j) v[j] = a + (b - a) * grid.x(j) / grid.length();
  } else {
    const json j = read_json_file(spec);
    if (!j.is_array() || j.size() != grid.n()) throw UsageError("potential file must hold an array of N numbers");
    for (std::size_t i = 0; i < grid.n(); ++i) {
      if (!j[i].is_number()) throw UsageError("potential file has a non-numeric entry");
      v[i] = j[i].get<double>();
    }
  }
  return v;
}

DiscreteHamiltonian build_hamiltonian(const HamiltonianOptions& o) {
  const Grid1D grid(o.length, o.n);
  const RepSpec rep = builtin(o.rep, Dim::D2);
  const auto bc = BoundaryCondition::from_name(o.bc, o.m0, o.m1, o.m3);
  return assemble_hamiltonian(rep, grid, parse_potential(o.potential, grid), o.mass, bc);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json spinor_json(const CVector& v) {
  json re = json::array(), im = json::array();
  for (const auto& x : v) {
    re.push_back(x.real());
    im.push_back(x.imag());
  }
  return {{"re", re}, {"im", im}};
}

CVector parse_spinor(const std::vector<double>& flat) {
  if (flat.size() != 4) throw UsageError("--psi expects 4 numbers: re0 im0 re1 im1");
  return {{flat[0], flat[1]}, {flat[2], flat[3]}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorana spinor laboratory"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity suites; exit 0 iff every residual is within tolerance");
  bool verify_all_flag = false;
  std::string verify_rep_name, verify_dim = "D4", verify_out;
  double tol = kDefaultTol;
  verify->add_flag("--all", verify_all_flag, "all built-ins, transport chains, fixtures and boundary conditions");
  verify->add_option("--rep", verify_rep_name, "dirac | weyl | majorana, or a gamma-set JSON file");
  verify->add_option("--dim", verify_dim, "D2 | D4")->capture_default_str();
  verify->add_option("--tol", tol, "residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_out, "report path (stdout by default)");

  // tables
  auto* tables = app.add_subcommand("tables", "regenerate the representation tables as JSON");
  std::string tables_out;
  tables->add_option("--out", tables_out, "output path (stdout by default)");

  // derive-sc
  auto* derive = app.add_subcommand("derive-sc", "derive S_C = S^dagger S* from a similarity matrix");
  std::string derive_gammas, derive_s, derive_out;
  derive->add_option("--gammas", derive_gammas, "gamma-set JSON of the source representation")->required();
  derive->add_option("--s", derive_s, "matrix JSON of S (source rep -> Majorana rep)")->required();
  derive->add_option("--tol", tol, "residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  derive->add_option("--out", derive_out, "output path (stdout by default)");

  // boost
  auto* boost = app.add_subcommand("boost", "1+1 Lorentz boost checks");
  std::string boost_rep = "weyl", boost_dim = "D2", boost_check = "intertwine", boost_out;
  double omega = 0.5;
  std::vector<double> boost_psi;
  boost->add_option("--rep", boost_rep, "dirac | weyl | majorana")->capture_default_str();
  boost->add_option("--dim", boost_dim, "D2 (D4 is rejected)")->capture_default_str();
  boost->add_option("--omega", omega, "rapidity")->capture_default_str();
  boost->add_option("--check", boost_check, "vector | spinor | intertwine | covariance")
      ->capture_default_str()
      ->check(CLI::IsMember({"vector", "spinor", "intertwine", "covariance"}));
  boost->add_option("--psi", boost_psi, "spinor for covariance: re0 im0 re1 im1")->expected(4);
  boost->add_option("--tol", tol, "residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  boost->add_option("--out", boost_out, "output path (stdout by default)");

  // box-evolve
  auto* evolve_cmd = app.add_subcommand("box-evolve", "Crank-Nicolson evolution in a 1+1 box");
  HamiltonianOptions ev;
  double dt = 1e-3, x0 = -1.0, width = -1.0, k0 = 0.0;
  std::size_t steps = 1000;
  bool no_project = false, snapshot = false;
  std::string evolve_out, field_out;
  add_hamiltonian_flags(evolve_cmd, ev);
  evolve_cmd->add_option("--dt", dt, "time step")->capture_default_str()->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--steps", steps, "number of steps")->capture_default_str();
  evolve_cmd->add_option("--x0", x0, "packet centre (default L/2)");
  evolve_cmd->add_option("--width", width, "packet width (default L/10)");
  evolve_cmd->add_option("--k0", k0, "packet wave number")->capture_default_str();
  evolve_cmd->add_flag("--no-project", no_project, "do not project the initial packet onto the Majorana condition");
  evolve_cmd->add_flag("--snapshot", snapshot, "append field columns re_c{c}_{j}, im_c{c}_{j}");
  evolve_cmd->add_option("--field-out", field_out, "also write the field as t,x,re_c0,... CSV");
  evolve_cmd->add_option("--out", evolve_out, "CSV path (stdout by default)");

  // box-modes
  auto* modes_cmd = app.add_subcommand("box-modes", "stationary modes of a 1+1 box");
  HamiltonianOptions mo;
  std::size_t k = 8;
  std::string modes_out;
  add_hamiltonian_flags(modes_cmd, mo);
  modes_cmd->add_option("--k", k, "number of modes (smallest |E|)")->capture_default_str();
  modes_cmd->add_option("--out", modes_out, "output path (stdout by default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      VerifyReport report;
      if (verify_all_flag || verify_rep_name.empty()) {
        report = verify_all(tol);
      } else {
        report = verify_rep(select_rep(verify_rep_name, verify_dim), tol);
      }
      emit(dump(report.to_json()), verify_out);
      return report.pass() ? kExitPass : kExitFail;
    }
    if (*tables) {
      emit(tables_json(), tables_out);
      return kExitPass;
    }
    if (*derive) {
      const GammaSet g = gamma_set_from_json(read_json_file(derive_gammas));
      const CMatrix s = cmatrix_from_json(read_json_file(derive_s));
      const CMatrix sc = derive_sc(s);
      const double defining = verify_cc_defining(sc, g);
      double image = 0.0;
      for (const auto& gm : g.gammas()) image = std::max(image, max_real(s * gm * dagger(s)));
      const bool ok = defining <= tol && image <= tol;
      json j = {{"schema_version", kReportSchemaVersion},
                {"command", "derive-sc"},
                {"charge_conjugation", to_json(sc)},
                {"defining_residual", defining},
                {"majorana_image_real_part", image},
                {"unitarity_defect", unitarity_defect(sc)},
                {"tolerance", tol},
                {"pass", ok}};
      emit(dump(j), derive_out);
      return ok ? kExitPass : kExitFail;
    }
    if (*boost) {
      const RepSpec rep = builtin(boost_rep, dim_from_string(boost_dim));
      const BoostParam p{omega};
      json j = {{"schema_version", kReportSchemaVersion},
                {"command", "boost"},
                {"rep", rep_label(rep)},
                {"rapidity", omega},
                {"beta", p.beta()},
                {"gamma", p.gamma()},
                {"check", boost_check},
                {"tolerance", tol}};
      bool ok = true;
      if (boost_check == "vector") {
        const RealMatrix2 b = vector_boost(p);
        const double det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
        j["matrix"] = {{b[0][0], b[0][1]}, {b[1][0], b[1][1]}};
        j["determinant_defect"] = std::abs(det - 1.0);
        ok = std::abs(det - 1.0) <= tol * std::max(1.0, b[0][0] * b[0][0]);
        if (rep.dim() != Dim::D2) throw UnsupportedError("boosts are only available in 1+1 dimensions");
      } else if (boost_check == "spinor") {
        j["matrix"] = to_json(spinor_boost(rep, p));
      } else if (boost_check == "intertwine") {
        const double r = intertwine_residual(rep, p);
        j["residual"] = r;
        ok = r <= std::max(tol, 1e-10);
      } else {
        const CVector psi = boost_psi.empty() ? CVector{1.0, 0.0} : parse_spinor(boost_psi);
        const BoostCovarianceReport r = boost_covariance_report(rep, p, psi);
        j["boosted"] = spinor_json(r.boosted);
        j["chirality_scaling"] = r.chirality_scaling;
        j["cc_commutation"] = r.cc_commutation;
        j["defect_covariance"] = r.defect_covariance;
        j["defect_before"] = r.defect_before;
        j["defect_after"] = r.defect_after;
        ok = r.max() <= tol;
      }
      j["pass"] = ok;
      emit(dump(j), boost_out);
      return ok ? kExitPass : kExitFail;
    }
    if (*evolve_cmd) {
      const DiscreteHamiltonian h = build_hamiltonian(ev);
      const double L = h.grid.length();
      const CVector u{1.0, 0.0};
      CVector psi0 = gaussian_packet(h.grid, x0 < 0 ? 0.5 * L : x0, width <= 0 ? 0.1 * L : width, k0, u);
      if (!no_project) {
        psi0 = field_majorana_project(h.rep, psi0);
        const double nrm = field_norm(h, psi0);
        if (!(nrm > 0.0)) throw UsageError("initial packet has no Majorana part");
        for (auto& v : psi0) v /= std::sqrt(nrm);
      }
      const auto states = evolve(h, psi0, dt, steps);
      std::ostringstream os;
      const std::size_t n = h.grid.n();
      os << "step,t,norm,defect,j0,jL";
      if (snapshot)
        for (std::size_t c = 0; c < 2; ++c)
          for (std::size_t jx = 0; jx < n; ++jx) os << ",re_c" << c << "_" << jx << ",im_c" << c << "_" << jx;
      os << '\n';
      for (const auto& s : states) {
        os << s.step << ',' << fmt(s.t) << ',' << fmt(s.norm) << ',' << fmt(s.defect) << ',' << fmt(s.j0) << ','
           << fmt(s.jL);
        if (snapshot)
          for (const auto& v : s.field) os << ',' << fmt(v.real()) << ',' << fmt(v.imag());
        os << '\n';
      }
      emit(os.str(), evolve_out);
      if (!field_out.empty()) {
        std::ofstream f(field_out);
        if (!f) throw UsageError("cannot write " + field_out);
        write_csv(f, to_spinor_field(h, states));
      }
      return kExitPass;
    }
    if (*modes_cmd) {
      const DiscreteHamiltonian h = build_hamiltonian(mo);
      const auto modes = stationary_modes(h, k);
      json arr = json::array();
      double worst = 0.0;
      for (const auto& m : modes) {
        arr.push_back({{"energy", m.energy}, {"residual", m.residual}});
        worst = std::max(worst, m.residual);
      }
      const bool ok = worst <= 1e-8;
      json j = {{"schema_version", kReportSchemaVersion},
                {"command", "box-modes"},
                {"rep", rep_label(h.rep)},
                {"bc", h.bc.name()},
                {"N", h.grid.n()},
                {"L", h.grid.length()},
                {"mass", h.mass},
                {"modes", arr},
                {"max_residual", worst},
                {"pass", ok}};
      emit(dump(j), modes_out);
      return ok ? kExitPass : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
