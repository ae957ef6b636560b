// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "golden_audit.hpp"
#include "majolab/boost.hpp"
#include "majolab/boxsim.hpp"
#include "majolab/line_integrator.hpp"
#include "majolab/majorana.hpp"
#include "majolab/report.hpp"
#include "majolab/residuals.hpp"
#include "oracles.hpp"
#include "tables_transcribed.hpp"

using namespace majolab;

namespace {

const RepKind kKinds[] = {RepKind::Dirac, RepKind::Weyl, RepKind::Majorana};
const Dim kDims[] = {Dim::D2, Dim::D4};

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool in_band(double r) { return r >= 3.5 && r <= 4.5; }

std::vector<CMatrix> table_gammas(RepKind k, Dim d) {
  if (d == Dim::D2)
    return k == RepKind::Dirac ? tables::dirac2() : k == RepKind::Weyl ? tables::weyl2() : tables::majorana2();
  return k == RepKind::Dirac ? tables::dirac4() : k == RepKind::Weyl ? tables::weyl4() : tables::majorana4();
}

CMatrix table_sc(RepKind k, Dim d) {
  if (d == Dim::D2)
    return k == RepKind::Dirac ? tables::sc2_dirac() : k == RepKind::Weyl ? tables::sc2_weyl() : tables::sc2_majorana();
  return k == RepKind::Dirac ? tables::sc4_dirac() : k == RepKind::Weyl ? tables::sc4_weyl() : tables::sc4_majorana();
}

Outcome representation_fidelity() {
  Outcome o;
  double worst = 0.0;
  for (Dim d : kDims)
    for (RepKind k : kKinds) {
      const RepSpec rep = builtin(k, d);
      const double r = std::max({clifford_residual(rep.gammas), hermiticity_residual(rep.gammas),
                                 unitarity_residual(rep.gammas),
                                 verify_cc_defining(rep.charge_conjugation, rep.gammas)});
      worst = std::max(worst, r);
      o.require(r <= 1e-12, rep_label(rep));
    }
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("worst residual %.1e", worst);
  return o;
}

Outcome charge_conjugation_derivation() {
  Outcome o;
  double worst = 0.0;
  for (Dim d : kDims) {
    for (RepKind k : kKinds) {
      const double r = oracle::diff(derive_sc(builtin_to_majorana(k, d)), table_sc(k, d));
      worst = std::max(worst, r);
      o.require(r <= 1e-12, "derived S_C " + std::string(to_string(k)) + "/" + std::string(to_string(d)));
    }
    const CMatrix sc_d = derive_sc(builtin_to_majorana(RepKind::Dirac, d));
    const CMatrix sc_w = transport_sc(sc_d, dirac_to_weyl(d));
    const CMatrix sc_m = transport_sc(sc_w, builtin_to_majorana(RepKind::Weyl, d));
    const double c1 = oracle::diff(sc_w, derive_sc(builtin_to_majorana(RepKind::Weyl, d)));
    const double c2 = oracle::diff(sc_m, derive_sc(builtin_to_majorana(RepKind::Majorana, d)));
    worst = std::max({worst, c1, c2});
    o.require(c1 <= 1e-12 && c2 <= 1e-12, "transport chain " + std::string(to_string(d)));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("worst deviation %.1e", worst);
  return o;
}

Outcome majorana_reality() {
  Outcome o;
  for (Dim d : kDims)
    for (const auto& g : builtin(RepKind::Majorana, d).gammas.gammas())
      o.require(max_real(g) <= 1e-15, "real part in a Majorana gamma");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = 256;
  const Grid1D grid(10.0, n);
  const auto h = assemble_hamiltonian(builtin(RepKind::Majorana, Dim::D2), grid, std::vector<double>(n, 0.2), 1.0,
                                      BoundaryCondition::confining(BcFamily::ConfiningPM));
  CVector psi0(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid.x(j) - 5.0;
    psi0[j] = std::exp(-x * x);
    psi0[n + j] = std::sin(x) * std::exp(-x * x);
  }
  const auto states = evolve(h, psi0, 0.01, 1000, 1);
  double im = 0.0;
  for (const auto& s : states)
    for (const auto& z : s.field) im = std::max(im, std::abs(z.imag()));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(states.size() == 1001, "step count");
  o.require(im <= 1e-10, fmt("max |Im| %.1e", im));
  o.require(secs < 10.0, fmt("runtime %.2f s", secs));
  if (o.pass) o.detail = fmt("max |Im| %.1e", im) + fmt(", %.2f s", secs);
  return o;
}

Outcome case_procedure_tables() {
  Outcome o;
  const std::string text = tables_json();
  const audit::Audit a = audit::run(nlohmann::json::parse(text));
  o.require(a.worst <= 1e-12, "table entry " + a.worst_at);
  double ident = 0.0;
  for (RepKind k : kKinds) {
    const RepSpec r4 = builtin(k, Dim::D4);
    const SectorMatrices s4 = sector_matrices(r4);
    ident = std::max({ident, capital_gamma_residual(r4, s4), capital_lambda_residual(r4, s4)});
    if (k == RepKind::Weyl) ident = std::max({ident, eta_residual(s4), xi_residual(s4)});
    const RepSpec r2 = builtin(k, Dim::D2);
    ident = std::max(ident, chiral_gamma_residual(r2, sector_matrices(r2)));
  }
  o.require(ident <= 1e-12, fmt("identity residual %.1e", ident));
  oracle::Rng rng(20240611);
  double pairing = 0.0;
  bool layout = true;
  for (Dim d : kDims)
    for (RepKind k : kKinds) {
      const RepSpec rep = builtin(k, d);
      for (int i = 0; i < 100; ++i) {
        const CcChiralityReport r = cc_chirality_relation(rep, rng.vec(rep.spinor_size()));
        pairing = std::max(pairing, r.max());
        layout = layout && r.swapped_pairing == (d == Dim::D4);
      }
    }
  o.require(pairing <= 1e-12 && layout, "charge conjugation / chirality pairing");
  if (o.pass)
    o.detail = std::to_string(a.compared) + " matrices, worst " + fmt("%.1e", a.worst) +
               fmt("; identities %.1e", ident) + fmt("; pairing %.1e", pairing);
  return o;
}

// Evolves a Majorana packet in the Dirac rep and returns the four residuals.
std::array<double, 4> equivalence_residuals(std::size_t n, double dt, std::size_t steps) {
  const double len = 20.0, m = 1.0;
  const RepSpec rep = builtin(RepKind::Dirac, Dim::D2);
  const Grid1D grid(len, n);
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = 0.3 * std::cos(2.0 * M_PI * grid.x(j) / len);
  const auto h = assemble_hamiltonian(rep, grid, v, m, BoundaryCondition::confining(BcFamily::ConfiningPM));
  const CVector psi0 = field_majorana_project(rep, gaussian_packet(grid, 10.0, 1.0, 1.0, CVector{1.0, 0.3}));
  const SpinorField f = to_spinor_field(h, evolve(h, psi0, dt, steps));
  const ScalarField pot = ScalarField::sample(f.grid(), [&](double, double x) {
    return 0.3 * std::cos(2.0 * M_PI * x / len);
  });
  return {dirac_residual(rep, f, pot, m), case_residual_plus(rep, f, pot, m), case_residual_minus(rep, f, pot, m),
          majorana_equation_residual(rep, f, pot, m)};
}

Outcome equivalence_oracle() {
  Outcome o;
  const auto coarse = equivalence_residuals(128, 0.02, 200);
  const auto fine = equivalence_residuals(256, 0.01, 400);
  const char* names[] = {"dirac", "case_plus", "case_minus", "majorana_equation"};
  std::string ratios;
  for (int i = 0; i < 4; ++i) {
    const double r = coarse[i] / fine[i];
    ratios += std::string(i ? ", " : "") + names[i] + fmt(" %.3f", r);
    o.require(in_band(r), std::string(names[i]) + fmt(" ratio %.3f", r));
  }
  if (o.pass) o.detail = "ratios " + ratios;
  return o;
}

struct TwoComponentRun {
  double defect = 0.0;
  double dirac = 0.0;
  double weyl = 0.0;
};

TwoComponentRun two_component_run(std::size_t n, double dt, std::size_t steps) {
  const std::array<double, 3> axis{0.6, 0.0, 0.8};
  const double len = 16.0, v0 = 0.25, m = 0.75;
  TwoComponentRun out;
  auto packet = [&](LineSetup& s) {
    CVector phi0(2 * s.n);
    for (std::size_t j = 0; j < s.n; ++j) {
      const double x = s.x(j);
      const cplx g = std::exp(-x * x / 2.0) * std::exp(cplx(0, 0.8 * x));
      phi0[2 * j] = g;
      phi0[2 * j + 1] = cplx(0.4, -0.2) * g;
    }
    return phi0;
  };
  LineSetup s;
  s.n = n;
  s.length = len;
  s.x0 = -len / 2.0;
  s.axis = axis;
  s.mass = m;
  s.potential.assign(n, v0);
  const SpinorField phi = integrate_two_component_line(TwoComponentForm::RightChiral, s, packet(s), dt, steps);
  const SpinorField psi = assemble_from_right_chiral(phi);
  const RepSpec weyl = builtin(RepKind::Weyl, Dim::D4);
  for (std::size_t it = 0; it < psi.grid().nt; ++it)
    for (std::size_t ix = 0; ix < psi.grid().nx; ++ix)
      out.defect = std::max(out.defect, majorana_defect(weyl, psi.spinor(it, ix)));
  out.dirac = dirac_residual(weyl, psi, ScalarField::constant(psi.grid(), v0), m);

  LineSetup z = s;
  z.mass = 0.0;
  z.potential.assign(n, 0.0);
  const SpinorField w = integrate_two_component_line(TwoComponentForm::RightChiral, z, packet(z), dt, steps);
  out.weyl = two_component_residual(TwoComponentForm::RightChiral, w, ScalarField::constant(w.grid(), 0.0), 0.0);
  return out;
}

Outcome two_component_equations() {
  Outcome o;
  const TwoComponentRun a = two_component_run(128, 0.04, 100);
  const TwoComponentRun b = two_component_run(256, 0.02, 200);
  const double defect = std::max(a.defect, b.defect);
  o.require(defect <= 1e-12, fmt("Majorana defect %.1e", defect));
  const double rd = a.dirac / b.dirac, rw = a.weyl / b.weyl;
  o.require(in_band(rd), fmt("Dirac ratio %.3f", rd));
  o.require(in_band(rw), fmt("massless Weyl ratio %.3f", rw));
  if (o.pass) o.detail = fmt("defect %.1e", defect) + fmt(", Dirac ratio %.3f", rd) + fmt(", Weyl ratio %.3f", rw);
  return o;
}

Outcome boost_suite() {
  Outcome o;
  double inter = 0.0, factors = 0.0, cc = 0.0;
  oracle::Rng rng(7);
  for (double om : {-2.0, -0.5, 0.5, 2.0}) {
    for (RepKind k : kKinds) {
      const RepSpec rep = builtin(k, Dim::D2);
      inter = std::max(inter, intertwine_residual(rep, {om}));
      for (int i = 0; i < 20; ++i) {
        const CVector psi = rng.vec(2);
        const CMatrix s = spinor_boost(rep, {om});
        const CVector a = s * charge_conjugate(rep, psi);
        const CVector b = charge_conjugate(rep, s * psi);
        cc = std::max(cc, oracle::diff(a, b));
      }
    }
    const CMatrix w = spinor_boost(builtin(RepKind::Weyl, Dim::D2), {om});
    factors = std::max({factors, std::abs(w(0, 0) - std::exp(-om / 2.0)), std::abs(w(1, 1) - std::exp(om / 2.0)),
                        std::abs(w(0, 1)), std::abs(w(1, 0))});
  }
  o.require(inter <= 1e-10, fmt("intertwine %.1e", inter));
  o.require(factors <= 1e-12, fmt("Weyl factors %.1e", factors));
  o.require(cc <= 1e-12, fmt("charge conjugation %.1e", cc));
  if (o.pass) o.detail = fmt("intertwine %.1e", inter) + fmt(", factors %.1e", factors) + fmt(", cc %.1e", cc);
  return o;
}

Outcome box_boundary_conditions() {
  Outcome o;
  oracle::Rng rng(99);
  double si = 0.0, flip = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double th = rng.uniform(0.05, M_PI - 0.05);
    const CMatrix mm = *bc_matrix(BoundaryCondition::self_inverse(std::cos(th), std::sin(th))).linking;
    si = std::max(si, oracle::diff(mm * mm, CMatrix::identity(2)));
    const double ph = rng.uniform(-1.5, 1.5);
    const CMatrix a = *bc_matrix(BoundaryCondition::phase_flip(std::cos(ph), std::sin(ph))).linking;
    const CMatrix b = *bc_matrix(BoundaryCondition::phase_flip(std::cos(ph), -std::sin(ph))).linking;
    flip = std::max(flip, oracle::diff(a * b, CMatrix::identity(2)));
  }
  o.require(si <= 1e-12, fmt("M^2 - I %.1e", si));
  o.require(flip <= 1e-12, fmt("flip inverse %.1e", flip));

  double wall = 0.0, drift = 0.0, pairing = 0.0;
  for (BcFamily fam : {BcFamily::ConfiningMM, BcFamily::ConfiningPP, BcFamily::ConfiningPM, BcFamily::ConfiningMP}) {
    const Grid1D grid(6.0, 128);
    const RepSpec rep = builtin(RepKind::Dirac, Dim::D2);
    const auto h = assemble_hamiltonian(rep, grid, std::vector<double>(128, 0.1), 1.0, BoundaryCondition::confining(fam));
    const CVector psi0 = field_majorana_project(rep, gaussian_packet(grid, 1.5, 0.4, 3.0, CVector{1.0, 0.5}));
    const auto states = evolve(h, psi0, 0.01, 1000, 1000);
    for (const auto& s : states) {
      wall = std::max({wall, std::abs(s.j0), std::abs(s.jL)});
      drift = std::max(drift, std::abs(s.norm - states[0].norm));
    }
    for (const auto& md : stationary_modes(h, 10)) {
      const CVector c = field_charge_conjugate(rep, md.field);
      const CVector hc = h.matrix * c;
      for (std::size_t i = 0; i < c.size(); ++i) pairing = std::max(pairing, std::abs(hc[i] + md.energy * c[i]));
    }
  }
  o.require(wall <= 1e-10, fmt("wall current %.1e", wall));
  o.require(drift <= 1e-10, fmt("norm drift %.1e", drift));
  o.require(pairing <= 1e-8, fmt("(E, -E) pairing %.1e", pairing));
  if (o.pass)
    o.detail = fmt("M^2 %.1e", si) + fmt(", flip %.1e", flip) + fmt(", wall current %.1e", wall) +
               fmt(", drift %.1e", drift) + fmt(", pairing %.1e", pairing);
  return o;
}

Outcome golden_tables() {
  Outcome o;
  const std::string golden = audit::read_file(std::string(GOLDEN_DIR) + "/tables.json");
  o.require(!golden.empty(), "golden file missing");
  if (!o.pass) return o;
  o.require(tables_json() == golden, "regenerated output differs from the golden file");
  const audit::Audit a = audit::run(nlohmann::json::parse(golden));
  o.require(a.worst <= 1e-12, "golden entry " + a.worst_at);
  if (o.pass) o.detail = std::to_string(golden.size()) + " bytes identical; " + std::to_string(a.compared) + " matrices audited";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"representation fidelity", representation_fidelity},
      {"charge-conjugation derivation", charge_conjugation_derivation},
      {"Majorana-representation reality", majorana_reality},
      {"case-procedure tables", case_procedure_tables},
      {"equivalence oracle", equivalence_oracle},
      {"two-component Majorana equations", two_component_equations},
      {"boost suite", boost_suite},
      {"box boundary conditions", box_boundary_conditions},
      {"golden tables", golden_tables},
  };
  int failed = 0, idx = 0;
  for (const auto& [name, fn] : criteria) {
    ++idx;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", idx, name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
