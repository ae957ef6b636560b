#include "majolab/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "majolab/boost.hpp"
#include "majolab/boxsim.hpp"
#include "majolab/errors.hpp"
#include "majolab/json_io.hpp"
#include "majolab/majorana.hpp"

namespace majolab {

namespace {

const RepKind kKinds[] = {RepKind::Dirac, RepKind::Weyl, RepKind::Majorana};
const Dim kDims[] = {Dim::D4, Dim::D2};

CVector random_spinor(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVector v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

nlohmann::json matrices(const std::vector<CMatrix>& ms) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& m : ms) a.push_back(to_stable_json(m));
  return a;
}

}  // namespace

std::string rep_label(const RepSpec& rep) { return rep.name + "/" + std::string(to_string(rep.dim())); }

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerifyReport::add(std::string identity, std::string rep, double residual, std::string detail) {
  const bool ok = std::isfinite(residual) && residual <= tolerance;
  checks.push_back({std::move(identity), std::move(rep), residual, tolerance, ok, std::move(detail)});
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    nlohmann::json j = {{"identity", c.identity}, {"rep", c.rep},   {"residual", c.residual},
                        {"tolerance", c.tolerance}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
    if (!c.pass) ++failed;
  }
  return {{"schema_version", kReportSchemaVersion},
          {"command", "verify"},
          {"tolerance", tolerance},
          {"pass", pass()},
          {"failed", failed},
          {"checks", arr}};
}

VerifyReport verify_rep(const RepSpec& rep, double tol) {
  VerifyReport r;
  r.tolerance = tol;
  const std::string label = rep_label(rep);
  const GammaSet& g = rep.gammas;

  const PairResidual pair = clifford_pair_residual(g);
  r.add("clifford.anticommutator", label, pair.value,
        "worst pair (" + std::to_string(pair.mu) + "," + std::to_string(pair.nu) + ")");
  r.add("clifford.hermiticity", label, hermiticity_residual(g));
  r.add("clifford.unitarity", label, unitarity_residual(g));
  r.add("chirality.square", label, chirality_square_residual(g));
  r.add("chirality.anticommutation", label, chirality_anticommutation_residual(g));
  r.add("chirality.projector_algebra", label, projector_algebra_residual(rep));

  const SectorMatrices s = sector_matrices(rep);
  if (rep.dim() == Dim::D2) r.add("chirality.sector_gamma_relations", label, chiral_gamma_residual(rep, s));

  if (rep.charge_conjugation.empty()) return r;

  const CMatrix& sc = rep.charge_conjugation;
  r.add("cc.defining_relation", label, verify_cc_defining(sc, g));
  r.add("cc.unitary", label, unitarity_defect(sc));
  r.add("cc.inverse_is_conjugate", label, max_abs_diff(inverse(sc), conj(sc)));
  r.add("chirality.charge_conjugation", label, chirality_cc_residual(rep),
        rep.dim() == Dim::D4 ? "S_C chi* S_C^-1 = -chi" : "S_C chi* S_C^-1 = +chi");

  std::mt19937_64 rng(20240611);
  double involution = 0.0, pairing = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CVector psi = random_spinor(rng, rep.spinor_size());
    const CVector back = charge_conjugate(rep, charge_conjugate(rep, psi));
    involution = std::max(involution, max_abs_diff(back, psi));
    pairing = std::max(pairing, cc_chirality_relation(rep, psi).max());
  }
  r.add("cc.involution", label, involution, "100 random spinors");
  r.add("cc.chirality_pairing", label, pairing,
        rep.dim() == Dim::D4 ? "(Psi_+-)_C = (Psi_C)_-+" : "(Psi_+-)_C = (Psi_C)_+-");

  if (rep.to_majorana) {
    r.add("similarity.unitary", label, unitarity_defect(*rep.to_majorana));
    double image = 0.0;
    for (const auto& gm : g.gammas())
      image = std::max(image, max_real(*rep.to_majorana * gm * dagger(*rep.to_majorana)));
    r.add("similarity.majorana_image_imaginary", label, image);
  }

  if (rep.kind != RepKind::Custom) {
    r.add("cc.derived_from_similarity", label, max_abs_diff(derive_sc(*rep.to_majorana), sc));
    r.add("cc.tabulated_value", label, max_abs_diff(sc, tabulated_charge_conjugation(rep.kind, rep.dim())));
  }
  if (rep.kind == RepKind::Majorana) {
    double re = 0.0;
    for (const auto& gm : g.gammas()) re = std::max(re, max_real(gm));
    r.add("majorana.imaginary_gammas", label, re);
    r.add("majorana.cc_is_identity", label, max_abs_diff(sc, CMatrix::identity(rep.spinor_size())),
          "S_C = identity");
  }

  if (rep.dim() == Dim::D4) {
    r.add("sector.capital_gamma", label, capital_gamma_residual(rep, s));
    r.add("sector.capital_lambda", label, capital_lambda_residual(rep, s));
    if (!s.eta.empty()) {
      r.add("sector.eta", label, eta_residual(s));
      r.add("sector.xi", label, xi_residual(s));
    }
    if (rep.kind == RepKind::Majorana) r.add("sector.majorana_collapse", label, majorana_collapse_residual(rep, s));
  } else {
    double inter = 0.0, cc = 0.0;
    for (const double w : {-2.0, -0.5, 0.5, 2.0}) {
      inter = std::max(inter, intertwine_residual(rep, {w}));
      for (int i = 0; i < 10; ++i) cc = std::max(cc, boost_covariance_report(rep, {w}, random_spinor(rng, 2)).max());
    }
    r.add("boost.intertwine", label, inter, "rapidity in {-2, -0.5, 0.5, 2}");
    r.add("boost.covariance", label, cc, "chirality scaling, charge conjugation, defect");
  }
  return r;
}

VerifyReport verify_all(double tol) {
  VerifyReport r;
  r.tolerance = tol;
  for (const Dim d : kDims)
    for (const RepKind k : kKinds) r.append(verify_rep(builtin(k, d), tol));

  for (const Dim d : kDims) {
    const std::string dl = "chain/" + std::string(to_string(d));
    const RepSpec dirac = builtin(RepKind::Dirac, d), weyl = builtin(RepKind::Weyl, d),
                  maj = builtin(RepKind::Majorana, d);
    const RepSpec w2 = similarity_transform(dirac, dirac_to_weyl(d));
    const RepSpec m2 = similarity_transform(w2, builtin_to_majorana(RepKind::Weyl, d));
    double gam = 0.0;
    for (std::size_t mu = 0; mu < weyl.gammas.size(); ++mu) {
      gam = std::max(gam, max_abs_diff(w2.gammas[mu], weyl.gammas[mu]));
      gam = std::max(gam, max_abs_diff(m2.gammas[mu], maj.gammas[mu]));
    }
    r.add("chain.gammas", dl, gam, "dirac -> weyl -> majorana");
    r.add("chain.transport_vs_derived",
          dl,
          std::max({max_abs_diff(w2.charge_conjugation, weyl.charge_conjugation),
                    max_abs_diff(w2.charge_conjugation, derive_sc(*w2.to_majorana)),
                    max_abs_diff(m2.charge_conjugation, maj.charge_conjugation),
                    max_abs_diff(m2.charge_conjugation, derive_sc(*m2.to_majorana))}));
    r.add("chain.similarity_composition", dl,
          max_abs_diff(builtin_to_majorana(RepKind::Weyl, d) * dirac_to_weyl(d), builtin_to_majorana(RepKind::Dirac, d)));
  }

  {
    const RepSpec maj = builtin(RepKind::Majorana, Dim::D4);
    const RepSpec old = majorana_conjugated();
    double res = max_abs_diff(old.gammas.beta(), -maj.gammas.beta());
    const double sign[3] = {-1.0, 1.0, -1.0};
    for (std::size_t j = 1; j <= 3; ++j)
      res = std::max(res, max_abs_diff(old.gammas.alpha(j), sign[j - 1] * maj.gammas.alpha(j)));
    r.add("majorana.conjugated_alpha_signs", "majorana/D4", res, "alpha1, alpha3, beta flip; alpha2 fixed");
  }

  for (const RepSpec& f : {weyl_with_real_sc(), weyl_beta_flipped(), weyl_chirality_flipped()}) {
    const RepInvariants inv = check_invariants(f);
    r.add("fixture.invariants", rep_label(f), inv.max());
  }

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double si = 0.0, flip = 0.0, mm = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double th = M_PI * (0.5 + 0.49 * u(rng));
    const auto a = bc_consistency_check(BoundaryCondition::self_inverse(std::cos(th), std::sin(th)));
    si = std::max(si, *a.self_inverse);
    mm = std::max(mm, a.majorana_map);
    const auto b = bc_consistency_check(BoundaryCondition::phase_flip(std::sin(th), std::cos(th)));
    flip = std::max(flip, *b.inverse_by_flip);
    mm = std::max(mm, b.majorana_map);
  }
  for (const BcFamily f : {BcFamily::ConfiningMM, BcFamily::ConfiningPP, BcFamily::ConfiningPM, BcFamily::ConfiningMP})
    mm = std::max(mm, bc_consistency_check(BoundaryCondition::confining(f)).majorana_map);
  r.add("bc.self_inverse", "weyl/D2", si, "50 random parameter pairs");
  r.add("bc.inverse_by_flip", "weyl/D2", flip, "50 random parameter pairs");
  r.add("bc.majorana_map", "weyl/D2", mm, "[phi1, phi2] -> [-i phi1*, i phi2*]");
  return r;
}

std::string tables_json() {
  nlohmann::json out;
  out["schema_version"] = kReportSchemaVersion;

  nlohmann::json reps4 = nlohmann::json::array();
  for (const RepKind k : kKinds) {
    const RepSpec r = builtin(k, Dim::D4);
    std::vector<CMatrix> alpha, gamma;
    for (std::size_t j = 1; j <= 3; ++j) {
      alpha.push_back(r.gammas.alpha(j));
      gamma.push_back(r.gammas[j]);
    }
    nlohmann::json e;
    e["rep"] = r.name;
    e["alpha"] = matrices(alpha);
    e["beta"] = to_stable_json(r.gammas.beta());
    e["gamma"] = matrices(gamma);
    e["gamma5"] = to_stable_json(chirality(r.gammas));
    e["charge_conjugation"] = to_stable_json(r.charge_conjugation);
    e["to_majorana"] = to_stable_json(*r.to_majorana);
    reps4.push_back(e);
  }
  out["representations_3p1"] = reps4;

  nlohmann::json reps2 = nlohmann::json::array();
  for (const RepKind k : kKinds) {
    const RepSpec r = builtin(k, Dim::D2);
    nlohmann::json e;
    e["rep"] = r.name;
    e["alpha"] = to_stable_json(r.gammas.alpha(1));
    e["beta"] = to_stable_json(r.gammas.beta());
    e["gamma1"] = to_stable_json(r.gammas[1]);
    e["chirality"] = to_stable_json(chirality(r.gammas));
    e["charge_conjugation"] = to_stable_json(r.charge_conjugation);
    e["to_majorana"] = to_stable_json(*r.to_majorana);
    reps2.push_back(e);
  }
  out["representations_1p1"] = reps2;
  out["dirac_to_weyl"] = {{"D4", to_stable_json(dirac_to_weyl(Dim::D4))}, {"D2", to_stable_json(dirac_to_weyl(Dim::D2))}};

  nlohmann::json chiral4 = nlohmann::json::array(), cg = nlohmann::json::array(), cl = nlohmann::json::array();
  for (const RepKind k : kKinds) {
    const RepSpec r = builtin(k, Dim::D4);
    const Projectors p = chiral_projectors(r);
    const SectorMatrices s = sector_matrices(r);
    nlohmann::json e;
    e["rep"] = r.name;
    e["plus"] = to_stable_json(p.plus);
    e["minus"] = to_stable_json(p.minus);
    chiral4.push_back(e);
    nlohmann::json g;
    g["rep"] = r.name;
    g["matrices"] = matrices(s.capital_gamma);
    if (!s.eta.empty()) g["eta"] = matrices(s.eta);
    cg.push_back(g);
    nlohmann::json l;
    l["rep"] = r.name;
    l["matrices"] = matrices(s.capital_lambda);
    if (!s.xi.empty()) l["xi"] = matrices(s.xi);
    cl.push_back(l);
  }
  out["chiral_projectors_3p1"] = chiral4;
  out["sector_capital_gamma_3p1"] = cg;
  out["sector_capital_lambda_3p1"] = cl;

  nlohmann::json chiral2 = nlohmann::json::array();
  for (const RepKind k : kKinds) {
    const RepSpec r = builtin(k, Dim::D2);
    const Projectors p = chiral_projectors(r);
    const SectorMatrices s = sector_matrices(r);
    nlohmann::json e;
    e["rep"] = r.name;
    e["plus"] = to_stable_json(p.plus);
    e["minus"] = to_stable_json(p.minus);
    e["gamma_plus"] = matrices(s.gamma_plus);
    e["gamma_minus"] = matrices(s.gamma_minus);
    chiral2.push_back(e);
  }
  out["chiral_1p1"] = chiral2;
  return out.dump(2) + "\n";
}

}  // namespace majolab
