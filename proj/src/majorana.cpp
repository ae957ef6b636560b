#include "majolab/majorana.hpp"

#include <algorithm>
#include <string>

#include "majolab/errors.hpp"

namespace majolab {

namespace {

void require_length(const RepSpec& rep, std::span<const cplx> psi, const char* op) {
  if (psi.size() != rep.spinor_size())
    throw UsageError(std::string(op) + ": spinor length does not match representation");
}

}  // namespace

double majorana_defect(const RepSpec& rep, std::span<const cplx> psi) {
  require_length(rep, psi, "majorana_defect");
  return max_abs_diff(psi, charge_conjugate(rep, psi));
}

CVector majorana_project(const RepSpec& rep, std::span<const cplx> psi) {
  require_length(rep, psi, "majorana_project");
  CVector c = charge_conjugate(rep, psi);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (psi[i] + c[i]);
  return c;
}

CVector complete_from_component(const RepSpec& rep, std::span<const cplx> part, Half which) {
  const std::size_t n = rep.spinor_size();
  const std::size_t h = n / 2;
  if (part.size() != h) throw UsageError("complete_from_component: half-spinor has the wrong length");
  const CMatrix& sc = rep.charge_conjugation;
  const CMatrix upper_left = sc.block(0, 0, h, h);
  const CMatrix lower_right = sc.block(h, h, h, h);
  if (max_abs(upper_left) > kDefaultTol || max_abs(lower_right) > kDefaultTol)
    throw UnsupportedError("complete_from_component: the Majorana condition of representation '" + rep.name +
                           "' constrains components individually; no half determines the other");
  CVector psi(n);
  const CVector pc = conj(part);
  if (which == Half::Upper) {
    const CVector lower = sc.block(h, 0, h, h) * pc;
    std::copy(part.begin(), part.end(), psi.begin());
    std::copy(lower.begin(), lower.end(), psi.begin() + h);
  } else {
    const CVector upper = sc.block(0, h, h, h) * pc;
    std::copy(upper.begin(), upper.end(), psi.begin());
    std::copy(part.begin(), part.end(), psi.begin() + h);
  }
  return psi;
}

Projectors chiral_projectors(const RepSpec& rep) {
  const CMatrix c = chirality(rep.gammas);
  const CMatrix id = CMatrix::identity(c.rows());
  return {0.5 * (id + c), 0.5 * (id - c)};
}

double projector_algebra_residual(const RepSpec& rep) {
  const Projectors p = chiral_projectors(rep);
  const CMatrix id = CMatrix::identity(p.plus.rows());
  return std::max({max_abs_diff(p.plus * p.plus, p.plus), max_abs_diff(p.minus * p.minus, p.minus),
                   max_abs(p.plus * p.minus), max_abs(p.minus * p.plus), max_abs_diff(p.plus + p.minus, id)});
}

ChiralDecomposition chiral_decompose(const RepSpec& rep, std::span<const cplx> psi) {
  require_length(rep, psi, "chiral_decompose");
  const Projectors p = chiral_projectors(rep);
  ChiralDecomposition d{p.plus * psi, p.minus * psi, p.plus, p.minus, {}, {}};
  for (const auto& g : rep.gammas.gammas()) {
    d.gamma_plus.push_back(p.plus * g);
    d.gamma_minus.push_back(p.minus * g);
  }
  return d;
}

CcChiralityReport cc_chirality_relation(const RepSpec& rep, std::span<const cplx> psi) {
  require_length(rep, psi, "cc_chirality_relation");
  const Projectors p = chiral_projectors(rep);
  const CVector psi_c = charge_conjugate(rep, psi);
  const CVector plus_c = charge_conjugate(rep, p.plus * psi);
  const CVector minus_c = charge_conjugate(rep, p.minus * psi);
  CcChiralityReport r;
  r.swapped_pairing = rep.dim() == Dim::D4;
  const CMatrix& for_plus = r.swapped_pairing ? p.minus : p.plus;
  const CMatrix& for_minus = r.swapped_pairing ? p.plus : p.minus;
  r.plus = max_abs_diff(plus_c, for_plus * psi_c);
  r.minus = max_abs_diff(minus_c, for_minus * psi_c);
  return r;
}

double chirality_cc_residual(const RepSpec& rep) {
  const CMatrix c = chirality(rep.gammas);
  const CMatrix lhs = rep.charge_conjugation * conj(c) * inverse(rep.charge_conjugation);
  return max_abs_diff(lhs, rep.dim() == Dim::D4 ? -c : c);
}

SectorMatrices sector_matrices(const RepSpec& rep) {
  const Projectors p = chiral_projectors(rep);
  SectorMatrices s;
  for (const auto& g : rep.gammas.gammas()) {
    s.gamma_plus.push_back(p.plus * g);
    s.gamma_minus.push_back(p.minus * g);
  }
  if (rep.dim() == Dim::D2) return s;
  const CMatrix sc_conj = conj(rep.charge_conjugation);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    s.capital_gamma.push_back(sc_conj * s.gamma_minus[mu]);
    s.capital_lambda.push_back(sc_conj * s.gamma_plus[mu]);
  }
  if (rep.kind == RepKind::Weyl) {
    for (std::size_t mu = 0; mu < 4; ++mu) {
      s.eta.push_back(kI * s.capital_gamma[mu].block(0, 0, 2, 2));
      s.xi.push_back(kI * s.capital_lambda[mu].block(2, 2, 2, 2));
    }
  }
  return s;
}

double conjugate_anticommutator_residual(const std::vector<CMatrix>& g, const CMatrix& p) {
  double worst = 0.0;
  for (std::size_t mu = 0; mu < g.size(); ++mu)
    for (std::size_t nu = mu; nu < g.size(); ++nu) {
      const CMatrix lhs = conj(g[mu]) * g[nu] + conj(g[nu]) * g[mu];
      worst = std::max(worst, max_abs(lhs + (2.0 * metric(mu, nu)) * p));
    }
  return worst;
}

double capital_gamma_residual(const RepSpec& rep, const SectorMatrices& s) {
  if (s.capital_gamma.empty()) throw UnsupportedError("capital_gamma_residual: 3+1 representations only");
  return conjugate_anticommutator_residual(s.capital_gamma, chiral_projectors(rep).plus);
}

double capital_lambda_residual(const RepSpec& rep, const SectorMatrices& s) {
  if (s.capital_lambda.empty()) throw UnsupportedError("capital_lambda_residual: 3+1 representations only");
  return conjugate_anticommutator_residual(s.capital_lambda, chiral_projectors(rep).minus);
}

double eta_residual(const SectorMatrices& s) {
  if (s.eta.empty()) throw UnsupportedError("eta_residual: Weyl 3+1 only");
  return conjugate_anticommutator_residual(s.eta, CMatrix::identity(2));
}

double xi_residual(const SectorMatrices& s) {
  if (s.xi.empty()) throw UnsupportedError("xi_residual: Weyl 3+1 only");
  return conjugate_anticommutator_residual(s.xi, CMatrix::identity(2));
}

double chiral_gamma_residual(const RepSpec& rep, const SectorMatrices& s) {
  const Projectors p = chiral_projectors(rep);
  double worst = 0.0;
  const auto& gp = s.gamma_plus;
  const auto& gm = s.gamma_minus;
  for (std::size_t mu = 0; mu < gp.size(); ++mu)
    for (std::size_t nu = mu; nu < gp.size(); ++nu) {
      const double g = metric(mu, nu);
      worst = std::max(worst, max_abs_diff(gp[mu] * gm[nu] + gp[nu] * gm[mu], (2.0 * g) * p.plus));
      worst = std::max(worst, max_abs_diff(gm[mu] * gp[nu] + gm[nu] * gp[mu], (2.0 * g) * p.minus));
      worst = std::max(worst, max_abs(anticommutator(gp[mu], gp[nu])));
      worst = std::max(worst, max_abs(anticommutator(gm[mu], gm[nu])));
    }
  return worst;
}

double majorana_collapse_residual(const RepSpec& rep, const SectorMatrices& s) {
  if (rep.dim() != Dim::D4) throw UnsupportedError("majorana_collapse_residual: 3+1 only");
  double worst = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    worst = std::max(worst, max_abs_diff(s.capital_gamma[mu], s.gamma_minus[mu]));
    worst = std::max(worst, max_abs_diff(s.capital_lambda[mu], s.gamma_plus[mu]));
    worst = std::max(worst, max_abs_diff(s.gamma_minus[mu], -conj(s.gamma_plus[mu])));
  }
  return worst;
}

}  // namespace majolab
