#include "majolab/residuals.hpp"

#include <algorithm>

#include "majolab/errors.hpp"

namespace majolab {

namespace {

void require_rep_field(const RepSpec& rep, const SpinorField& f, const ScalarField& v, const char* op) {
  if (f.components() != rep.spinor_size())
    throw UsageError(std::string(op) + ": field component count does not match representation");
  require_residual_grid(f);
  require_matching_grid(f, v);
}

/// i gamma^mu d_mu psi at a point (d_j = n_j d_s).
CVector dirac_kinetic(const CMatrix& g0, const CMatrix& gs, const CVector& d_t, const CVector& d_s) {
  CVector a = g0 * d_t;
  const CVector b = gs * d_s;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = kI * (a[i] + b[i]);
  return a;
}

CVector axpy(const CVector& x, cplx alpha, const CVector& y) {
  CVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + alpha * y[i];
  return out;
}

}  // namespace

double dirac_residual(const RepSpec& rep, const SpinorField& field, const ScalarField& potential, double m) {
  require_rep_field(rep, field, potential, "dirac_residual");
  const CMatrix g0 = rep.gammas[0];
  const CMatrix gs = rep.gammas.spatial_gamma(field.axis());
  return interior_max(field, [&](std::size_t it, std::size_t ix, const LocalDerivatives& d) {
    const double w = potential(it, ix) + m;
    return max_abs(axpy(dirac_kinetic(g0, gs, d.d_t, d.d_s), -w, d.value));
  });
}

double majorana_equation_residual(const RepSpec& rep, const SpinorField& field, const ScalarField& potential,
                                  double m) {
  require_rep_field(rep, field, potential, "majorana_equation_residual");
  const CMatrix g0 = rep.gammas[0];
  const CMatrix gs = rep.gammas.spatial_gamma(field.axis());
  return interior_max(field, [&](std::size_t it, std::size_t ix, const LocalDerivatives& d) {
    const double w = potential(it, ix) + m;
    return max_abs(axpy(dirac_kinetic(g0, gs, d.d_t, d.d_s), -w, charge_conjugate(rep, d.value)));
  });
}

double case_residual_plus(const RepSpec& rep, const SpinorField& field, const ScalarField& potential, double m) {
  require_rep_field(rep, field, potential, "case_residual_plus");
  const Projectors p = chiral_projectors(rep);
  if (rep.dim() == Dim::D2) {
    const CMatrix g0 = rep.gammas[0];
    const CMatrix gs = rep.gammas.spatial_gamma(field.axis());
    return interior_max(field, [&](std::size_t it, std::size_t ix, const LocalDerivatives& d) {
      const double w = potential(it, ix) + m;
      // i gamma_+ d Psi_- - w Psi_+   and   i gamma_- d Psi_+ - w Psi_-
      const CVector kin_minus = dirac_kinetic(g0, gs, p.minus * d.d_t, p.minus * d.d_s);
      const CVector kin_plus = dirac_kinetic(g0, gs, p.plus * d.d_t, p.plus * d.d_s);
      const CVector r1 = axpy(p.plus * kin_minus, -w, p.plus * d.value);
      const CVector r2 = axpy(p.minus * kin_plus, -w, p.minus * d.value);
      return std::max(max_abs(r1), max_abs(r2));
    });
  }
  const SectorMatrices s = sector_matrices(rep);
  const CMatrix& G0 = s.capital_gamma[0];
  CMatrix Gs = CMatrix::zero(4, 4);
  for (std::size_t j = 0; j < 3; ++j) Gs += field.axis()[j] * s.capital_gamma[j + 1];
  return interior_max(field, [&](std::size_t it, std::size_t ix, const LocalDerivatives& d) {
    const double w = potential(it, ix) + m;
    const CVector kin = dirac_kinetic(G0, Gs, p.plus * d.d_t, p.plus * d.d_s);
    return max_abs(axpy(kin, -w, conj(p.plus * d.value)));
  });
}

double case_residual_minus(const RepSpec& rep, const SpinorField& field, const ScalarField& potential, double m) {
  require_rep_field(rep, field, potential, "case_residual_minus");
  const Projectors p = chiral_projectors(rep);
  if (rep.dim() == Dim::D2) {
    const CMatrix g0 = rep.gammas[0];
    const CMatrix gs = rep.gammas.spatial_gamma(field.axis());
    const CMatrix& sc = rep.charge_conjugation;
    return interior_max(field, [&](std::size_t it, std::size_t ix, const LocalDerivatives& d) {
      const double w = potential(it, ix) + m;
      // charge-conjugate parts: (Psi_+-)_C = S_C (P+- Psi)*
      const CVector minus_c = sc * conj(p.minus * d.value);
      const CVector plus_c = sc * conj(p.plus * d.value);
      const CVector minus_c_t = sc * conj(p.minus * d.d_t), minus_c_s = sc * conj(p.minus * d.d_s);
      const CVector plus_c_t = sc * conj(p.plus * d.d_t), plus_c_s = sc * conj(p.plus * d.d_s);
      const CVector r1 = axpy(p.plus * dirac_kinetic(g0, gs, minus_c_t, minus_c_s), -w, plus_c);
      const CVector r2 = axpy(p.minus * dirac_kinetic(g0, gs, plus_c_t, plus_c_s), -w, minus_c);
      return std::max(max_abs(r1), max_abs(r2));
    });
  }
  const SectorMatrices s = sector_matrices(rep);
  const CMatrix& L0 = s.capital_lambda[0];
  CMatrix Ls = CMatrix::zero(4, 4);
  for (std::size_t j = 0; j < 3; ++j) Ls += field.axis()[j] * s.capital_lambda[j + 1];
  return interior_max(field, [&](std::size_t it, std::size_t ix, const LocalDerivatives& d) {
    const double w = potential(it, ix) + m;
    const CVector kin = dirac_kinetic(L0, Ls, p.minus * d.d_t, p.minus * d.d_s);
    return max_abs(axpy(kin, -w, conj(p.minus * d.value)));
  });
}

TwoComponentOperator two_component_operator(TwoComponentForm form, const std::array<double, 3>& n) {
  using namespace pauli;
  const CMatrix id = I2();
  const CMatrix sn = n[0] * X() + n[1] * Y() + n[2] * Z();
  const CMatrix zero = CMatrix::zero(2, 2);
  switch (form) {
    case TwoComponentForm::RightChiral: return {kI * id, kI * sn, zero, zero, Y()};
    case TwoComponentForm::LeftChiral: return {kI * id, -kI * sn, zero, zero, -Y()};
    case TwoComponentForm::RightChiralRealSc: return {kI * id, kI * sn, zero, zero, kI * Y()};
    case TwoComponentForm::LeftChiralRealSc: return {kI * id, -kI * sn, zero, zero, -kI * Y()};
    case TwoComponentForm::FlippedLeftChiral: return {kI * id, -kI * sn, zero, zero, kI * Y()};
    case TwoComponentForm::FlippedRightChiral: return {kI * id, kI * sn, zero, zero, -kI * Y()};
    case TwoComponentForm::DiracUpper:
    case TwoComponentForm::DiracLower: {
      const SectorMatrices s = sector_matrices(builtin(RepKind::Weyl, Dim::D4));
      const auto& e = form == TwoComponentForm::DiracUpper ? s.eta : s.xi;
      const CMatrix en = n[0] * e[1] + n[1] * e[2] + n[2] * e[3];
      return {e[0], zero, en * Y(), Y(), zero};
    }
  }
  throw UsageError("unknown two-component form");
}

double two_component_residual(TwoComponentForm form, const SpinorField& phi, const ScalarField& potential, double m) {
  if (phi.components() != 2) throw UsageError("two_component_residual: field must have 2 components");
  require_residual_grid(phi);
  require_matching_grid(phi, potential);
  const TwoComponentOperator op = two_component_operator(form, phi.axis());
  return interior_max(phi, [&](std::size_t it, std::size_t ix, const LocalDerivatives& d) {
    const double w = potential(it, ix) + m;
    const CVector a = op.t * d.d_t, b = op.k * d.d_s, c = op.k_conj * conj(d.d_s);
    const CVector e = op.b * d.value, f = op.c * conj(d.value);
    CVector r(2);
    for (std::size_t i = 0; i < 2; ++i) r[i] = a[i] + b[i] + c[i] + w * (e[i] + f[i]);
    return max_abs(r);
  });
}

SpinorField assemble_from_right_chiral(const SpinorField& phi) {
  if (phi.components() != 2) throw UsageError("assemble_from_right_chiral: field must have 2 components");
  SpinorField out(phi.grid(), 4, phi.axis());
  const CMatrix y = pauli::Y();
  for (std::size_t it = 0; it < phi.grid().nt; ++it)
    for (std::size_t ix = 0; ix < phi.grid().nx; ++ix) {
      const auto s = phi.spinor(it, ix);
      const CVector lower = y * conj(s);
      out(it, ix, 0) = s[0];
      out(it, ix, 1) = s[1];
      out(it, ix, 2) = lower[0];
      out(it, ix, 3) = lower[1];
    }
  return out;
}

}  // namespace majolab
