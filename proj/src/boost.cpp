#include "majolab/boost.hpp"

#include <algorithm>
#include <cmath>

#include "majolab/errors.hpp"
#include "majolab/majorana.hpp"

namespace majolab {

namespace {

void require_d2(const RepSpec& rep, const char* op) {
  if (rep.dim() != Dim::D2)
    throw UnsupportedError(std::string(op) + ": boosts are only available in 1+1 dimensions");
}

void require_finite_rapidity(BoostParam p) {
  if (!std::isfinite(p.rapidity)) throw UsageError("rapidity must be finite");
}

}  // namespace

double BoostParam::beta() const { return std::tanh(rapidity); }
double BoostParam::gamma() const { return std::cosh(rapidity); }

BoostParam BoostParam::from_velocity(double beta) {
  if (!(std::abs(beta) < 1.0)) throw UsageError("boost velocity must satisfy |beta| < 1");
  return {std::atanh(beta)};
}

RealMatrix2 vector_boost(BoostParam p) {
  require_finite_rapidity(p);
  const double c = std::cosh(p.rapidity), s = std::sinh(p.rapidity);
  return {{{c, -s}, {-s, c}}};
}

CMatrix spinor_boost(const RepSpec& rep, BoostParam p) {
  require_d2(rep, "spinor_boost");
  require_finite_rapidity(p);
  // Gamma5^2 = 1, so exp(-w Gamma5/2) = cosh(w/2) - sinh(w/2) Gamma5
  const CMatrix g5 = chirality(rep.gammas);
  return std::cosh(0.5 * p.rapidity) * CMatrix::identity(2) - std::sinh(0.5 * p.rapidity) * g5;
}

double intertwine_residual(const RepSpec& rep, BoostParam p) {
  const CMatrix s = spinor_boost(rep, p);
  const CMatrix s_inv = inverse(s);
  const RealMatrix2 lam = vector_boost(p);
  double worst = 0.0;
  for (std::size_t mu = 0; mu < 2; ++mu) {
    const CMatrix lhs = lam[mu][0] * rep.gammas[0] + lam[mu][1] * rep.gammas[1];
    worst = std::max(worst, max_abs_diff(lhs, s_inv * rep.gammas[mu] * s));
  }
  return worst;
}

double BoostCovarianceReport::max() const { return std::max({chirality_scaling, cc_commutation, defect_covariance}); }

BoostCovarianceReport boost_covariance_report(const RepSpec& rep, BoostParam p, std::span<const cplx> psi) {
  require_d2(rep, "boost_covariance_report");
  if (psi.size() != 2) throw UsageError("boost_covariance_report: spinor must have 2 components");
  const CMatrix s = spinor_boost(rep, p);
  const Projectors pr = chiral_projectors(rep);
  BoostCovarianceReport r;
  r.boosted = s * psi;

  const CVector plus_before = pr.plus * psi, minus_before = pr.minus * psi;
  const CVector plus_after = pr.plus * r.boosted, minus_after = pr.minus * r.boosted;
  const double down = std::exp(-0.5 * p.rapidity), up = std::exp(0.5 * p.rapidity);
  for (std::size_t i = 0; i < 2; ++i) {
    r.chirality_scaling = std::max(r.chirality_scaling, std::abs(plus_after[i] - down * plus_before[i]));
    r.chirality_scaling = std::max(r.chirality_scaling, std::abs(minus_after[i] - up * minus_before[i]));
  }

  r.cc_commutation = max_abs_diff(s * charge_conjugate(rep, psi), charge_conjugate(rep, r.boosted));

  CVector defect_before(2), defect_after(2);
  const CVector c_before = charge_conjugate(rep, psi), c_after = charge_conjugate(rep, r.boosted);
  for (std::size_t i = 0; i < 2; ++i) {
    defect_before[i] = psi[i] - c_before[i];
    defect_after[i] = r.boosted[i] - c_after[i];
  }
  r.defect_covariance = max_abs_diff(defect_after, s * defect_before);
  r.defect_before = max_abs(defect_before);
  r.defect_after = max_abs(defect_after);
  return r;
}

SpinorField boost_field(const RepSpec& rep, BoostParam p, const SpinorField& source, const GridSpec& target) {
  require_d2(rep, "boost_field");
  if (source.components() != 2) throw UsageError("boost_field: source must have 2 components");
  const auto& g = source.grid();
  if (g.nt < 2 || g.nx < 2) throw UsageError("boost_field: source grid too small");
  const CMatrix s = spinor_boost(rep, p);
  const RealMatrix2 inv = vector_boost({-p.rapidity});
  SpinorField out(target, 2);
  const double eps = 1e-9;
  for (std::size_t it = 0; it < target.nt; ++it)
    for (std::size_t ix = 0; ix < target.nx; ++ix) {
      const double tp = target.t(it), xp = target.x(ix);
      const double t = inv[0][0] * tp + inv[0][1] * xp;
      const double x = inv[1][0] * tp + inv[1][1] * xp;
      double ft = (t - g.t0) / g.dt, fx = (x - g.x0) / g.dx;
      if (ft < -eps || fx < -eps || ft > static_cast<double>(g.nt - 1) + eps ||
          fx > static_cast<double>(g.nx - 1) + eps)
        throw UsageError("boost_field: target point maps outside the source grid");
      ft = std::clamp(ft, 0.0, static_cast<double>(g.nt - 1));
      fx = std::clamp(fx, 0.0, static_cast<double>(g.nx - 1));
      const std::size_t i0 = std::min(static_cast<std::size_t>(ft), g.nt - 2);
      const std::size_t j0 = std::min(static_cast<std::size_t>(fx), g.nx - 2);
      const double a = ft - static_cast<double>(i0), b = fx - static_cast<double>(j0);
      CVector v(2);
      for (std::size_t c = 0; c < 2; ++c)
        v[c] = (1 - a) * (1 - b) * source(i0, j0, c) + (1 - a) * b * source(i0, j0 + 1, c) +
               a * (1 - b) * source(i0 + 1, j0, c) + a * b * source(i0 + 1, j0 + 1, c);
      out.set_spinor(it, ix, s * v);
    }
  return out;
}

}  // namespace majolab
