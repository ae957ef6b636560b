#pragma once

#include <array>

#include "majolab/field.hpp"
#include "majolab/reps.hpp"

namespace majolab {

/// 1+1 boost parametrised by rapidity.
struct BoostParam {
  double rapidity = 0.0;

  double beta() const;
  double gamma() const;
  static BoostParam from_velocity(double beta);
};

using RealMatrix2 = std::array<std::array<double, 2>, 2>;

/// exp(-omega sigma_x) acting on (t, x).
RealMatrix2 vector_boost(BoostParam p);
/// exp(-omega Gamma5 / 2); 1+1 only.
CMatrix spinor_boost(const RepSpec& rep, BoostParam p);
/// max_mu |Lambda^mu_nu gamma^nu - S^-1 gamma^mu S|.
double intertwine_residual(const RepSpec& rep, BoostParam p);

struct BoostCovarianceReport {
  CVector boosted;
  double chirality_scaling = 0.0;   // P+- S psi against exp(-+omega/2) P+- psi
  double cc_commutation = 0.0;      // S (S_C psi*) against S_C (S psi)*
  double defect_covariance = 0.0;   // defect vector of S psi against S times defect vector of psi
  double defect_before = 0.0;
  double defect_after = 0.0;
  double max() const;
};
BoostCovarianceReport boost_covariance_report(const RepSpec& rep, BoostParam p, std::span<const cplx> psi);

/// Psi'(x') = S Psi(Lambda^-1 x') sampled on `target` by bilinear interpolation of `source`.
/// Throws UsageError if a target point falls outside the source grid.
SpinorField boost_field(const RepSpec& rep, BoostParam p, const SpinorField& source, const GridSpec& target);

}  // namespace majolab
