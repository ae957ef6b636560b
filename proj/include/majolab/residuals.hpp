#pragma once

#include "majolab/field.hpp"
#include "majolab/majorana.hpp"
#include "majolab/reps.hpp"

namespace majolab {

/// All evaluators use second-order central differences and skip the grid boundary rows.
/// 3+1 fields depend on (t, s) with s along field.axis(). w = V + m throughout.

/// [i gamma^mu d_mu - w] Psi.
double dirac_residual(const RepSpec& rep, const SpinorField& field, const ScalarField& potential, double m);

/// i gamma^mu d_mu Psi - w Psi_C.
double majorana_equation_residual(const RepSpec& rep, const SpinorField& field, const ScalarField& potential,
                                  double m);

/// 3+1: i Capital_Gamma^mu d_mu Psi_+ - w Psi_+*, with Psi_+ = P+ Psi.
/// 1+1: max over the projected pair  i gamma_+ d Psi_- - w Psi_+  and  i gamma_- d Psi_+ - w Psi_-.
double case_residual_plus(const RepSpec& rep, const SpinorField& field, const ScalarField& potential, double m);
/// 3+1: i Capital_Lambda^mu d_mu Psi_- - w Psi_-*.
/// 1+1: the same pair written for the charge-conjugate parts (Psi_-+)_C.
double case_residual_minus(const RepSpec& rep, const SpinorField& field, const ScalarField& potential, double m);

/// Two-component equations of the form
///   T d_t phi + K (n.d) phi + Kc (n.d) phi* + w (B phi + C phi*) = 0.
enum class TwoComponentForm {
  RightChiral,           // i sigma^mu d_mu phi + w sigma_y phi*
  LeftChiral,            // i sigmabar^mu d_mu phi - w sigma_y phi*
  RightChiralRealSc,     // S_C = +sigma_y x sigma_y:  + w i sigma_y phi*
  LeftChiralRealSc,      //                            sigmabar, - w i sigma_y phi*
  FlippedLeftChiral,     // chirality-flipped Weyl rep, upper: sigmabar, + w i sigma_y phi*
  FlippedRightChiral,    // chirality-flipped Weyl rep, lower: sigma,    - w i sigma_y phi*
  DiracUpper,            // eta^0 d_0 phi + eta^k d_k (sigma_y phi*) + w sigma_y phi
  DiracLower,            // xi^0 d_0 chi + xi^k d_k (sigma_y chi*) + w sigma_y chi
};

struct TwoComponentOperator {
  CMatrix t;
  CMatrix k;
  CMatrix k_conj;
  CMatrix b;
  CMatrix c;
};
/// Coefficients of a form for propagation along the unit axis n.
TwoComponentOperator two_component_operator(TwoComponentForm form, const std::array<double, 3>& n);

double two_component_residual(TwoComponentForm form, const SpinorField& phi, const ScalarField& potential, double m);

/// Psi = [phi; sigma_y phi*] in the Weyl rep, from a right-chiral two-component field.
SpinorField assemble_from_right_chiral(const SpinorField& phi);

}  // namespace majolab
