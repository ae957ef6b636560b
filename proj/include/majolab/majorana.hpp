#pragma once

#include <span>
#include <vector>

#include "majolab/matcore.hpp"
#include "majolab/reps.hpp"

namespace majolab {

/// |psi - S_C psi*|_max; zero iff psi satisfies the Majorana condition.
double majorana_defect(const RepSpec& rep, std::span<const cplx> psi);
/// (psi + S_C psi*) / 2, the closest Majorana spinor.
CVector majorana_project(const RepSpec& rep, std::span<const cplx> psi);

enum class Half { Upper, Lower };

/// Builds the full Majorana spinor from one half. Needs S_C = [[0, A], [B, 0]]
/// (Dirac and Weyl in 3+1, Dirac in 1+1); throws UnsupportedError otherwise.
CVector complete_from_component(const RepSpec& rep, std::span<const cplx> part, Half which);

struct Projectors {
  CMatrix plus;
  CMatrix minus;
};
/// (1 +- gamma5)/2 in 3+1, (1 +- Gamma5)/2 in 1+1.
Projectors chiral_projectors(const RepSpec& rep);
double projector_algebra_residual(const RepSpec& rep);

struct ChiralDecomposition {
  CVector psi_plus;
  CVector psi_minus;
  CMatrix projector_plus;
  CMatrix projector_minus;
  std::vector<CMatrix> gamma_plus;
  std::vector<CMatrix> gamma_minus;
};
ChiralDecomposition chiral_decompose(const RepSpec& rep, std::span<const cplx> psi);

/// Compares (Psi_+)_C with (Psi_C)_- and (Psi_-)_C with (Psi_C)_+ in 3+1;
/// in 1+1 the pairing is same-sign.
struct CcChiralityReport {
  double plus = 0.0;
  double minus = 0.0;
  bool swapped_pairing = false;
  double max() const { return plus > minus ? plus : minus; }
};
CcChiralityReport cc_chirality_relation(const RepSpec& rep, std::span<const cplx> psi);

/// S_C chi* S_C^-1 against -chi (3+1) or +chi (1+1).
double chirality_cc_residual(const RepSpec& rep);

struct SectorMatrices {
  std::vector<CMatrix> gamma_plus;
  std::vector<CMatrix> gamma_minus;
  std::vector<CMatrix> capital_gamma;   // S_C* gamma_-^mu, 3+1 only
  std::vector<CMatrix> capital_lambda;  // S_C* gamma_+^mu, 3+1 only
  std::vector<CMatrix> eta;             // i x upper-left block of capital_gamma, Weyl 3+1 only
  std::vector<CMatrix> xi;              // i x lower-right block of capital_lambda, Weyl 3+1 only
};
SectorMatrices sector_matrices(const RepSpec& rep);

/// (G^mu)* G^nu + (G^nu)* G^mu + 2 g^{mu nu} P.
double conjugate_anticommutator_residual(const std::vector<CMatrix>& g, const CMatrix& p);
/// Checks on the sector matrices of a 3+1 rep: capital_gamma against P+, capital_lambda against P-.
double capital_gamma_residual(const RepSpec& rep, const SectorMatrices& s);
double capital_lambda_residual(const RepSpec& rep, const SectorMatrices& s);
/// eta and xi against the identity.
double eta_residual(const SectorMatrices& s);
double xi_residual(const SectorMatrices& s);
/// 1+1: gamma_+- gamma_-+ mixed anticommutators and nilpotent same-sector anticommutators.
double chiral_gamma_residual(const RepSpec& rep, const SectorMatrices& s);
/// Majorana rep in 3+1: capital_gamma = gamma_-, capital_lambda = gamma_+, gamma_- = -(gamma_+)*.
double majorana_collapse_residual(const RepSpec& rep, const SectorMatrices& s);

}  // namespace majolab
