#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "majolab/field.hpp"
#include "majolab/matcore.hpp"
#include "majolab/reps.hpp"

namespace majolab {

/// Cell-centred grid on [0, L]: x_j = (j + 1/2) L / N, walls half a cell outside the first and last points.
class Grid1D {
 public:
  Grid1D(double length, std::size_t n);
  double length() const noexcept { return length_; }
  std::size_t n() const noexcept { return n_; }
  double dx() const noexcept { return length_ / static_cast<double>(n_); }
  double x(std::size_t j) const { return (static_cast<double>(j) + 0.5) * dx(); }

 private:
  double length_;
  std::size_t n_;
};

/// Boundary conditions written for the Weyl components [phi1, phi2].
///  SelfInverse:  [phi(L)] = M [phi(0)], M = (1/m2) [[-1, -i m0], [-i m0, 1]], m0^2 + m2^2 = 1.
///  PhaseFlip:    [phi(L)] = M [phi(0)], M = (1/m1) [[1, -i m3], [i m3, 1]],   m1^2 + m3^2 = 1.
///  Confining*:   phi1 = a phi2 at each wall; the suffix gives the sign of a = +-i at x = 0 and x = L.
///  DiracConfining: Re or Im of the upper Dirac component vanishes at each wall.
enum class BcFamily { SelfInverse, PhaseFlip, ConfiningMM, ConfiningPP, ConfiningPM, ConfiningMP, DiracConfining };
enum class DiracWallPart { Re, Im };

class BoundaryCondition {
 public:
  static BoundaryCondition self_inverse(double m0, double m2);
  static BoundaryCondition phase_flip(double m1, double m3);
  static BoundaryCondition confining(BcFamily family);
  static BoundaryCondition dirac_confining(DiracWallPart at_0, DiracWallPart at_L);
  /// Names: self-inverse, phase-flip, confining-mm, confining-pp, confining-pm, confining-mp,
  /// dirac-re-re, dirac-re-im, dirac-im-re, dirac-im-im.
  static BoundaryCondition from_name(std::string_view name, double m0 = 0.0, double m1 = 1.0, double m3 = 0.0);

  BcFamily family() const noexcept { return family_; }
  std::array<double, 2> params() const noexcept { return params_; }
  /// Pointwise constraints phi1 = a phi2 (a at x = 0, a at x = L) for the confining families,
  /// and for the linking families at their degenerate limits.
  std::optional<std::array<cplx, 2>> wall_phases() const;
  bool confining() const { return wall_phases().has_value(); }
  std::string name() const;

 private:
  BoundaryCondition(BcFamily f, std::array<double, 2> p, std::array<DiracWallPart, 2> d = {})
      : family_(f), params_(p), dirac_(d) {}
  BcFamily family_;
  std::array<double, 2> params_;
  std::array<DiracWallPart, 2> dirac_;
};

struct BcForm {
  std::optional<CMatrix> linking;                     // [phi1(L); phi2(L)] = M [phi1(0); phi2(0)]
  std::optional<std::array<cplx, 2>> wall_phases;     // phi1 = a phi2 at 0 and at L
};
BcForm bc_matrix(const BoundaryCondition& bc);

struct BcConsistencyReport {
  std::optional<double> self_inverse;      // |M^2 - I|
  std::optional<double> inverse_by_flip;   // |M(m3) M(-m3) - I|
  double majorana_map = 0.0;               // preservation under [phi1, phi2] -> [-i phi1*, i phi2*]
  double max() const;
};
BcConsistencyReport bc_consistency_check(const BoundaryCondition& bc);

/// Discretised H = -i alpha d_x + (V + m) beta. Field layout is component-major: psi[c * N + j].
struct DiscreteHamiltonian {
  CMatrix matrix;
  RepSpec rep;
  Grid1D grid;
  std::vector<double> potential;
  double mass = 0.0;
  BoundaryCondition bc;
  CMatrix weyl_to_rep;
  bool hermitian = false;
};

DiscreteHamiltonian assemble_hamiltonian(const RepSpec& rep, const Grid1D& grid, std::span<const double> potential,
                                         double m, const BoundaryCondition& bc);

struct EvolutionState {
  std::size_t step = 0;
  double t = 0.0;
  CVector field;
  double norm = 0.0;
  double defect = 0.0;
  double j0 = 0.0;
  double jL = 0.0;
};

/// Crank-Nicolson: (I + i dt H/2) psi' = (I - i dt H/2) psi. Returns steps + 1 states.
/// record_every > 1 keeps the field only on every record_every-th step (diagnostics are kept for all).
std::vector<EvolutionState> evolve(const DiscreteHamiltonian& h, const CVector& psi0, double dt, std::size_t steps,
                                   std::size_t record_every = 1);

/// psi^dagger alpha psi at one spinor.
double current_density(const RepSpec& rep, std::span<const cplx> spinor);
/// x_index 0 is the wall at x = 0, 1..N the grid points, N + 1 the wall at x = L.
double current_density(const DiscreteHamiltonian& h, std::span<const cplx> field, std::size_t x_index);
/// Spinor values on the two walls implied by the boundary closure.
std::array<CVector, 2> wall_values(const DiscreteHamiltonian& h, std::span<const cplx> field);

double field_norm(const DiscreteHamiltonian& h, std::span<const cplx> field);
/// max_j |psi_j - S_C psi_j*|.
double field_defect(const RepSpec& rep, std::span<const cplx> field);
CVector field_charge_conjugate(const RepSpec& rep, std::span<const cplx> field);
CVector field_majorana_project(const RepSpec& rep, std::span<const cplx> field);
/// Unit-norm Gaussian exp(-(x-x0)^2 / (4 sigma^2) + i k0 x) times a fixed spinor.
CVector gaussian_packet(const Grid1D& grid, double x0, double sigma, double k0, std::span<const cplx> spinor);

struct StationaryMode {
  double energy = 0.0;
  CVector field;
  double residual = 0.0;
};
/// k eigenpairs of smallest |E|; equal-|E| clusters alternate -E, +E so even k gives whole pairs.
std::vector<StationaryMode> stationary_modes(const DiscreteHamiltonian& h, std::size_t k);

/// States as a SpinorField on (t, x_j); requires the field to be recorded at every state.
SpinorField to_spinor_field(const DiscreteHamiltonian& h, const std::vector<EvolutionState>& states);

}  // namespace majolab
