#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "majolab/field.hpp"
#include "majolab/reps.hpp"
#include "majolab/residuals.hpp"

namespace majolab {

/// Periodic line x_j = x0 + j L/n along a unit axis, with a static potential.
struct LineSetup {
  std::size_t n = 128;
  double length = 1.0;
  double x0 = 0.0;
  std::array<double, 3> axis{1.0, 0.0, 0.0};
  std::vector<double> potential;  // n samples, empty means zero
  double mass = 0.0;

  double dx() const { return length / static_cast<double>(n); }
  double x(std::size_t j) const { return x0 + dx() * static_cast<double>(j); }
  GridSpec grid(std::size_t steps, double dt) const { return {steps + 1, n, 0.0, dt, x0, dx()}; }
};

/// Crank-Nicolson evolution of i d_t psi = (-i alpha.n d_s + w beta) psi with periodic central differences.
/// psi0 is point-major: psi0[j * components + c].
SpinorField integrate_dirac_line(const RepSpec& rep, const LineSetup& setup, const CVector& psi0, double dt,
                                 std::size_t steps);

/// Crank-Nicolson evolution of a (real-linear) two-component equation.
SpinorField integrate_two_component_line(TwoComponentForm form, const LineSetup& setup, const CVector& phi0,
                                         double dt, std::size_t steps);

}  // namespace majolab
