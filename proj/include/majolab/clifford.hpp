#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "majolab/field.hpp"
#include "majolab/matcore.hpp"

namespace majolab {

/// Spacetime dimension: 1+1 (2x2 gammas) or 3+1 (4x4 gammas).
enum class Dim { D2, D4 };

std::size_t spinor_size(Dim d);
std::size_t spacetime_dim(Dim d);
std::string_view to_string(Dim d);
Dim dim_from_string(std::string_view s);
/// Metric signature (+,-,-,-).
double metric(std::size_t mu, std::size_t nu);

/// Ordered gamma matrices gamma^0 .. gamma^{d-1}.
class GammaSet {
 public:
  GammaSet(Dim dim, std::vector<CMatrix> gammas);

  Dim dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return gammas_.size(); }
  const CMatrix& operator[](std::size_t mu) const { return gammas_.at(mu); }
  const std::vector<CMatrix>& gammas() const noexcept { return gammas_; }

  const CMatrix& beta() const { return gammas_[0]; }
  /// alpha^j = beta gamma^j, j >= 1.
  CMatrix alpha(std::size_t j) const;
  /// sum_j n_j gamma^j for a spatial direction n (only n[0] is used in 1+1).
  CMatrix spatial_gamma(std::span<const double> n) const;
  CMatrix spatial_alpha(std::span<const double> n) const;

 private:
  Dim dim_;
  std::vector<CMatrix> gammas_;
};

struct PairResidual {
  double value = 0.0;
  std::size_t mu = 0;
  std::size_t nu = 0;
};

/// max |{g^mu, g^nu} - 2 g^{mu nu} I| with the worst index pair.
PairResidual clifford_pair_residual(const GammaSet& set);
double clifford_residual(const GammaSet& set);
/// max |g^mu dagger - g^0 g^mu g^0|.
double hermiticity_residual(const GammaSet& set);
double unitarity_residual(const GammaSet& set);

/// i g0 g1 g2 g3 in 3+1, g0 g1 in 1+1.
CMatrix chirality(const GammaSet& set);
double chirality_square_residual(const GammaSet& set);
double chirality_anticommutation_residual(const GammaSet& set);

/// alpha . k + w beta.
CMatrix hamiltonian_symbol(const GammaSet& set, std::span<const double> k, double w);

/// Second-order operator obtained by squaring the Dirac operator:
/// (d_t^2 - d_s^2 + w^2) psi + i (d_mu w) gamma^mu psi with w = V + m, on interior points.
double klein_gordon_residual(const GammaSet& set, const SpinorField& field, const ScalarField& potential, double m);

}  // namespace majolab
