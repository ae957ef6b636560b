#include "majolab/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "majolab/errors.hpp"

namespace majolab {

std::size_t spinor_size(Dim d) { return d == Dim::D2 ? 2 : 4; }
std::size_t spacetime_dim(Dim d) { return d == Dim::D2 ? 2 : 4; }

std::string_view to_string(Dim d) { return d == Dim::D2 ? "D2" : "D4"; }

Dim dim_from_string(std::string_view s) {
  if (s == "D2" || s == "d2" || s == "2") return Dim::D2;
  if (s == "D4" || s == "d4" || s == "4") return Dim::D4;
  throw UsageError("unknown dimension '" + std::string(s) + "' (expected D2 or D4)");
}

double metric(std::size_t mu, std::size_t nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

GammaSet::GammaSet(Dim dim, std::vector<CMatrix> gammas) : dim_(dim), gammas_(std::move(gammas)) {
  if (gammas_.size() != spacetime_dim(dim))
    throw UsageError("GammaSet: expected " + std::to_string(spacetime_dim(dim)) + " matrices, got " +
                     std::to_string(gammas_.size()));
  const std::size_t n = spinor_size(dim);
  for (const auto& g : gammas_) {
    if (g.rows() != n || g.cols() != n)
      throw UsageError("GammaSet: gamma matrices must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!all_finite(g)) throw UsageError("GammaSet: non-finite entry");
  }
}

CMatrix GammaSet::alpha(std::size_t j) const {
  if (j == 0 || j >= gammas_.size()) throw UsageError("GammaSet::alpha: spatial index out of range");
  return gammas_[0] * gammas_[j];
}

CMatrix GammaSet::spatial_gamma(std::span<const double> n) const {
  const std::size_t d = gammas_.size() - 1;
  if (n.size() < d) throw UsageError("spatial_gamma: direction has too few components");
  CMatrix s(gammas_[0].rows(), gammas_[0].cols());
  for (std::size_t j = 0; j < d; ++j) s += n[j] * gammas_[j + 1];
  return s;
}

CMatrix GammaSet::spatial_alpha(std::span<const double> n) const { return gammas_[0] * spatial_gamma(n); }

PairResidual clifford_pair_residual(const GammaSet& set) {
  PairResidual worst;
  const auto id = CMatrix::identity(spinor_size(set.dim()));
  for (std::size_t mu = 0; mu < set.size(); ++mu)
    for (std::size_t nu = mu; nu < set.size(); ++nu) {
      const double r = max_abs_diff(anticommutator(set[mu], set[nu]), (2.0 * metric(mu, nu)) * id);
      if (r > worst.value) worst = {r, mu, nu};
    }
  return worst;
}

double clifford_residual(const GammaSet& set) { return clifford_pair_residual(set).value; }

double hermiticity_residual(const GammaSet& set) {
  double worst = 0.0;
  for (std::size_t mu = 0; mu < set.size(); ++mu)
    worst = std::max(worst, max_abs_diff(dagger(set[mu]), set[0] * set[mu] * set[0]));
  return worst;
}

double unitarity_residual(const GammaSet& set) {
  double worst = 0.0;
  for (const auto& g : set.gammas()) worst = std::max(worst, unitarity_defect(g));
  return worst;
}

CMatrix chirality(const GammaSet& set) {
  if (set.dim() == Dim::D2) return set[0] * set[1];
  return kI * (set[0] * set[1] * set[2] * set[3]);
}

double chirality_square_residual(const GammaSet& set) {
  const CMatrix c = chirality(set);
  return max_abs_diff(c * c, CMatrix::identity(c.rows()));
}

double chirality_anticommutation_residual(const GammaSet& set) {
  const CMatrix c = chirality(set);
  double worst = 0.0;
  for (const auto& g : set.gammas()) worst = std::max(worst, max_abs(anticommutator(c, g)));
  return worst;
}

CMatrix hamiltonian_symbol(const GammaSet& set, std::span<const double> k, double w) {
  const std::size_t d = set.size() - 1;
  if (k.size() != d) throw UsageError("hamiltonian_symbol: momentum must have " + std::to_string(d) + " components");
  CMatrix h = w * set.beta();
  for (std::size_t j = 0; j < d; ++j) h += k[j] * set.alpha(j + 1);
  return h;
}

double klein_gordon_residual(const GammaSet& set, const SpinorField& field, const ScalarField& potential, double m) {
  require_residual_grid(field);
  require_matching_grid(field, potential);
  const std::size_t nc = spinor_size(set.dim());
  if (field.components() != nc) throw UsageError("klein_gordon_residual: field has wrong component count");
  const auto& g = field.grid();
  const auto& n = field.axis();
  const CMatrix gs = set.spatial_gamma(n);
  double worst = 0.0;
  for (std::size_t it = 1; it + 1 < g.nt; ++it)
    for (std::size_t ix = 1; ix + 1 < g.nx; ++ix) {
      const double w = potential(it, ix) + m;
      const double dw_t = (potential(it + 1, ix) - potential(it - 1, ix)) / (2.0 * g.dt);
      const double dw_s = (potential(it, ix + 1) - potential(it, ix - 1)) / (2.0 * g.dx);
      // d_mu w gamma^mu with d_j = n_j d_s
      const CMatrix grad = dw_t * set[0] + dw_s * gs;
      CVector psi(field.spinor(it, ix).begin(), field.spinor(it, ix).end());
      const CVector gpsi = grad * psi;
      CVector r(nc);
      for (std::size_t c = 0; c < nc; ++c) {
        const cplx tt = (field(it + 1, ix, c) - 2.0 * field(it, ix, c) + field(it - 1, ix, c)) / (g.dt * g.dt);
        const cplx ss = (field(it, ix + 1, c) - 2.0 * field(it, ix, c) + field(it, ix - 1, c)) / (g.dx * g.dx);
        r[c] = tt - ss + kI * gpsi[c] + w * w * psi[c];
      }
      worst = std::max(worst, max_abs(r));
    }
  if (!std::isfinite(worst)) throw NumericalError("klein_gordon_residual: not finite");
  return worst;
}

}  // namespace majolab
