#include "majolab/boxsim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "majolab/errors.hpp"

namespace majolab {

namespace {

constexpr double kNormTol = 1e-12;

void require_normalised(double a, double b, const char* what) {
  if (!std::isfinite(a) || !std::isfinite(b) || std::abs(a * a + b * b - 1.0) > kNormTol)
    throw UsageError(std::string(what) + ": parameters must satisfy a^2 + b^2 = 1");
}

CMatrix self_inverse_matrix(double m0, double m2) {
  return (1.0 / m2) * CMatrix{{-1.0, -kI * m0}, {-kI * m0, 1.0}};
}

CMatrix phase_flip_matrix(double m1, double m3) { return (1.0 / m1) * CMatrix{{1.0, -kI * m3}, {kI * m3, 1.0}}; }

cplx dirac_wall_phase(DiracWallPart p) {
  // phi1 = (phi + chi)/sqrt2, phi2 = (phi - chi)/sqrt2 and chi = -i phi* on Majorana states:
  // Im phi = 0  <=>  phi1 = -i phi2,  Re phi = 0  <=>  phi1 = +i phi2
  return p == DiracWallPart::Im ? -kI : kI;
}

using BlockMap = std::map<std::pair<std::size_t, std::size_t>, CMatrix>;

void add_block(BlockMap& blocks, std::size_t j, std::size_t k, const CMatrix& b) {
  auto it = blocks.find({j, k});
  if (it == blocks.end())
    blocks.emplace(std::make_pair(j, k), b);
  else
    it->second += b;
}

CMatrix entry_matrix(std::size_t r, std::size_t c, cplx v) {
  CMatrix m(2, 2);
  m(r, c) = v;
  return m;
}

std::size_t require_layout(const DiscreteHamiltonian& h, std::span<const cplx> field) {
  const std::size_t n = h.grid.n();
  if (field.size() != 2 * n) throw UsageError("field length does not match the Hamiltonian grid");
  return n;
}

CVector spinor_at(std::span<const cplx> field, std::size_t n, std::size_t j) { return {field[j], field[n + j]}; }

}  // namespace

Grid1D::Grid1D(double length, std::size_t n) : length_(length), n_(n) {
  if (!(length > 0.0) || !std::isfinite(length)) throw UsageError("Grid1D: length must be positive");
  if (n < 8) throw UsageError("Grid1D: need at least 8 grid points");
}

BoundaryCondition BoundaryCondition::self_inverse(double m0, double m2) {
  require_normalised(m0, m2, "self-inverse boundary condition");
  return BoundaryCondition(BcFamily::SelfInverse, {m0, m2});
}

BoundaryCondition BoundaryCondition::phase_flip(double m1, double m3) {
  require_normalised(m1, m3, "phase-flip boundary condition");
  return BoundaryCondition(BcFamily::PhaseFlip, {m1, m3});
}

BoundaryCondition BoundaryCondition::confining(BcFamily family) {
  if (family == BcFamily::SelfInverse || family == BcFamily::PhaseFlip || family == BcFamily::DiracConfining)
    throw UsageError("BoundaryCondition::confining: not a confining family");
  return BoundaryCondition(family, {0.0, 0.0});
}

BoundaryCondition BoundaryCondition::dirac_confining(DiracWallPart at_0, DiracWallPart at_L) {
  return BoundaryCondition(BcFamily::DiracConfining, {0.0, 0.0}, {at_0, at_L});
}

BoundaryCondition BoundaryCondition::from_name(std::string_view name, double m0, double m1, double m3) {
  if (name == "self-inverse") return self_inverse(m0, std::sqrt(std::max(0.0, 1.0 - m0 * m0)));
  if (name == "phase-flip") return phase_flip(m1, m3);
  if (name == "confining-mm") return confining(BcFamily::ConfiningMM);
  if (name == "confining-pp") return confining(BcFamily::ConfiningPP);
  if (name == "confining-pm") return confining(BcFamily::ConfiningPM);
  if (name == "confining-mp") return confining(BcFamily::ConfiningMP);
  const auto part = [](std::string_view s) { return s == "re" ? DiracWallPart::Re : DiracWallPart::Im; };
  if (name.size() == 11 && name.substr(0, 6) == "dirac-" && name[8] == '-') {
    const auto a = name.substr(6, 2), b = name.substr(9, 2);
    if ((a == "re" || a == "im") && (b == "re" || b == "im")) return dirac_confining(part(a), part(b));
  }
  throw UsageError("unknown boundary condition '" + std::string(name) + "'");
}

std::optional<std::array<cplx, 2>> BoundaryCondition::wall_phases() const {
  switch (family_) {
    case BcFamily::ConfiningMM: return std::array<cplx, 2>{-kI, -kI};
    case BcFamily::ConfiningPP: return std::array<cplx, 2>{kI, kI};
    case BcFamily::ConfiningPM: return std::array<cplx, 2>{kI, -kI};
    case BcFamily::ConfiningMP: return std::array<cplx, 2>{-kI, kI};
    case BcFamily::DiracConfining: return std::array<cplx, 2>{dirac_wall_phase(dirac_[0]), dirac_wall_phase(dirac_[1])};
    case BcFamily::SelfInverse:
      // m2 -> 0 leaves phi1 = -i m0 phi2 at both walls
      if (params_[1] == 0.0) return std::array<cplx, 2>{-kI * params_[0], -kI * params_[0]};
      return std::nullopt;
    case BcFamily::PhaseFlip:
      // m1 -> 0 leaves phi1(0) = i m3 phi2(0), phi1(L) = -i m3 phi2(L)
      if (params_[0] == 0.0) return std::array<cplx, 2>{kI * params_[1], -kI * params_[1]};
      return std::nullopt;
  }
  return std::nullopt;
}

std::string BoundaryCondition::name() const {
  switch (family_) {
    case BcFamily::SelfInverse: return "self-inverse";
    case BcFamily::PhaseFlip: return "phase-flip";
    case BcFamily::ConfiningMM: return "confining-mm";
    case BcFamily::ConfiningPP: return "confining-pp";
    case BcFamily::ConfiningPM: return "confining-pm";
    case BcFamily::ConfiningMP: return "confining-mp";
    case BcFamily::DiracConfining:
      return std::string("dirac-") + (dirac_[0] == DiracWallPart::Re ? "re" : "im") + "-" +
             (dirac_[1] == DiracWallPart::Re ? "re" : "im");
  }
  return "unknown";
}

BcForm bc_matrix(const BoundaryCondition& bc) {
  BcForm f;
  f.wall_phases = bc.wall_phases();
  if (f.wall_phases) return f;
  const auto p = bc.params();
  f.linking = bc.family() == BcFamily::SelfInverse ? self_inverse_matrix(p[0], p[1]) : phase_flip_matrix(p[0], p[1]);
  return f;
}

double BcConsistencyReport::max() const {
  return std::max({self_inverse.value_or(0.0), inverse_by_flip.value_or(0.0), majorana_map});
}

BcConsistencyReport bc_consistency_check(const BoundaryCondition& bc) {
  BcConsistencyReport r;
  const BcForm f = bc_matrix(bc);
  const CMatrix id = CMatrix::identity(2);
  if (f.linking) {
    const CMatrix& m = *f.linking;
    if (bc.family() == BcFamily::SelfInverse) r.self_inverse = max_abs_diff(m * m, id);
    if (bc.family() == BcFamily::PhaseFlip)
      r.inverse_by_flip = max_abs_diff(m * phase_flip_matrix(bc.params()[0], -bc.params()[1]), id);
    // phi~ = K phi* with K = diag(-i, i); phi~(L) = M phi~(0) for all phi iff K M* = M K
    const CMatrix k = CMatrix::diagonal(std::vector<cplx>{-kI, kI});
    r.majorana_map = max_abs_diff(k * conj(m), m * k);
  } else {
    // phi1 = a phi2 maps to -i a* phi2* = a (i phi2*), i.e. a* = -a
    for (const cplx a : *f.wall_phases) r.majorana_map = std::max(r.majorana_map, std::abs(std::conj(a) + a));
  }
  return r;
}

DiscreteHamiltonian assemble_hamiltonian(const RepSpec& rep, const Grid1D& grid, std::span<const double> potential,
                                         double m, const BoundaryCondition& bc) {
  if (rep.dim() != Dim::D2) throw UnsupportedError("assemble_hamiltonian: 1+1 representations only");
  if (!rep.to_majorana)
    throw UnsupportedError("assemble_hamiltonian: representation needs a similarity matrix to the Majorana rep");
  const std::size_t n = grid.n();
  if (potential.size() != n) throw UsageError("assemble_hamiltonian: potential must have one sample per grid point");
  if (!std::isfinite(m)) throw UsageError("assemble_hamiltonian: mass must be finite");

  const CMatrix u = dagger(*rep.to_majorana) * builtin_to_majorana(RepKind::Weyl, Dim::D2);
  const CMatrix alpha = rep.gammas.alpha(1);
  const CMatrix& beta = rep.gammas.beta();
  const double inv2dx = 1.0 / (2.0 * grid.dx());

  BlockMap blocks;
  for (std::size_t j = 0; j < n; ++j) {
    const double w = potential[j] + m;
    if (!std::isfinite(w)) throw UsageError("assemble_hamiltonian: potential must be finite");
    add_block(blocks, j, j, w * beta);
    if (j + 1 < n) add_block(blocks, j, j + 1, (-kI * inv2dx) * alpha);
    if (j > 0) add_block(blocks, j, j - 1, (kI * inv2dx) * alpha);
  }

  // boundary closure in the Weyl rep (alpha = sigma_z), carried over by u
  BlockMap weyl;
  const BcForm form = bc_matrix(bc);
  if (form.wall_phases) {
    const auto [a0, aL] = *form.wall_phases;
    // ghosts phi1 = a phi2_edge, phi2 = a* phi1_edge
    add_block(weyl, 0, 0, entry_matrix(0, 1, kI * a0 * inv2dx) + entry_matrix(1, 0, -kI * std::conj(a0) * inv2dx));
    add_block(weyl, n - 1, n - 1,
              entry_matrix(0, 1, -kI * aL * inv2dx) + entry_matrix(1, 0, kI * std::conj(aL) * inv2dx));
  } else {
    // ghosts psi(-dx/2 side) = M^-1 psi_{N-1}, psi(L side) = M psi_0
    const CMatrix& lm = *form.linking;
    const CMatrix sz = pauli::Z();
    add_block(weyl, 0, n - 1, (kI * inv2dx) * (sz * inverse(lm)));
    add_block(weyl, n - 1, 0, (-kI * inv2dx) * (sz * lm));
  }
  const CMatrix u_dag = dagger(u);
  for (const auto& [jk, b] : weyl) add_block(blocks, jk.first, jk.second, u * b * u_dag);

  CMatrix hm(2 * n, 2 * n);
  for (const auto& [jk, b] : blocks)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) hm(r * n + jk.first, c * n + jk.second) += b(r, c);

  DiscreteHamiltonian h{std::move(hm), rep, grid, std::vector<double>(potential.begin(), potential.end()), m, bc, u,
                        false};
  h.hermitian = hermiticity_defect(h.matrix) <= 1e-10;
  return h;
}

namespace {

using SpMat = Eigen::SparseMatrix<cplx>;

SpMat to_sparse(const CMatrix& a, cplx scale, bool add_identity) {
  std::vector<Eigen::Triplet<cplx>> t;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      cplx v = scale * a(r, c);
      if (add_identity && r == c) v += 1.0;
      if (v != cplx(0.0)) t.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
    }
  SpMat m(a.rows(), a.cols());
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace

std::vector<EvolutionState> evolve(const DiscreteHamiltonian& h, const CVector& psi0, double dt, std::size_t steps,
                                   std::size_t record_every) {
  if (!h.hermitian) throw UnsupportedError("evolve: Hamiltonian is not Hermitian on this boundary condition");
  const std::size_t n = require_layout(h, psi0);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw UsageError("evolve: dt must be positive");
  if (record_every == 0) throw UsageError("evolve: record_every must be at least 1");

  const SpMat lhs = to_sparse(h.matrix, kI * (0.5 * dt), true);
  const SpMat rhs = to_sparse(h.matrix, -kI * (0.5 * dt), true);
  Eigen::SparseLU<SpMat> lu;
  lu.compute(lhs);
  if (lu.info() != Eigen::Success) throw NumericalError("evolve: factorisation failed");

  Eigen::VectorXcd psi(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) psi(i) = psi0[i];

  std::vector<EvolutionState> states;
  states.reserve(steps + 1);
  auto record = [&](std::size_t step) {
    EvolutionState s;
    s.step = step;
    s.t = dt * static_cast<double>(step);
    const CVector f(psi.data(), psi.data() + psi.size());
    s.norm = field_norm(h, f);
    if (!(s.norm > 0.0) || !std::isfinite(s.norm)) throw NumericalError("evolve: norm is not positive and finite");
    s.defect = field_defect(h.rep, f);
    s.j0 = current_density(h, f, 0);
    s.jL = current_density(h, f, n + 1);
    if (step % record_every == 0 || step == steps) s.field = f;
    states.push_back(std::move(s));
  };
  record(0);
  for (std::size_t step = 1; step <= steps; ++step) {
    psi = lu.solve(rhs * psi);
    record(step);
  }
  return states;
}

double current_density(const RepSpec& rep, std::span<const cplx> spinor) {
  if (rep.dim() != Dim::D2) throw UnsupportedError("current_density: 1+1 representations only");
  if (spinor.size() != 2) throw UsageError("current_density: spinor must have 2 components");
  const CVector a = rep.gammas.alpha(1) * spinor;
  return (std::conj(spinor[0]) * a[0] + std::conj(spinor[1]) * a[1]).real();
}

std::array<CVector, 2> wall_values(const DiscreteHamiltonian& h, std::span<const cplx> field) {
  const std::size_t n = require_layout(h, field);
  const CMatrix& u = h.weyl_to_rep;
  const CMatrix u_dag = dagger(u);
  const CVector first = u_dag * spinor_at(field, n, 0);
  const CVector last = u_dag * spinor_at(field, n, n - 1);
  const BcForm form = bc_matrix(h.bc);
  CVector w0(2), wL(2);
  if (form.wall_phases) {
    const auto [a0, aL] = *form.wall_phases;
    w0 = {0.5 * (first[0] + a0 * first[1]), 0.5 * (first[1] + std::conj(a0) * first[0])};
    wL = {0.5 * (last[0] + aL * last[1]), 0.5 * (last[1] + std::conj(aL) * last[0])};
  } else {
    const CVector g0 = inverse(*form.linking) * last;
    const CVector gL = *form.linking * first;
    w0 = {0.5 * (first[0] + g0[0]), 0.5 * (first[1] + g0[1])};
    wL = {0.5 * (last[0] + gL[0]), 0.5 * (last[1] + gL[1])};
  }
  return {u * w0, u * wL};
}

double current_density(const DiscreteHamiltonian& h, std::span<const cplx> field, std::size_t x_index) {
  const std::size_t n = require_layout(h, field);
  if (x_index > n + 1) throw UsageError("current_density: x_index out of range");
  if (x_index == 0) return current_density(h.rep, wall_values(h, field)[0]);
  if (x_index == n + 1) return current_density(h.rep, wall_values(h, field)[1]);
  return current_density(h.rep, spinor_at(field, n, x_index - 1));
}

double field_norm(const DiscreteHamiltonian& h, std::span<const cplx> field) {
  require_layout(h, field);
  double s = 0.0;
  for (const auto& v : field) s += std::norm(v);
  return s * h.grid.dx();
}

CVector field_charge_conjugate(const RepSpec& rep, std::span<const cplx> field) {
  if (field.size() % 2 != 0 || rep.spinor_size() != 2) throw UsageError("field_charge_conjugate: bad layout");
  const std::size_t n = field.size() / 2;
  CVector out(field.size());
  for (std::size_t j = 0; j < n; ++j) {
    const CVector c = charge_conjugate(rep, spinor_at(field, n, j));
    out[j] = c[0];
    out[n + j] = c[1];
  }
  return out;
}

double field_defect(const RepSpec& rep, std::span<const cplx> field) {
  return max_abs_diff(field, field_charge_conjugate(rep, field));
}

CVector field_majorana_project(const RepSpec& rep, std::span<const cplx> field) {
  CVector c = field_charge_conjugate(rep, field);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (field[i] + c[i]);
  return c;
}

CVector gaussian_packet(const Grid1D& grid, double x0, double sigma, double k0, std::span<const cplx> spinor) {
  if (spinor.size() != 2) throw UsageError("gaussian_packet: spinor must have 2 components");
  if (!(sigma > 0.0)) throw UsageError("gaussian_packet: width must be positive");
  const std::size_t n = grid.n();
  CVector f(2 * n);
  double norm = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid.x(j);
    const cplx env = std::exp(-(x - x0) * (x - x0) / (4.0 * sigma * sigma)) * std::exp(kI * (k0 * x));
    f[j] = env * spinor[0];
    f[n + j] = env * spinor[1];
    norm += std::norm(f[j]) + std::norm(f[n + j]);
  }
  norm *= grid.dx();
  if (!(norm > 0.0)) throw UsageError("gaussian_packet: packet vanishes on the grid");
  const double s = 1.0 / std::sqrt(norm);
  for (auto& v : f) v *= s;
  return f;
}

std::vector<StationaryMode> stationary_modes(const DiscreteHamiltonian& h, std::size_t k) {
  if (!h.hermitian) throw UnsupportedError("stationary_modes: Hamiltonian is not Hermitian on this boundary condition");
  const std::size_t dim = h.matrix.rows();
  if (k > dim) throw UsageError("stationary_modes: k exceeds the number of eigenpairs (2N)");
  const HermitianEigen e = eigh(0.5 * (h.matrix + dagger(h.matrix)));
  // Sort by |E|, then within each cluster of equal |E| alternate -E, +E so that any even k
  // returns complete (E, -E) pairs even when doubling makes the levels fourfold.
  std::vector<std::size_t> by_abs(dim);
  for (std::size_t i = 0; i < dim; ++i) by_abs[i] = i;
  std::stable_sort(by_abs.begin(), by_abs.end(), [&](std::size_t a, std::size_t b) {
    const double ea = std::abs(e.values[a]), eb = std::abs(e.values[b]);
    if (ea != eb) return ea < eb;
    return e.values[a] < e.values[b];
  });
  std::vector<std::size_t> order;
  order.reserve(dim);
  for (std::size_t i = 0; i < dim;) {
    const double base = std::abs(e.values[by_abs[i]]);
    std::size_t j = i;
    std::vector<std::size_t> neg, pos;
    while (j < dim && std::abs(e.values[by_abs[j]]) - base <= 1e-9 * std::max(1.0, base)) {
      (e.values[by_abs[j]] < 0.0 ? neg : pos).push_back(by_abs[j]);
      ++j;
    }
    for (std::size_t q = 0; q < std::max(neg.size(), pos.size()); ++q) {
      if (q < neg.size()) order.push_back(neg[q]);
      if (q < pos.size()) order.push_back(pos[q]);
    }
    i = j;
  }
  const double scale = 1.0 / std::sqrt(h.grid.dx());
  std::vector<StationaryMode> modes;
  for (std::size_t i = 0; i < k; ++i) {
    StationaryMode mode;
    mode.energy = e.values[order[i]];
    mode.field.resize(dim);
    for (std::size_t r = 0; r < dim; ++r) mode.field[r] = scale * e.vectors(r, order[i]);
    const CVector hv = h.matrix * mode.field;
    double res = 0.0;
    for (std::size_t r = 0; r < dim; ++r) res += std::norm(hv[r] - mode.energy * mode.field[r]);
    mode.residual = std::sqrt(res * h.grid.dx());
    modes.push_back(std::move(mode));
  }
  return modes;
}

SpinorField to_spinor_field(const DiscreteHamiltonian& h, const std::vector<EvolutionState>& states) {
  if (states.size() < 2) throw UsageError("to_spinor_field: need at least two states");
  const std::size_t n = h.grid.n();
  const double dt = states[1].t - states[0].t;
  GridSpec g{states.size(), n, states[0].t, dt, h.grid.x(0), h.grid.dx()};
  SpinorField f(g, 2);
  for (std::size_t it = 0; it < states.size(); ++it) {
    if (states[it].field.size() != 2 * n) throw UsageError("to_spinor_field: a state has no recorded field");
    for (std::size_t j = 0; j < n; ++j) {
      f(it, j, 0) = states[it].field[j];
      f(it, j, 1) = states[it].field[n + j];
    }
  }
  return f;
}

}  // namespace majolab
