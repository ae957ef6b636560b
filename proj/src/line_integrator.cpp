#include "majolab/line_integrator.hpp"

#include <cmath>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "majolab/errors.hpp"

namespace majolab {

namespace {

using Triplet = Eigen::Triplet<double>;

/// d_t u = A d_s u + Ac d_s u* + w (B u + C u*), all coefficient matrices nc x nc.
struct RealLinearRhs {
  CMatrix a, a_conj, b, c;
};

class RealSystem {
 public:
  RealSystem(std::size_t n, std::size_t nc) : n_(n), nc_(nc) {}

  std::size_t re(std::size_t j, std::size_t comp) const { return (j * nc_ + comp) * 2; }

  // adds coefficient * (M z) or coefficient * (M z*) from point jc into point jr
  void couple(std::size_t jr, std::size_t jc, const CMatrix& m, double coeff, bool conjugate) {
    for (std::size_t r = 0; r < nc_; ++r)
      for (std::size_t c = 0; c < nc_; ++c) {
        const cplx v = coeff * m(r, c);
        if (v == cplx(0.0)) continue;
        const std::size_t rr = re(jr, r), cc = re(jc, c);
        const double s = conjugate ? -1.0 : 1.0;
        push(rr, cc, v.real());
        push(rr, cc + 1, -s * v.imag());
        push(rr + 1, cc, v.imag());
        push(rr + 1, cc + 1, s * v.real());
      }
  }

  Eigen::SparseMatrix<double> build() const {
    Eigen::SparseMatrix<double> m(2 * nc_ * n_, 2 * nc_ * n_);
    m.setFromTriplets(triplets_.begin(), triplets_.end());
    return m;
  }

 private:
  void push(std::size_t r, std::size_t c, double v) {
    if (v != 0.0) triplets_.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
  }

  std::size_t n_, nc_;
  std::vector<Triplet> triplets_;
};

SpinorField integrate(const RealLinearRhs& rhs, const LineSetup& setup, const CVector& u0, double dt,
                      std::size_t steps) {
  const std::size_t n = setup.n;
  const std::size_t nc = rhs.a.rows();
  if (n < 5) throw UsageError("line integrator: need at least 5 grid points");
  if (!(dt > 0.0)) throw UsageError("line integrator: dt must be positive");
  if (u0.size() != n * nc) throw UsageError("line integrator: initial data has the wrong length");
  if (!setup.potential.empty() && setup.potential.size() != n)
    throw UsageError("line integrator: potential must have one sample per grid point");

  RealSystem sys(n, nc);
  const double inv2dx = 1.0 / (2.0 * setup.dx());
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t jp = (j + 1) % n, jm = (j + n - 1) % n;
    sys.couple(j, jp, rhs.a, inv2dx, false);
    sys.couple(j, jm, rhs.a, -inv2dx, false);
    sys.couple(j, jp, rhs.a_conj, inv2dx, true);
    sys.couple(j, jm, rhs.a_conj, -inv2dx, true);
    const double w = (setup.potential.empty() ? 0.0 : setup.potential[j]) + setup.mass;
    sys.couple(j, j, rhs.b, w, false);
    sys.couple(j, j, rhs.c, w, true);
  }
  const Eigen::SparseMatrix<double> a = sys.build();
  Eigen::SparseMatrix<double> id(a.rows(), a.cols());
  id.setIdentity();
  const Eigen::SparseMatrix<double> lhs = id - (0.5 * dt) * a;
  const Eigen::SparseMatrix<double> rhs_m = id + (0.5 * dt) * a;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(lhs);
  if (lu.info() != Eigen::Success) throw NumericalError("line integrator: factorisation failed");

  Eigen::VectorXd u(a.rows());
  for (std::size_t k = 0; k < u0.size(); ++k) {
    u(2 * k) = u0[k].real();
    u(2 * k + 1) = u0[k].imag();
  }
  SpinorField out(setup.grid(steps, dt), nc, setup.axis);
  auto store = [&](std::size_t it) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < nc; ++c) out(it, j, c) = cplx(u(sys.re(j, c)), u(sys.re(j, c) + 1));
  };
  store(0);
  for (std::size_t s = 1; s <= steps; ++s) {
    u = lu.solve(rhs_m * u);
    if (!u.allFinite()) throw NumericalError("line integrator: state is not finite");
    store(s);
  }
  return out;
}

}  // namespace

SpinorField integrate_dirac_line(const RepSpec& rep, const LineSetup& setup, const CVector& psi0, double dt,
                                 std::size_t steps) {
  // d_t psi = -alpha.n d_s psi - i w beta psi
  const CMatrix alpha = rep.gammas.spatial_alpha(setup.axis);
  const std::size_t nc = rep.spinor_size();
  return integrate({-alpha, CMatrix::zero(nc, nc), -kI * rep.gammas.beta(), CMatrix::zero(nc, nc)}, setup, psi0,
                   dt, steps);
}

SpinorField integrate_two_component_line(TwoComponentForm form, const LineSetup& setup, const CVector& phi0,
                                         double dt, std::size_t steps) {
  const TwoComponentOperator op = two_component_operator(form, setup.axis);
  const CMatrix t_inv = inverse(op.t);
  return integrate({-(t_inv * op.k), -(t_inv * op.k_conj), -(t_inv * op.b), -(t_inv * op.c)}, setup, phi0, dt,
                   steps);
}

}  // namespace majolab
