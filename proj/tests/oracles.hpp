#pragma once
// Independent reference computations used by the tests.

#include <cmath>
#include <array>
#include <complex>
#include <random>
#include <vector>

#include "majolab/field.hpp"
#include "majolab/matcore.hpp"

namespace oracle {

using majolab::CMatrix;
using majolab::cplx;
using majolab::CVector;

inline CMatrix m2(cplx a, cplx b, cplx c, cplx d) { return CMatrix{{a, b}, {c, d}}; }

inline const cplx I{0.0, 1.0};

inline CMatrix sx() { return m2(0, 1, 1, 0); }
inline CMatrix sy() { return m2(0, -I, I, 0); }
inline CMatrix sz() { return m2(1, 0, 0, -1); }
inline CMatrix id2() { return m2(1, 0, 0, 1); }

/// 2x2 blocks [[a, b], [c, d]] to 4x4, written out entry by entry.
inline CMatrix blocks(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  CMatrix m(4, 4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 2; ++k) {
      m(r, k) = a(r, k);
      m(r, k + 2) = b(r, k);
      m(r + 2, k) = c(r, k);
      m(r + 2, k + 2) = d(r, k);
    }
  return m;
}

/// Plain triple loop in long double.
inline CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::complex<long double> s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        s += std::complex<long double>(a(i, k).real(), a(i, k).imag()) *
             std::complex<long double>(b(k, j).real(), b(k, j).imag());
      c(i, j) = cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
    }
  return c;
}

/// Unscaled Taylor series with many terms; only for modest norms.
inline CMatrix expm_series(const CMatrix& a, int terms = 80) {
  const std::size_t n = a.rows();
  CMatrix sum = CMatrix::identity(n), term = CMatrix::identity(n);
  for (int k = 1; k <= terms; ++k) {
    term = multiply(term, a);
    for (auto& x : term.entries()) x /= static_cast<double>(k);
    for (std::size_t i = 0; i < sum.entries().size(); ++i) sum.entries()[i] += term.entries()[i];
  }
  return sum;
}

inline double diff(const CMatrix& a, const CMatrix& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

inline double diff(const CVector& a, const CVector& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long long seed) : gen(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  cplx c() { return {uniform(), uniform()}; }
  CVector vec(std::size_t n) {
    CVector v(n);
    for (auto& x : v) x = c();
    return v;
  }
  CMatrix mat(std::size_t r, std::size_t k) {
    CMatrix m(r, k);
    for (auto& x : m.entries()) x = c();
    return m;
  }
};

/// Samples f(t, s) (a spinor-valued function) on a grid.
template <class F>
majolab::SpinorField sample_field(const majolab::GridSpec& g, std::size_t nc, F&& f,
                                  std::array<double, 3> axis = {1.0, 0.0, 0.0}) {
  majolab::SpinorField out(g, nc, axis);
  for (std::size_t it = 0; it < g.nt; ++it)
    for (std::size_t ix = 0; ix < g.nx; ++ix) out.set_spinor(it, ix, f(g.t(it), g.x(ix)));
  return out;
}

/// Square grid on [0, T] x [0, X] with n points per side.
inline majolab::GridSpec square_grid(std::size_t n, double t_len, double x_len, double x0 = 0.0) {
  return {n, n, 0.0, t_len / static_cast<double>(n - 1), x0, x_len / static_cast<double>(n - 1)};
}

/// Positive-energy plane wave u exp(-i(E t - k s)) for the constant-mass Dirac
/// Hamiltonian H = k alpha_n + w beta, with u = (1 + H/E) v / 2 for a fixed v.
struct PlaneWave {
  CVector u;
  double k = 0.0;
  double e = 0.0;
  CVector operator()(double t, double s) const {
    const cplx ph = std::exp(cplx(0.0, -(e * t - k * s)));
    CVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * ph;
    return out;
  }
};

inline PlaneWave plane_wave(const CMatrix& alpha_n, const CMatrix& beta, double k, double w, const CVector& v) {
  const double e = std::sqrt(k * k + w * w);
  const std::size_t n = beta.rows();
  CVector u(n, cplx(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    u[i] += 0.5 * v[i];
    for (std::size_t j = 0; j < n; ++j) u[i] += (k * alpha_n(i, j) + w * beta(i, j)) * v[j] / (2.0 * e);
  }
  return {u, k, e};
}

/// r(coarse) / r(fine) for a residual evaluated on n and 2n - 1 points over the same extent.
template <class R>
double halving_ratio(std::size_t n, R&& residual) {
  return residual(n) / residual(2 * n - 1);
}

}  // namespace oracle
