#include "majolab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "eigen_bridge.hpp"
#include "majolab/errors.hpp"

namespace majolab {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
}

void require_square(const CMatrix& a, const char* op) {
  if (!a.is_square()) throw UsageError(std::string(op) + ": matrix is not square");
}

double one_norm(const CMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += std::abs(a(r, c));
    best = std::max(best, s);
  }
  return best;
}

CMatrix finite_or_throw(CMatrix a, const char* op) {
  if (!all_finite(a)) throw NumericalError(std::string(op) + ": result is not finite");
  return a;
}

CMatrix expm_taylor(const CMatrix& a) {
  const double norm = one_norm(a);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  if (squarings > 1100) throw NumericalError("expm: norm too large");
  const CMatrix x = a * cplx(std::ldexp(1.0, -squarings));
  const std::size_t n = a.rows();
  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = (term * x) * cplx(1.0 / k);
    sum += term;
    if (max_abs(term) <= 1e-18 * std::max(1.0, max_abs(sum))) break;
  }
  for (int i = 0; i < squarings; ++i) {
    sum = sum * sum;
    if (!all_finite(sum)) throw NumericalError("expm: overflow while squaring");
  }
  return sum;
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_row_major(std::size_t rows, std::size_t cols, std::vector<cplx> entries) {
  if (entries.size() != rows * cols) throw UsageError("CMatrix: entry count does not match shape");
  CMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("CMatrix::block: out of range");
  CMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw UsageError("CMatrix::set_block: out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_shape(*this, o, "sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator-(CMatrix a) { return a *= -1.0; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, cplx s) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw UsageError("mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CVector operator*(const CMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) throw UsageError("mul: vector length does not match matrix");
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

CMatrix mul(const CMatrix& a, const CMatrix& b) { return a * b; }
CMatrix add(const CMatrix& a, const CMatrix& b) { return a + b; }
CMatrix sub(const CMatrix& a, const CMatrix& b) { return a - b; }
CMatrix scale(const CMatrix& a, cplx s) { return s * a; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix d(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) d(c, r) = std::conj(a(r, c));
  return d;
}

CMatrix conj(const CMatrix& a) {
  CMatrix d = a;
  for (auto& x : d.entries()) x = std::conj(x);
  return d;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix d(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) d(c, r) = a(r, c);
  return d;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }
CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

cplx trace(const CMatrix& a) {
  require_square(a, "trace");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

CVector conj(std::span<const cplx> v) {
  CVector out(v.begin(), v.end());
  for (auto& x : out) x = std::conj(x);
  return out;
}

double max_abs(const CMatrix& a) { return max_abs(a.entries()); }

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw UsageError("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_imag(const CMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.entries()) m = std::max(m, std::abs(x.imag()));
  return m;
}

double max_real(const CMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.entries()) m = std::max(m, std::abs(x.real()));
  return m;
}

bool all_finite(const CMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

double unitarity_defect(const CMatrix& a) {
  require_square(a, "unitarity_defect");
  return max_abs_diff(dagger(a) * a, CMatrix::identity(a.rows()));
}

double hermiticity_defect(const CMatrix& a) {
  require_square(a, "hermiticity_defect");
  return max_abs_diff(a, dagger(a));
}

double anti_hermiticity_defect(const CMatrix& a) {
  require_square(a, "anti_hermiticity_defect");
  return max_abs(a + dagger(a));
}

bool is_unitary(const CMatrix& a, double tol) { return a.is_square() && unitarity_defect(a) <= tol; }
bool is_hermitian(const CMatrix& a, double tol) { return a.is_square() && hermiticity_defect(a) <= tol; }
bool is_anti_hermitian(const CMatrix& a, double tol) {
  return a.is_square() && anti_hermiticity_defect(a) <= tol;
}

CMatrix inverse(const CMatrix& a) {
  require_square(a, "inverse");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(detail::to_eigen(a));
  if (!lu.isInvertible()) throw NumericalError("inverse: matrix is singular");
  return finite_or_throw(detail::from_eigen(lu.inverse()), "inverse");
}

CMatrix expm(const CMatrix& a) {
  require_square(a, "expm");
  if (!all_finite(a)) throw NumericalError("expm: input is not finite");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  const double scale_ref = std::max(1.0, max_abs(a));

  if (hermiticity_defect(a) <= 1e-14 * scale_ref) {
    const HermitianEigen e = eigh(0.5 * (a + dagger(a)));
    CVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = std::exp(e.values[i]);
    return finite_or_throw(e.vectors * CMatrix::diagonal(d) * dagger(e.vectors), "expm");
  }
  if (anti_hermiticity_defect(a) <= 1e-14 * scale_ref) {
    // a = -i h with h Hermitian
    const HermitianEigen e = eigh(kI * 0.5 * (a - dagger(a)));
    CVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = std::exp(-kI * e.values[i]);
    return finite_or_throw(e.vectors * CMatrix::diagonal(d) * dagger(e.vectors), "expm");
  }
  if (max_abs(commutator(a, dagger(a))) <= 1e-13 * scale_ref * scale_ref) {
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(detail::to_eigen(a));
    if (schur.info() == Eigen::Success) {
      const Eigen::MatrixXcd& t = schur.matrixT();
      Eigen::VectorXcd d(n);
      for (std::size_t i = 0; i < n; ++i) d(i) = std::exp(t(i, i));
      const Eigen::MatrixXcd& u = schur.matrixU();
      return finite_or_throw(detail::from_eigen(u * d.asDiagonal() * u.adjoint()), "expm");
    }
  }
  return finite_or_throw(expm_taylor(a), "expm");
}

HermitianEigen eigh(const CMatrix& a) {
  require_square(a, "eigh");
  if (!all_finite(a)) throw NumericalError("eigh: input is not finite");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(detail::to_eigen(a));
  if (es.info() != Eigen::Success) throw NumericalError("eigh: eigensolver did not converge");
  HermitianEigen out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  out.vectors = detail::from_eigen(es.eigenvectors());
  return out;
}

namespace pauli {
CMatrix I2() { return CMatrix::identity(2); }
CMatrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
CMatrix Y() { return {{0.0, -kI}, {kI, 0.0}}; }
CMatrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace majolab
