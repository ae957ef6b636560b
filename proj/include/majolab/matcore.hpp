#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace majolab {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

inline constexpr double kDefaultTol = 1e-12;
inline constexpr cplx kI{0.0, 1.0};

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix from_row_major(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  static CMatrix diagonal(std::span<const cplx> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(CMatrix a, cplx s);
CVector operator*(const CMatrix& a, std::span<const cplx> v);
inline CVector operator*(const CMatrix& a, const CVector& v) { return a * std::span<const cplx>(v); }

CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix sub(const CMatrix& a, const CMatrix& b);
CMatrix scale(const CMatrix& a, cplx s);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);
CMatrix conj(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
cplx trace(const CMatrix& a);

CVector conj(std::span<const cplx> v);

/// Largest entry modulus.
double max_abs(const CMatrix& a);
double max_abs(std::span<const cplx> v);
/// Largest entrywise modulus of a - b; throws UsageError on shape mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
/// Largest modulus of an imaginary part.
double max_imag(const CMatrix& a);
double max_real(const CMatrix& a);
bool all_finite(const CMatrix& a);

double unitarity_defect(const CMatrix& a);
double hermiticity_defect(const CMatrix& a);
double anti_hermiticity_defect(const CMatrix& a);

bool is_unitary(const CMatrix& a, double tol = kDefaultTol);
bool is_hermitian(const CMatrix& a, double tol = kDefaultTol);
bool is_anti_hermitian(const CMatrix& a, double tol = kDefaultTol);

/// Inverse by LU with partial pivoting; throws NumericalError when singular.
CMatrix inverse(const CMatrix& a);

/// Matrix exponential. Normal inputs go through a unitary diagonalisation,
/// everything else through scaling and squaring of a Taylor series.
CMatrix expm(const CMatrix& a);

/// Eigen-decomposition of a Hermitian matrix; values ascending, vectors as columns.
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};
HermitianEigen eigh(const CMatrix& a);

namespace pauli {
CMatrix I2();
CMatrix X();
CMatrix Y();
CMatrix Z();
}  // namespace pauli

}  // namespace majolab
