#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "majolab/matcore.hpp"

namespace majolab {

/// Regular (t, s) sampling. For 3+1 fields s runs along a unit axis (planar ansatz).
struct GridSpec {
  std::size_t nt = 0;
  std::size_t nx = 0;
  double t0 = 0.0;
  double dt = 1.0;
  double x0 = 0.0;
  double dx = 1.0;

  double t(std::size_t it) const { return t0 + dt * static_cast<double>(it); }
  double x(std::size_t ix) const { return x0 + dx * static_cast<double>(ix); }
};

/// Complex spinor samples on a GridSpec, stored time-major then space then component.
class SpinorField {
 public:
  SpinorField() = default;
  SpinorField(GridSpec grid, std::size_t components, std::array<double, 3> axis = {1.0, 0.0, 0.0});

  const GridSpec& grid() const noexcept { return grid_; }
  std::size_t components() const noexcept { return components_; }
  const std::array<double, 3>& axis() const noexcept { return axis_; }
  void set_axis(std::array<double, 3> axis);

  cplx& operator()(std::size_t it, std::size_t ix, std::size_t c) {
    return data_[(it * grid_.nx + ix) * components_ + c];
  }
  const cplx& operator()(std::size_t it, std::size_t ix, std::size_t c) const {
    return data_[(it * grid_.nx + ix) * components_ + c];
  }

  std::span<const cplx> spinor(std::size_t it, std::size_t ix) const {
    return {data_.data() + (it * grid_.nx + ix) * components_, components_};
  }
  std::span<cplx> spinor(std::size_t it, std::size_t ix) {
    return {data_.data() + (it * grid_.nx + ix) * components_, components_};
  }
  void set_spinor(std::size_t it, std::size_t ix, std::span<const cplx> v);

  std::span<const cplx> data() const noexcept { return data_; }

 private:
  GridSpec grid_;
  std::size_t components_ = 0;
  std::array<double, 3> axis_{1.0, 0.0, 0.0};
  std::vector<cplx> data_;
};

/// Real scalar samples (a potential) on a GridSpec.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(GridSpec grid, std::vector<double> values);

  static ScalarField constant(const GridSpec& grid, double v);
  static ScalarField sample(const GridSpec& grid, const std::function<double(double t, double x)>& fn);

  const GridSpec& grid() const noexcept { return grid_; }
  double operator()(std::size_t it, std::size_t ix) const { return values_[it * grid_.nx + ix]; }

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Central differences at an interior point.
struct LocalDerivatives {
  CVector value;
  CVector d_t;
  CVector d_s;
};
LocalDerivatives central_derivatives(const SpinorField& f, std::size_t it, std::size_t ix);

/// Residual evaluators need at least five points per dimension.
void require_residual_grid(const SpinorField& f);
void require_matching_grid(const SpinorField& f, const ScalarField& v);

/// Max over interior points of the max-norm of residual(it, ix, derivatives).
double interior_max(const SpinorField& f,
                    const std::function<double(std::size_t, std::size_t, const LocalDerivatives&)>& residual);

/// CSV with header t,x,re_c0,im_c0,...; rows ordered by t then x.
void write_csv(std::ostream& os, const SpinorField& f);
SpinorField read_csv(std::istream& is);

/// Pointwise map of spinors through a matrix.
SpinorField apply_pointwise(const CMatrix& m, const SpinorField& f);
/// Pointwise m * conj(psi).
SpinorField apply_pointwise_conj(const CMatrix& m, const SpinorField& f);

}  // namespace majolab
