#include "majolab/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "majolab/errors.hpp"

namespace majolab {

SpinorField::SpinorField(GridSpec grid, std::size_t components, std::array<double, 3> axis)
    : grid_(grid), components_(components), data_(grid.nt * grid.nx * components) {
  if (components == 0) throw UsageError("SpinorField: zero components");
  if (!(grid.dt > 0.0) || !(grid.dx > 0.0)) throw UsageError("SpinorField: grid steps must be positive");
  set_axis(axis);
}

void SpinorField::set_axis(std::array<double, 3> axis) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(n > 0.0)) throw UsageError("SpinorField: axis must be nonzero");
  for (auto& a : axis) a /= n;
  axis_ = axis;
}

void SpinorField::set_spinor(std::size_t it, std::size_t ix, std::span<const cplx> v) {
  if (v.size() != components_) throw UsageError("SpinorField::set_spinor: wrong component count");
  std::copy(v.begin(), v.end(), spinor(it, ix).begin());
}

ScalarField::ScalarField(GridSpec grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid.nt * grid.nx) throw UsageError("ScalarField: sample count does not match grid");
}

ScalarField ScalarField::constant(const GridSpec& grid, double v) {
  return ScalarField(grid, std::vector<double>(grid.nt * grid.nx, v));
}

ScalarField ScalarField::sample(const GridSpec& grid, const std::function<double(double, double)>& fn) {
  std::vector<double> v(grid.nt * grid.nx);
  for (std::size_t it = 0; it < grid.nt; ++it)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) v[it * grid.nx + ix] = fn(grid.t(it), grid.x(ix));
  return ScalarField(grid, std::move(v));
}

LocalDerivatives central_derivatives(const SpinorField& f, std::size_t it, std::size_t ix) {
  const auto& g = f.grid();
  if (it == 0 || ix == 0 || it + 1 >= g.nt || ix + 1 >= g.nx)
    throw UsageError("central_derivatives: point is on the grid boundary");
  const std::size_t nc = f.components();
  LocalDerivatives d{CVector(nc), CVector(nc), CVector(nc)};
  for (std::size_t c = 0; c < nc; ++c) {
    d.value[c] = f(it, ix, c);
    d.d_t[c] = (f(it + 1, ix, c) - f(it - 1, ix, c)) / (2.0 * g.dt);
    d.d_s[c] = (f(it, ix + 1, c) - f(it, ix - 1, c)) / (2.0 * g.dx);
  }
  return d;
}

void require_residual_grid(const SpinorField& f) {
  if (f.grid().nt < 5 || f.grid().nx < 5)
    throw UsageError("residual evaluation needs at least 5 grid points per dimension");
}

void require_matching_grid(const SpinorField& f, const ScalarField& v) {
  if (f.grid().nt != v.grid().nt || f.grid().nx != v.grid().nx)
    throw UsageError("potential grid does not match field grid");
}

double interior_max(const SpinorField& f,
                    const std::function<double(std::size_t, std::size_t, const LocalDerivatives&)>& residual) {
  require_residual_grid(f);
  double worst = 0.0;
  for (std::size_t it = 1; it + 1 < f.grid().nt; ++it)
    for (std::size_t ix = 1; ix + 1 < f.grid().nx; ++ix) {
      const double r = residual(it, ix, central_derivatives(f, it, ix));
      if (!std::isfinite(r)) throw NumericalError("residual is not finite");
      worst = std::max(worst, r);
    }
  return worst;
}

void write_csv(std::ostream& os, const SpinorField& f) {
  os << "t,x";
  for (std::size_t c = 0; c < f.components(); ++c) os << ",re_c" << c << ",im_c" << c;
  os << '\n';
  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (std::size_t it = 0; it < f.grid().nt; ++it)
    for (std::size_t ix = 0; ix < f.grid().nx; ++ix) {
      put(f.grid().t(it));
      os << ',';
      put(f.grid().x(ix));
      for (std::size_t c = 0; c < f.components(); ++c) {
        os << ',';
        put(f(it, ix, c).real());
        os << ',';
        put(f(it, ix, c).imag());
      }
      os << '\n';
    }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size() && s.find_first_not_of(" \r", pos) != std::string::npos) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("read_csv: bad number '" + s + "' on line " + std::to_string(line_no));
  }
}

}  // namespace

SpinorField read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw UsageError("read_csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv(line);
  if (header.size() < 4 || header[0] != "t" || header[1] != "x" || (header.size() - 2) % 2 != 0)
    throw UsageError("read_csv: header must be t,x,re_c0,im_c0,...");
  const std::size_t nc = (header.size() - 2) / 2;
  for (std::size_t c = 0; c < nc; ++c)
    if (header[2 + 2 * c] != "re_c" + std::to_string(c) || header[3 + 2 * c] != "im_c" + std::to_string(c))
      throw UsageError("read_csv: unexpected column name " + header[2 + 2 * c]);

  std::vector<double> ts, xs;
  std::vector<cplx> values;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) throw UsageError("read_csv: wrong column count on line " + std::to_string(line_no));
    ts.push_back(parse_double(cells[0], line_no));
    xs.push_back(parse_double(cells[1], line_no));
    for (std::size_t c = 0; c < nc; ++c)
      values.emplace_back(parse_double(cells[2 + 2 * c], line_no), parse_double(cells[3 + 2 * c], line_no));
  }
  if (ts.empty()) throw UsageError("read_csv: no samples");

  std::size_t nx = 1;
  while (nx < ts.size() && ts[nx] == ts[0]) ++nx;
  if (ts.size() % nx != 0) throw UsageError("read_csv: rows do not form a regular grid");
  GridSpec g;
  g.nx = nx;
  g.nt = ts.size() / nx;
  g.t0 = ts[0];
  g.x0 = xs[0];
  g.dx = nx > 1 ? (xs[nx - 1] - xs[0]) / static_cast<double>(nx - 1) : 1.0;
  g.dt = g.nt > 1 ? (ts[(g.nt - 1) * nx] - ts[0]) / static_cast<double>(g.nt - 1) : 1.0;
  const double tol = 1e-9;
  for (std::size_t it = 0; it < g.nt; ++it)
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const std::size_t k = it * nx + ix;
      if (std::abs(ts[k] - g.t(it)) > tol * std::max(1.0, std::abs(ts[k])) ||
          std::abs(xs[k] - g.x(ix)) > tol * std::max(1.0, std::abs(xs[k])))
        throw UsageError("read_csv: rows do not form a regular grid");
    }
  SpinorField f(g, nc);
  for (std::size_t it = 0; it < g.nt; ++it)
    for (std::size_t ix = 0; ix < nx; ++ix)
      f.set_spinor(it, ix, std::span<const cplx>(values.data() + (it * nx + ix) * nc, nc));
  return f;
}

SpinorField apply_pointwise(const CMatrix& m, const SpinorField& f) {
  if (m.cols() != f.components()) throw UsageError("apply_pointwise: matrix does not match components");
  SpinorField out(f.grid(), m.rows(), f.axis());
  for (std::size_t it = 0; it < f.grid().nt; ++it)
    for (std::size_t ix = 0; ix < f.grid().nx; ++ix) out.set_spinor(it, ix, m * f.spinor(it, ix));
  return out;
}

SpinorField apply_pointwise_conj(const CMatrix& m, const SpinorField& f) {
  if (m.cols() != f.components()) throw UsageError("apply_pointwise_conj: matrix does not match components");
  SpinorField out(f.grid(), m.rows(), f.axis());
  for (std::size_t it = 0; it < f.grid().nt; ++it)
    for (std::size_t ix = 0; ix < f.grid().nx; ++ix) out.set_spinor(it, ix, m * conj(f.spinor(it, ix)));
  return out;
}

}  // namespace majolab
