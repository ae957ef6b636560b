#pragma once

#include <Eigen/Dense>

#include "majolab/matcore.hpp"

namespace majolab::detail {

inline Eigen::MatrixXcd to_eigen(const CMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  return m;
}

inline CMatrix from_eigen(const Eigen::MatrixXcd& m) {
  CMatrix a(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) a(r, c) = m(r, c);
  return a;
}

}  // namespace majolab::detail
