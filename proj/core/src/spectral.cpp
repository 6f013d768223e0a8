#include "kdesign/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kdesign {

namespace {

void fix_column_phases(CMatrix& w) {
  for (int col = 0; col < w.cols(); ++col) {
    int arg_max = 0;
    w.col(col).cwiseAbs().maxCoeff(&arg_max);
    const Complex pivot = w(arg_max, col);
    const double mag = std::abs(pivot);
    if (mag > 0) {
      w.col(col) *= std::conj(pivot) / mag;
    }
  }
}

bool detect_near_degeneracy(const RVector& values) {
  const int d = static_cast<int>(values.size());
  if (d < 2) return false;
  const double width = values(d - 1) - values(0);
  const double threshold = 1e-12 * width;
  for (int m = 0; m + 1 < d; ++m) {
    if (values(m + 1) - values(m) <= threshold) return true;
  }
  return false;
}

}  // namespace

EigenSystem eigendecompose(const HermitianOperator& h) {
  if (h.dim < 1 || h.entries.rows() != h.dim || h.entries.cols() != h.dim) {
    throw std::invalid_argument("eigendecompose: bad dimensions");
  }
  if (h.hermiticity_defect() > 1e-12) {
    throw std::domain_error("eigendecompose: input is not Hermitian");
  }

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.entries);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: solver failed to converge");
  }

  EigenSystem sys;
  sys.dim = h.dim;
  sys.eigenvalues = solver.eigenvalues();
  sys.eigenvectors = solver.eigenvectors();
  fix_column_phases(sys.eigenvectors);
  sys.near_degenerate = detect_near_degeneracy(sys.eigenvalues);
  return sys;
}

EigenSystem eigensystem_from_parts(RVector eigenvalues, CMatrix eigenvectors) {
  const int d = static_cast<int>(eigenvalues.size());
  if (d < 1 || eigenvectors.rows() != d || eigenvectors.cols() != d) {
    throw std::invalid_argument("eigensystem_from_parts: shape mismatch");
  }
  for (int m = 0; m + 1 < d; ++m) {
    if (eigenvalues(m) > eigenvalues(m + 1)) {
      throw std::invalid_argument(
          "eigensystem_from_parts: eigenvalues must ascend");
    }
  }
  const double defect = (eigenvectors.adjoint() * eigenvectors -
                         CMatrix::Identity(d, d))
                            .cwiseAbs()
                            .maxCoeff();
  if (defect > 1e-10) {
    throw std::invalid_argument("eigensystem_from_parts: basis is not unitary");
  }

  EigenSystem sys;
  sys.dim = d;
  sys.near_degenerate = detect_near_degeneracy(eigenvalues);
  sys.eigenvalues = std::move(eigenvalues);
  sys.eigenvectors = std::move(eigenvectors);
  return sys;
}

OverlapMatrix overlap(const EigenSystem& a, const EigenSystem& b) {
  if (a.dim != b.dim) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  CMatrix u = a.eigenvectors.adjoint() * b.eigenvectors;
  return OverlapMatrix{a.dim, std::move(u)};
}

double ipr(const OverlapMatrix& u) {
  return u.entries.cwiseAbs2().cwiseAbs2().sum();
}

}  // namespace kdesign
