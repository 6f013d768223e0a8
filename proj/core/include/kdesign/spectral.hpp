#pragma once

#include "kdesign/hamiltonians.hpp"
#include "kdesign/types.hpp"

namespace kdesign {

/// Sorted eigendecomposition H = W diag(E) W^dag. Column m of `eigenvectors`
/// is the eigenvector of eigenvalue m; eigenvalues ascend. Column phases are
/// fixed so the largest-magnitude component of each column is real positive,
/// making the output deterministic.
struct EigenSystem {
  int dim = 0;
  RVector eigenvalues;
  CMatrix eigenvectors;
  /// Smallest adjacent gap fell below 1e-12 * spectral width. The perfect
  /// filter reasoning assumes nondegenerate spectra; downstream phase-ensemble
  /// estimators refuse such systems.
  bool near_degenerate = false;

  double spectral_width() const {
    return dim > 0 ? eigenvalues(dim - 1) - eigenvalues(0) : 0.0;
  }
};

/// Dense Hermitian diagonalization. Throws std::domain_error when the input
/// violates the Hermiticity contract.
EigenSystem eigendecompose(const HermitianOperator& h);

/// Assembles an EigenSystem from given eigenvalues and a given unitary,
/// validating the invariants (sorted values, unitary columns). Used to embed
/// synthetic spectra with a prescribed overlap structure.
EigenSystem eigensystem_from_parts(RVector eigenvalues, CMatrix eigenvectors);

/// Overlap U = W_A^dag W_B between two eigenbases of equal dimension.
OverlapMatrix overlap(const EigenSystem& a, const EigenSystem& b);

/// Inverse participation ratio sum_{m,n} |U_mn|^4; lies in [1, D].
double ipr(const OverlapMatrix& u);

}  // namespace kdesign
