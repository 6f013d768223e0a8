#pragma once

#include <cstdint>
#include <string>

#include "kdesign/types.hpp"

namespace kdesign {

/// Dense Hermitian operator on a D-dimensional Hilbert space.
struct HermitianOperator {
  int dim = 0;
  CMatrix entries;

  /// max |H_ij - conj(H_ji)| relative to max |H_ij|.
  double hermiticity_defect() const;
};

/// Unitary change of basis between two eigenbases.
struct OverlapMatrix {
  int dim = 0;
  CMatrix entries;

  /// max |(U^dag U - 1)_ij|.
  double unitarity_defect() const;
};

enum class ModelKind { Gue, Csyk, Rspin, Flat };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

/// Parameters identifying one model draw. `size` is the matrix dimension D
/// for Gue/Flat and the site count N for Csyk/Rspin.
struct ModelSpec {
  ModelKind kind = ModelKind::Gue;
  int size = 0;
  double coupling_j = 1.0;
  double field_h = 0.0;
  Seed seed = 0;

  /// Hilbert-space dimension: D, or binomial(N, N/2) for the sector models.
  int dim() const;
  /// Throws std::invalid_argument when the parameters violate the model
  /// preconditions (even N, J > 0, h >= 0, positive dimension).
  void validate() const;
};

/// GUE draw with Wigner normalization: off-diagonal entries are complex
/// Gaussian with variance 1/D (independent real and imaginary parts of
/// variance 1/(2D) each), diagonal entries real Gaussian with variance 1/D.
/// Entry (i, j) draws from its own RNG substream, so the matrix is
/// bit-reproducible for a given seed.
HermitianOperator sample_gue(int dim, Seed seed);

/// Complex four-fermion model at half filling: the two-body interaction
/// sum_{i<j, k<l} J_{ij;kl} c+_i c+_j c_k c_l + h.c. with complex Gaussian
/// J_{ij;kl} of total variance 6 J^2 / N^3 (split evenly between real and
/// imaginary parts), built directly in the charge-N/2 sector. Basis states
/// are bitmasks of popcount N/2, sorted ascending; fermionic signs follow
/// Jordan-Wigner ordering (parity of set bits below the acted site).
HermitianOperator build_csyk(int sites, double coupling_j, Seed seed);

/// Random spin-1/2 model with all-to-all XXZ-type exchange and random
/// longitudinal fields, restricted to the zero-magnetization sector:
///   H = sum_{i<j} J_ij (Sx_i Sx_j + Sy_i Sy_j - 2 Sz_i Sz_j)
///     + sum_i h_i Sz_i,
/// J_ij ~ N(0, 4 J^2 / N), h_i ~ N(0, h^2), S = sigma / 2.
HermitianOperator build_rspin(int sites, double coupling_j, double field_h,
                              Seed seed);

/// Discrete-Fourier unitary U_mn = exp(2 pi i m n / D) / sqrt(D); every
/// squared entry equals 1/D exactly, realizing a perfectly flat overlap.
OverlapMatrix build_flat_overlap(int dim);

/// Builds the Hamiltonian described by `spec`. Flat carries no Hamiltonian
/// and throws std::invalid_argument (its overlaps come from
/// build_flat_overlap; see assemble_eigensystems).
HermitianOperator build_model(const ModelSpec& spec);

/// Half-filling sector basis: all N-bit masks of popcount N/2, ascending.
std::vector<std::uint64_t> half_filling_basis(int sites);

}  // namespace kdesign
