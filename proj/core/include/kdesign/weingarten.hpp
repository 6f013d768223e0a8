#pragma once

#include <map>
#include <vector>

#include "kdesign/rng.hpp"
#include "kdesign/types.hpp"

namespace kdesign {

/// Weingarten values at order p and dimension D, keyed by the cycle type
/// (partition of p) of sigma tau^{-1}. Computed with 80-bit extended
/// arithmetic; the p = 1 entry is 1/D exactly.
struct WeingartenTable {
  int order = 0;
  int dim = 0;
  std::map<std::vector<int>, long double> values;
  /// Reciprocal condition number of the inverted Gram system; small values
  /// (D barely >= p) mean the table is numerically delicate.
  double rcond = 1.0;

  double value(const std::vector<int>& cycle_type_key) const;
  bool ill_conditioned() const { return rcond < 1e-10; }
};

/// Gram matrix G_{sigma,tau} = D^{#cycles(sigma tau^{-1})} over S_p in
/// lexicographic permutation order; p! x p!, symmetric positive definite for
/// D >= p. Throws for D < p (singular).
Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> gram_matrix(int p,
                                                                       int d);

/// Inverts the Gram system to obtain the Weingarten table. Solves the
/// class-collapsed system (partitions of p as basis) and, for p <= 3,
/// cross-checks it against the full p! x p! inverse.
WeingartenTable weingarten_table(int p, int d);

/// Haar-random unitary: complex Ginibre draw orthonormalized by QR with the
/// diagonal phase correction that makes the distribution exactly invariant.
CMatrix haar_sample(int dim, Philox& rng);

/// Monte Carlo check of the Haar moment formula for one matrix-entry
/// monomial: mean of prod_r U_{i_r j_r} * prod_r conj(U_{i'_r j'_r}) against
/// the Weingarten prediction sum_{sigma,tau} d_sigma(i,i') d_tau(j,j')
/// Wg([sigma tau^{-1}]). Unequal factor counts predict zero.
struct MonomialCheck {
  Complex mc_mean;
  double mc_stderr = 0.0;
  Complex predicted;
  double z_score = 0.0;
  long samples = 0;
};

MonomialCheck verify_haar_monomial(int dim, const std::vector<int>& i,
                                   const std::vector<int>& j,
                                   const std::vector<int>& i_prime,
                                   const std::vector<int>& j_prime,
                                   long samples, Seed seed);

/// Weingarten prediction for the monomial above (no sampling).
Complex haar_monomial_prediction(int dim, const std::vector<int>& i,
                                 const std::vector<int>& j,
                                 const std::vector<int>& i_prime,
                                 const std::vector<int>& j_prime);

}  // namespace kdesign
