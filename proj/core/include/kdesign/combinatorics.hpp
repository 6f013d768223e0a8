#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kdesign {

/// Permutation of {0..k-1} in one-line notation (0-based internally;
/// display uses 1-based images).
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int k);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Perm& other) const = default;

  /// 1-based one-line notation, e.g. "(2 1 3)".
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
int fix_count(const Perm& a);

/// All k! permutations of {0..k-1} in lexicographic order.
std::vector<Perm> all_permutations(int k);

/// Cycle type as a partition of k, parts sorted descending.
std::vector<int> cycle_type(const Perm& a);
int cycle_count(const Perm& a);

/// Derangement number !n (n >= 0), exact integer arithmetic.
std::int64_t derangement(int n);

std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);

/// Large-D perfect-filter frame potential of the two-step protocol with a
/// Haar-random overlap: k! * sum_j C(k,j) * !(k-j) * 2^j. Exact integers,
/// capped at k = 10. Cross-checked against k! * sum over S_k of 2^fix by
/// two_step_perfect_fp_brute.
std::int64_t two_step_perfect_fp(int k);

/// Brute enumeration k! * sum_{rho in S_k} 2^fix(rho); k <= 6 cost guard.
std::int64_t two_step_perfect_fp_brute(int k);

/// Size of the intersection of the two pair-preserving subgroups of S_{2k}
/// induced by pi and sigma, counted by enumerating all 2^k swap patterns of
/// the pi-pairs {r, k + pi^{-1}(r)} and testing them against the sigma-pairs.
/// The result is checked against the closed form 2^fix(pi^{-1} sigma);
/// k <= 6 cost guard.
std::int64_t pairing_intersection_size(const Perm& pi, const Perm& sigma);

}  // namespace kdesign
