#include "kdesign/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kdesign {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int k = size();
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int v : images_) {
    if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Perm: images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

std::string Perm::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out << " ";
    out << images_[static_cast<std::size_t>(i)] + 1;
  }
  out << ")";
  return out.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compose: size mismatch");
  }
  std::vector<int> img(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    img[static_cast<std::size_t>(i)] = a(b(i));
  }
  return Perm(std::move(img));
}

Perm inverse(const Perm& a) {
  std::vector<int> img(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    img[static_cast<std::size_t>(a(i))] = i;
  }
  return Perm(std::move(img));
}

int fix_count(const Perm& a) {
  int n = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) == i) ++n;
  }
  return n;
}

std::vector<Perm> all_permutations(int k) {
  if (k < 0 || k > 10) {
    throw std::invalid_argument("all_permutations: k out of range [0,10]");
  }
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<int> cycle_type(const Perm& a) {
  std::vector<bool> seen(static_cast<std::size_t>(a.size()), false);
  std::vector<int> parts;
  for (int i = 0; i < a.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = a(j);
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

int cycle_count(const Perm& a) {
  return static_cast<int>(cycle_type(a).size());
}

std::int64_t derangement(int n) {
  if (n < 0) throw std::invalid_argument("derangement: n must be >= 0");
  if (n > 20) throw std::invalid_argument("derangement: n > 20 overflows");
  if (n == 0) return 1;
  if (n == 1) return 0;
  std::int64_t prev2 = 1;  // !0
  std::int64_t prev1 = 0;  // !1
  std::int64_t cur = 0;
  for (int m = 2; m <= n; ++m) {
    cur = static_cast<std::int64_t>(m - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::int64_t two_step_perfect_fp(int k) {
  if (k < 1 || k > 10) {
    throw std::invalid_argument("two_step_perfect_fp: k out of range [1,10]");
  }
  std::int64_t sum = 0;
  std::int64_t pow2 = 1;
  for (int j = 0; j <= k; ++j) {
    sum += binomial(k, j) * derangement(k - j) * pow2;
    pow2 *= 2;
  }
  return factorial(k) * sum;
}

std::int64_t two_step_perfect_fp_brute(int k) {
  if (k < 1 || k > 6) {
    throw std::invalid_argument("two_step_perfect_fp_brute: k out of range [1,6]");
  }
  std::int64_t sum = 0;
  for (const Perm& rho : all_permutations(k)) {
    sum += std::int64_t{1} << fix_count(rho);
  }
  return factorial(k) * sum;
}

std::int64_t pairing_intersection_size(const Perm& pi, const Perm& sigma) {
  if (pi.size() != sigma.size()) {
    throw std::invalid_argument("pairing_intersection_size: size mismatch");
  }
  const int k = pi.size();
  if (k < 1 || k > 6) {
    throw std::invalid_argument("pairing_intersection_size: k out of range [1,6]");
  }

  const Perm pi_inv = inverse(pi);
  const Perm sigma_inv = inverse(sigma);

  // Pair of index r lives at positions {r, k + pi_inv(r)} in the length-2k
  // sequence; same for sigma.
  std::vector<std::array<int, 2>> m_pairs(static_cast<std::size_t>(k));
  std::vector<std::array<int, 2>> n_pairs(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    m_pairs[static_cast<std::size_t>(r)] = {r, k + pi_inv(r)};
    n_pairs[static_cast<std::size_t>(r)] = {r, k + sigma_inv(r)};
  }

  std::int64_t count = 0;
  std::vector<int> alpha(static_cast<std::size_t>(2 * k));
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    // alpha swaps the two positions of every pi-pair selected by mask.
    std::iota(alpha.begin(), alpha.end(), 0);
    for (int r = 0; r < k; ++r) {
      if (mask & (1u << r)) {
        const auto [a, b] = m_pairs[static_cast<std::size_t>(r)];
        std::swap(alpha[static_cast<std::size_t>(a)],
                  alpha[static_cast<std::size_t>(b)]);
      }
    }
    bool preserves = true;
    for (int r = 0; r < k && preserves; ++r) {
      const auto [a, b] = n_pairs[static_cast<std::size_t>(r)];
      const int ia = alpha[static_cast<std::size_t>(a)];
      const int ib = alpha[static_cast<std::size_t>(b)];
      preserves = (ia == a && ib == b) || (ia == b && ib == a);
    }
    if (preserves) ++count;
  }

  const std::int64_t closed_form =
      std::int64_t{1} << fix_count(compose(pi_inv, sigma));
  if (count != closed_form) {
    throw std::logic_error(
        "pairing_intersection_size: enumeration disagrees with 2^fix");
  }
  return count;
}

}  // namespace kdesign
