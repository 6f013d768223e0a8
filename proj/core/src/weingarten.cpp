#include "kdesign/weingarten.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "kdesign/combinatorics.hpp"

namespace kdesign {

namespace {

using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

long double ld_pow(long double base, int e) {
  long double r = 1.0L;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_order_dim(int p, int d) {
  if (p < 1 || p > 4) {
    throw std::invalid_argument("weingarten: order p out of range [1,4]");
  }
  if (d < p) {
    throw std::invalid_argument(
        "weingarten: D < p makes the Gram matrix singular");
  }
}

/// Distinct cycle types of S_p with one representative index and class size.
struct ClassTable {
  std::vector<Perm> perms;
  std::vector<std::vector<int>> types;     // cycle type per class
  std::vector<int> class_of;               // perm index -> class index
  std::vector<int> class_size;

  explicit ClassTable(int p) : perms(all_permutations(p)) {
    class_of.resize(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const auto type = cycle_type(perms[i]);
      int idx = -1;
      for (std::size_t c = 0; c < types.size(); ++c) {
        if (types[c] == type) {
          idx = static_cast<int>(c);
          break;
        }
      }
      if (idx < 0) {
        idx = static_cast<int>(types.size());
        types.push_back(type);
        class_size.push_back(0);
      }
      class_of[i] = idx;
      ++class_size[static_cast<std::size_t>(idx)];
    }
  }
};

}  // namespace

double WeingartenTable::value(const std::vector<int>& cycle_type_key) const {
  const auto it = values.find(cycle_type_key);
  if (it == values.end()) {
    throw std::invalid_argument("WeingartenTable: unknown cycle type");
  }
  return static_cast<double>(it->second);
}

LMatrix gram_matrix(int p, int d) {
  check_order_dim(p, d);
  const auto perms = all_permutations(p);
  const int n = static_cast<int>(perms.size());
  LMatrix g(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Perm rel = compose(perms[static_cast<std::size_t>(a)],
                               inverse(perms[static_cast<std::size_t>(b)]));
      g(a, b) = ld_pow(static_cast<long double>(d), cycle_count(rel));
    }
  }
  return g;
}

WeingartenTable weingarten_table(int p, int d) {
  check_order_dim(p, d);
  const ClassTable classes(p);
  const int nc = static_cast<int>(classes.types.size());

  // Class-collapsed system: for a representative sigma_c of each class c,
  //   sum_{c'} [ sum_{tau in c'} D^{#cycles(sigma_c tau^{-1})} ] Wg_{c'}
  //     = delta_{c, identity-class}.
  LMatrix m = LMatrix::Zero(nc, nc);
  LVector rhs = LVector::Zero(nc);
  std::vector<int> rep(static_cast<std::size_t>(nc), -1);
  for (std::size_t i = 0; i < classes.perms.size(); ++i) {
    const int c = classes.class_of[i];
    if (rep[static_cast<std::size_t>(c)] < 0) rep[static_cast<std::size_t>(c)] = static_cast<int>(i);
  }
  for (int c = 0; c < nc; ++c) {
    const Perm& sigma = classes.perms[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)])];
    for (std::size_t t = 0; t < classes.perms.size(); ++t) {
      const Perm rel = compose(sigma, inverse(classes.perms[t]));
      m(c, classes.class_of[t]) +=
          ld_pow(static_cast<long double>(d), cycle_count(rel));
    }
    rhs(c) = (fix_count(sigma) == p) ? 1.0L : 0.0L;
  }

  Eigen::FullPivLU<LMatrix> lu(m);
  if (!lu.isInvertible()) {
    throw std::runtime_error("weingarten_table: class system is singular");
  }
  const LVector wg = lu.solve(rhs);

  WeingartenTable table;
  table.order = p;
  table.dim = d;
  for (int c = 0; c < nc; ++c) {
    table.values[classes.types[static_cast<std::size_t>(c)]] = wg(c);
  }

  // Condition estimate from the full Gram spectrum (symmetric positive
  // definite for D >= p).
  const LMatrix g = gram_matrix(p, d);
  Eigen::SelfAdjointEigenSolver<LMatrix> es(g);
  const long double lmin = es.eigenvalues()(0);
  const long double lmax = es.eigenvalues()(es.eigenvalues().size() - 1);
  table.rcond = (lmax > 0) ? static_cast<double>(lmin / lmax) : 0.0;

  if (p <= 3) {
    // Definitional cross-check: entries of the full p! x p! inverse must be
    // constant on classes and agree with the collapsed solution.
    Eigen::FullPivLU<LMatrix> glu(g);
    const LMatrix ginv = glu.inverse();
    const auto& perms = classes.perms;
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        const Perm rel = compose(perms[a], inverse(perms[b]));
        const long double expected = table.values.at(cycle_type(rel));
        const long double got = ginv(static_cast<int>(a), static_cast<int>(b));
        const long double tol = 1e-10L * fabsl(expected) + 1e-18L;
        if (fabsl(got - expected) > tol) {
          throw std::runtime_error(
              "weingarten_table: full inverse disagrees with class solve");
        }
      }
    }
  }
  return table;
}

CMatrix haar_sample(int dim, Philox& rng) {
  if (dim < 1) throw std::invalid_argument("haar_sample: dimension must be >= 1");
  CMatrix ginibre(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ginibre(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(ginibre);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0) q.col(j) *= rjj / mag;
  }
  return q;
}

Complex haar_monomial_prediction(int dim, const std::vector<int>& i,
                                 const std::vector<int>& j,
                                 const std::vector<int>& i_prime,
                                 const std::vector<int>& j_prime) {
  if (i.size() != j.size() || i_prime.size() != j_prime.size()) {
    throw std::invalid_argument("haar_monomial: index tuple shape mismatch");
  }
  if (i.size() != i_prime.size()) {
    return Complex(0.0, 0.0);  // unequal numbers of U and U* factors
  }
  const int p = static_cast<int>(i.size());
  if (p == 0) return Complex(1.0, 0.0);
  if (p > 3) throw std::invalid_argument("haar_monomial: p <= 3 supported");

  const WeingartenTable table = weingarten_table(p, dim);
  const auto perms = all_permutations(p);
  long double total = 0.0L;
  for (const Perm& sigma : perms) {
    bool match_i = true;
    for (int s = 0; s < p && match_i; ++s) {
      match_i = i[static_cast<std::size_t>(sigma(s))] ==
                i_prime[static_cast<std::size_t>(s)];
    }
    if (!match_i) continue;
    for (const Perm& tau : perms) {
      bool match_j = true;
      for (int s = 0; s < p && match_j; ++s) {
        match_j = j[static_cast<std::size_t>(tau(s))] ==
                  j_prime[static_cast<std::size_t>(s)];
      }
      if (!match_j) continue;
      total += table.values.at(cycle_type(compose(sigma, inverse(tau))));
    }
  }
  return Complex(static_cast<double>(total), 0.0);
}

MonomialCheck verify_haar_monomial(int dim, const std::vector<int>& i,
                                   const std::vector<int>& j,
                                   const std::vector<int>& i_prime,
                                   const std::vector<int>& j_prime,
                                   long samples, Seed seed) {
  if (dim < 1 || dim > 64) {
    throw std::invalid_argument("verify_haar_monomial: dim out of range [1,64]");
  }
  if (samples < 2) {
    throw std::invalid_argument("verify_haar_monomial: need >= 2 samples");
  }
  for (const auto* tuple : {&i, &j, &i_prime, &j_prime}) {
    for (int idx : *tuple) {
      if (idx < 0 || idx >= dim) {
        throw std::invalid_argument("verify_haar_monomial: index out of range");
      }
    }
  }

  Philox rng(seed, stream_tag::kHaarGinibre);
  Complex sum(0.0, 0.0);
  double sum_sq = 0.0;  // of |value|^2, for a scalar spread estimate
  Complex sum_re2_im2(0.0, 0.0);
  for (long s = 0; s < samples; ++s) {
    const CMatrix u = haar_sample(dim, rng);
    Complex value(1.0, 0.0);
    for (std::size_t r = 0; r < i.size(); ++r) {
      value *= u(i[r], j[r]);
    }
    for (std::size_t r = 0; r < i_prime.size(); ++r) {
      value *= std::conj(u(i_prime[r], j_prime[r]));
    }
    sum += value;
    sum_sq += std::norm(value);
    sum_re2_im2 += Complex(value.real() * value.real(),
                           value.imag() * value.imag());
  }

  MonomialCheck check;
  check.samples = samples;
  check.mc_mean = sum / static_cast<double>(samples);
  const double var_re =
      (sum_re2_im2.real() / samples - check.mc_mean.real() * check.mc_mean.real());
  const double var_im =
      (sum_re2_im2.imag() / samples - check.mc_mean.imag() * check.mc_mean.imag());
  const double se =
      std::sqrt(std::max(var_re + var_im, 0.0) / static_cast<double>(samples));
  check.mc_stderr = se;
  check.predicted = haar_monomial_prediction(dim, i, j, i_prime, j_prime);
  check.z_score = se > 0 ? std::abs(check.mc_mean - check.predicted) / se : 0.0;
  return check;
}

}  // namespace kdesign
