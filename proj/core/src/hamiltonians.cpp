#include "kdesign/hamiltonians.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "kdesign/combinatorics.hpp"
#include "kdesign/rng.hpp"

namespace kdesign {

double HermitianOperator::hermiticity_defect() const {
  const double scale = entries.cwiseAbs().maxCoeff();
  const double defect = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  return scale > 0 ? defect / scale : defect;
}

double OverlapMatrix::unitarity_defect() const {
  return (entries.adjoint() * entries -
          CMatrix::Identity(entries.rows(), entries.cols()))
      .cwiseAbs()
      .maxCoeff();
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Gue: return "gue";
    case ModelKind::Csyk: return "csyk";
    case ModelKind::Rspin: return "rspin";
    case ModelKind::Flat: return "flat";
  }
  throw std::logic_error("to_string: bad ModelKind");
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "gue") return ModelKind::Gue;
  if (name == "csyk") return ModelKind::Csyk;
  if (name == "rspin") return ModelKind::Rspin;
  if (name == "flat") return ModelKind::Flat;
  throw std::invalid_argument("unknown model kind: " + name);
}

int ModelSpec::dim() const {
  switch (kind) {
    case ModelKind::Gue:
    case ModelKind::Flat:
      return size;
    case ModelKind::Csyk:
    case ModelKind::Rspin:
      return static_cast<int>(binomial(size, size / 2));
  }
  throw std::logic_error("ModelSpec::dim: bad kind");
}

void ModelSpec::validate() const {
  if (kind == ModelKind::Gue || kind == ModelKind::Flat) {
    if (size < 1) throw std::invalid_argument("model: dimension must be >= 1");
    return;
  }
  if (size < 4 || size % 2 != 0) {
    throw std::invalid_argument(
        "model: sector models need even N >= 4 (half filling)");
  }
  if (coupling_j <= 0) throw std::invalid_argument("model: J must be > 0");
  if (field_h < 0) throw std::invalid_argument("model: h must be >= 0");
}

HermitianOperator sample_gue(int dim, Seed seed) {
  if (dim < 1) throw std::invalid_argument("sample_gue: dimension must be >= 1");
  const double off_sigma = 1.0 / std::sqrt(2.0 * dim);
  const double diag_sigma = 1.0 / std::sqrt(static_cast<double>(dim));

  Philox base(seed, stream_tag::kGueEntries);
  CMatrix h(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      Philox entry = base.substream(static_cast<std::uint64_t>(i) * dim + j);
      if (i == j) {
        h(i, i) = Complex(diag_sigma * entry.next_gaussian(), 0.0);
      } else {
        const double re = off_sigma * entry.next_gaussian();
        const double im = off_sigma * entry.next_gaussian();
        h(i, j) = Complex(re, im);
        h(j, i) = Complex(re, -im);
      }
    }
  }
  return HermitianOperator{dim, std::move(h)};
}

std::vector<std::uint64_t> half_filling_basis(int sites) {
  if (sites < 2 || sites % 2 != 0 || sites > 20) {
    throw std::invalid_argument("half_filling_basis: need even N in [2,20]");
  }
  std::vector<std::uint64_t> basis;
  basis.reserve(static_cast<std::size_t>(binomial(sites, sites / 2)));
  const std::uint64_t top = std::uint64_t{1} << sites;
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (std::popcount(mask) == sites / 2) basis.push_back(mask);
  }
  return basis;
}

namespace {

/// Parity of occupied sites strictly below `site` (Jordan-Wigner string).
inline int jw_sign(std::uint64_t mask, int site) {
  const std::uint64_t below = mask & ((std::uint64_t{1} << site) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

struct SectorIndex {
  std::vector<std::uint64_t> states;
  std::vector<int> index_of;  // 2^N entries, -1 outside the sector

  explicit SectorIndex(int sites) : states(half_filling_basis(sites)) {
    index_of.assign(std::size_t{1} << sites, -1);
    for (std::size_t i = 0; i < states.size(); ++i) {
      index_of[states[i]] = static_cast<int>(i);
    }
  }
};

}  // namespace

HermitianOperator build_csyk(int sites, double coupling_j, Seed seed) {
  if (sites % 2 != 0) {
    throw std::invalid_argument("build_csyk: odd N has no half-filling sector");
  }
  if (sites < 4) {
    throw std::invalid_argument("build_csyk: need N >= 4");
  }

  const SectorIndex sector(sites);
  const int dim = static_cast<int>(sector.states.size());
  const double n3 = static_cast<double>(sites) * sites * sites;
  // Total variance 6 J^2 / N^3, split evenly between real and imaginary parts.
  const double part_sigma = std::sqrt(3.0 * coupling_j * coupling_j / n3);

  CMatrix a = CMatrix::Zero(dim, dim);
  Philox base(seed, stream_tag::kCsykCouplings);
  std::uint64_t coupling_id = 0;
  for (int i = 0; i < sites; ++i) {
    for (int j = i + 1; j < sites; ++j) {
      for (int k = 0; k < sites; ++k) {
        for (int l = k + 1; l < sites; ++l) {
          Philox cpl = base.substream(coupling_id++);
          const Complex amp(part_sigma * cpl.next_gaussian(),
                            part_sigma * cpl.next_gaussian());
          // c+_i c+_j c_k c_l applied right to left on every sector state.
          for (int col = 0; col < dim; ++col) {
            std::uint64_t s = sector.states[static_cast<std::size_t>(col)];
            if (!(s & (std::uint64_t{1} << l))) continue;
            int sign = jw_sign(s, l);
            s &= ~(std::uint64_t{1} << l);
            if (!(s & (std::uint64_t{1} << k))) continue;
            sign *= jw_sign(s, k);
            s &= ~(std::uint64_t{1} << k);
            if (s & (std::uint64_t{1} << j)) continue;
            sign *= jw_sign(s, j);
            s |= std::uint64_t{1} << j;
            if (s & (std::uint64_t{1} << i)) continue;
            sign *= jw_sign(s, i);
            s |= std::uint64_t{1} << i;
            const int row = sector.index_of[s];
            a(row, col) += static_cast<double>(sign) * amp;
          }
        }
      }
    }
  }

  CMatrix h = a + a.adjoint();
  return HermitianOperator{dim, std::move(h)};
}

HermitianOperator build_rspin(int sites, double coupling_j, double field_h,
                              Seed seed) {
  if (sites % 2 != 0) {
    throw std::invalid_argument("build_rspin: odd N has no zero-Sz sector");
  }
  if (sites < 4) {
    throw std::invalid_argument("build_rspin: need N >= 4");
  }
  if (field_h < 0) {
    throw std::invalid_argument("build_rspin: h must be >= 0");
  }

  const SectorIndex sector(sites);
  const int dim = static_cast<int>(sector.states.size());

  // Couplings keep their stream identity even when J or h is zero.
  const double j_sigma = 2.0 * coupling_j / std::sqrt(static_cast<double>(sites));
  std::vector<double> exchange(static_cast<std::size_t>(sites) * sites, 0.0);
  Philox jbase(seed, stream_tag::kRspinExchange);
  for (int i = 0; i < sites; ++i) {
    for (int j = i + 1; j < sites; ++j) {
      Philox cpl = jbase.substream(static_cast<std::uint64_t>(i) * sites + j);
      exchange[static_cast<std::size_t>(i) * sites + j] =
          j_sigma * cpl.next_gaussian();
    }
  }
  std::vector<double> field(static_cast<std::size_t>(sites), 0.0);
  Philox hbase(seed, stream_tag::kRspinField);
  for (int i = 0; i < sites; ++i) {
    Philox cpl = hbase.substream(static_cast<std::uint64_t>(i));
    field[static_cast<std::size_t>(i)] = field_h * cpl.next_gaussian();
  }

  CMatrix h = CMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::uint64_t s = sector.states[static_cast<std::size_t>(col)];
    double diag = 0.0;
    for (int i = 0; i < sites; ++i) {
      const double zi = (s & (std::uint64_t{1} << i)) ? 0.5 : -0.5;
      diag += field[static_cast<std::size_t>(i)] * zi;
      for (int j = i + 1; j < sites; ++j) {
        const double zj = (s & (std::uint64_t{1} << j)) ? 0.5 : -0.5;
        const double jij = exchange[static_cast<std::size_t>(i) * sites + j];
        diag += jij * (-2.0) * zi * zj;
        // Flip-flop (Sx Sx + Sy Sy) connects opposite spins at i, j with
        // matrix element J_ij / 2.
        const bool bi = s & (std::uint64_t{1} << i);
        const bool bj = s & (std::uint64_t{1} << j);
        if (bi != bj) {
          const std::uint64_t flipped =
              s ^ (std::uint64_t{1} << i) ^ (std::uint64_t{1} << j);
          h(sector.index_of[flipped], col) += 0.5 * jij;
        }
      }
    }
    h(col, col) += diag;
  }
  return HermitianOperator{dim, std::move(h)};
}

OverlapMatrix build_flat_overlap(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("build_flat_overlap: dimension must be >= 1");
  }
  CMatrix u(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const double phase = 2.0 * std::numbers::pi *
                           static_cast<double>((static_cast<std::int64_t>(m) * n) % dim) /
                           static_cast<double>(dim);
      u(m, n) = norm * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return OverlapMatrix{dim, std::move(u)};
}

HermitianOperator build_model(const ModelSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ModelKind::Gue:
      return sample_gue(spec.size, spec.seed);
    case ModelKind::Csyk:
      return build_csyk(spec.size, spec.coupling_j, spec.seed);
    case ModelKind::Rspin:
      return build_rspin(spec.size, spec.coupling_j, spec.field_h, spec.seed);
    case ModelKind::Flat:
      throw std::invalid_argument(
          "build_model: flat model has no Hamiltonian; it supplies overlaps");
  }
  throw std::logic_error("build_model: bad kind");
}

}  // namespace kdesign
