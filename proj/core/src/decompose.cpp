#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detail.hpp"
#include "qdouble/algebra.hpp"

namespace qdouble {

using detail::mix_seed;
using detail::phase_c;
using detail::sup_abs;

Decomposition decompose(const TwistedAlgebra& a, std::uint64_t seed) {
  const int center = a.center_dimension();
  const AlgebraRep reg = regular_representation(a);
  const int dim = a.dim();

  // Right multiplications span the commutant of the left regular module;
  // by the star identity <g>* = theta(g, g^-1)^-1 <g^-1>, the adjoint of a
  // right multiplication is again one, so X + X^dagger stays inside it.
  std::vector<Eigen::MatrixXcd> right(dim, Eigen::MatrixXcd::Zero(dim, dim));
  for (int g = 0; g < dim; ++g) {
    for (int m = 0; m < dim; ++m) {
      if (const auto p = a.product(m, g)) {
        right[g](p->first, m) = phase_c(p->second);
      }
    }
  }

  const std::vector<int> autos = a.base().automorphisms();
  std::string last_failure = "no attempt made";
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(mix_seed(seed, attempt));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
    for (int g = 0; g < dim; ++g) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      x += std::complex<double>(re, im) * right[g];
    }
    const Eigen::MatrixXcd h = x + x.adjoint();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) {
      last_failure = "eigensolver failed";
      continue;
    }
    const Eigen::VectorXd ev = es.eigenvalues();
    const Eigen::MatrixXcd q = es.eigenvectors();

    // Cluster eigenvalues: gaps below the 1e-8 floor count as degenerate;
    // gaps that clear the floor but stay below 1e-6 are too close to call
    // and force a redraw.
    bool ambiguous = false;
    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int i = 1; i <= dim; ++i) {
      const double gap = i == dim ? 1.0 : ev(i) - ev(i - 1);
      if (i == dim || gap >= 1e-8) {
        clusters.emplace_back(begin, i);
        begin = i;
        if (i < dim && gap < 1e-6) ambiguous = true;
      }
    }
    if (ambiguous) {
      last_failure = "ambiguous eigenvalue gap";
      continue;
    }

    // Each eigenspace of a commutant element is a left submodule; compress
    // the action onto it and verify invariance.
    struct Block {
      int size;
      std::vector<Eigen::MatrixXcd> mats;
      std::vector<std::int64_t> key;  // quantized trace vector
    };
    std::vector<Block> blocks;
    bool bad = false;
    for (const auto& [lo, hi] : clusters) {
      const int k = hi - lo;
      const Eigen::MatrixXcd basis = q.middleCols(lo, k);
      Block blk{k, {}, {}};
      blk.mats.reserve(dim);
      for (int g = 0; g < dim; ++g) {
        const Eigen::MatrixXcd image = reg.mat[g] * basis;
        const Eigen::MatrixXcd compressed = basis.adjoint() * image;
        if (sup_abs(image - basis * compressed) > 1e-8) {
          bad = true;
          break;
        }
        const std::complex<double> t = compressed.trace();
        blk.key.push_back(std::llround(t.real() * 1e6));
        blk.key.push_back(std::llround(t.imag() * 1e6));
        blk.mats.push_back(std::move(compressed));
      }
      if (bad) break;
      blocks.push_back(std::move(blk));
    }
    if (bad) {
      last_failure = "eigenspace is not invariant";
      continue;
    }

    // Group blocks into isotypic classes by their trace vectors (quantized
    // at 1e-6).
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      bool placed = false;
      for (auto& members : classes) {
        const Block& first = blocks[members.front()];
        if (first.size != blocks[i].size) continue;
        std::int64_t diff = 0;
        for (std::size_t t = 0; t < first.key.size(); ++t) {
          diff = std::max(diff, std::abs(first.key[t] - blocks[i].key[t]));
        }
        if (diff <= 2) {
          members.push_back(static_cast<int>(i));
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({static_cast<int>(i)});
    }

    bool invariants_ok = static_cast<int>(classes.size()) == center;
    int square_sum = 0;
    for (const auto& members : classes) {
      const int d = blocks[members.front()].size;
      square_sum += d * d;
      if (static_cast<int>(members.size()) != d) invariants_ok = false;
    }
    if (square_sum != dim) invariants_ok = false;
    if (!invariants_ok) {
      last_failure = "isotypic invariants failed (classes " +
                     std::to_string(classes.size()) + ", center " +
                     std::to_string(center) + ")";
      continue;
    }

    std::vector<AlgebraRep> irreps;
    irreps.reserve(classes.size());
    bool rep_ok = true;
    for (const auto& members : classes) {
      Block& blk = blocks[members.front()];
      AlgebraRep r{&a, blk.size, std::move(blk.mats)};
      try {
        r.validate(1e-9);
      } catch (const std::logic_error&) {
        rep_ok = false;
        break;
      }
      irreps.push_back(std::move(r));
    }
    if (!rep_ok) {
      last_failure = "compressed block violates the product law";
      continue;
    }

    // Sort by dimension, then by the quantized character vector over the
    // automorphisms (ascending ids).
    std::vector<std::vector<std::int64_t>> sort_key(irreps.size());
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      sort_key[i].push_back(irreps[i].dim);
      for (int g : autos) {
        const std::complex<double> t = irreps[i].mat[g].trace();
        sort_key[i].push_back(std::llround(t.real() * 1e6));
        sort_key[i].push_back(std::llround(t.imag() * 1e6));
      }
    }
    std::vector<int> order(irreps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return sort_key[l] < sort_key[r]; });

    Decomposition out{{}, {}, center};
    for (int i : order) {
      out.multiplicities.push_back(irreps[i].dim);
      out.irreps.push_back(std::move(irreps[i]));
    }
    return out;
  }
  throw std::runtime_error("decompose: no clean split after 8 draws (" +
                           last_failure + ")");
}

}  // namespace qdouble
