#ifndef GLAB_REPRESENTATION_HPP
#define GLAB_REPRESENTATION_HPP

#include <Eigen/Dense>
#include <vector>

#include "glab/arrow_function.hpp"

namespace glab {

/// Matrix of the regular representation π_x(f) on ℓ²(G_x) for one unit x.
/// Over the basis G_x the entry at (γ, γ′) is f(γ∘γ′⁻¹); the product is
/// always defined since both arrows have source x.
struct RepBlock {
  int unit = -1;
  std::vector<int> basis;  // G_x in canonical order
  Eigen::MatrixXcd matrix;
};

inline RepBlock rep_block(const ArrowFunction& f, int x) {
  const FiniteGroupoid& G = *f.G;
  if (!G.is_unit(x)) throw std::invalid_argument("rep_block: not a unit arrow");
  RepBlock blk;
  blk.unit = x;
  blk.basis = G.source_fiber(x);
  const int d = static_cast<int>(blk.basis.size());
  blk.matrix.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      blk.matrix(i, j) = f.coeffs(G.compose(blk.basis[i], G.inverse(blk.basis[j])));
  return blk;
}

inline std::vector<RepBlock> rep_blocks(const ArrowFunction& f) {
  std::vector<RepBlock> out;
  out.reserve(f.G->units().size());
  for (int x : f.G->units()) out.push_back(rep_block(f, x));
  return out;
}

/// Largest singular value, from an eigensolve of A†A.
inline double spectral_norm(const Eigen::MatrixXcd& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.adjoint() * A);
  const double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, top));
}

/// Reduced norm: the maximum over units of the operator norm of π_x(f).
inline double reduced_norm(const ArrowFunction& f) {
  double m = 0.0;
  for (int x : f.G->units()) m = std::max(m, spectral_norm(rep_block(f, x).matrix));
  return m;
}

/// Evaluation map read off the representation family: the coefficient at g
/// is the (g, s(g)) entry of the block at s(g). Inverse to rep_blocks on
/// the nose in the finite case.
inline ArrowFunction fourier_coefficients(GroupoidPtr G, const std::vector<RepBlock>& blocks,
                                          double consistency_tol = 1e-12) {
  if (blocks.size() != G->units().size())
    throw std::invalid_argument("fourier_coefficients: one block per unit required");
  std::vector<const RepBlock*> by_unit(G->size(), nullptr);
  for (const auto& b : blocks) {
    if (!G->is_unit(b.unit) || by_unit[b.unit])
      throw std::invalid_argument("fourier_coefficients: malformed block family");
    by_unit[b.unit] = &b;
  }
  ArrowFunction f(G);
  for (int g = 0; g < G->size(); ++g) {
    const int x = G->source(g);
    const RepBlock& b = *by_unit[x];
    const auto& fiber = G->source_fiber(x);
    int row = -1, col = -1;
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      if (fiber[i] == g) row = static_cast<int>(i);
      if (fiber[i] == x) col = static_cast<int>(i);
    }
    f.coeffs(g) = b.matrix(row, col);
  }
  // The family must actually come from one algebra element.
  for (const auto& b : blocks) {
    RepBlock again = rep_block(f, b.unit);
    if (b.matrix.rows() != again.matrix.rows() || b.matrix.cols() != again.matrix.cols() ||
        (b.matrix - again.matrix).cwiseAbs().maxCoeff() > consistency_tol)
      throw std::invalid_argument("fourier_coefficients: inconsistent blocks");
  }
  return f;
}

}  // namespace glab

#endif  // GLAB_REPRESENTATION_HPP
