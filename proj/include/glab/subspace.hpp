#ifndef GLAB_SUBSPACE_HPP
#define GLAB_SUBSPACE_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <vector>

#include "glab/arrow_function.hpp"

namespace glab {

enum class SubspaceKind { Plain, Algebra, Bimodule };

/// Orthonormal basis of a linear subspace of functions on arrows. Rows of
/// `vectors` are the basis elements in coordinate order.
struct SubspaceBasis {
  GroupoidPtr G;
  Eigen::MatrixXcd vectors;  // rank x n_arrows, orthonormal rows
  double tol = 1e-8;
  SubspaceKind kind = SubspaceKind::Plain;

  int rank() const { return static_cast<int>(vectors.rows()); }

  ArrowFunction basis_function(int i) const { return {G, vectors.row(i).transpose()}; }
};

/// Orthonormal row basis of the row space of M, with rank decided by a
/// relative singular value threshold.
inline Eigen::MatrixXcd orthonormal_rows(const Eigen::MatrixXcd& M, double rel_tol) {
  if (M.rows() == 0) return Eigen::MatrixXcd(0, M.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? sv(0) * rel_tol : 0.0;
  int r = 0;
  while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
  return svd.matrixV().leftCols(r).adjoint();
}

inline SubspaceBasis span_of(GroupoidPtr G, const std::vector<ArrowFunction>& gens,
                             double rel_tol = 1e-8, SubspaceKind kind = SubspaceKind::Plain) {
  Eigen::MatrixXcd M(gens.size(), G->size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i].G == G || gens[i].G->same_tables(*G)))
      throw std::invalid_argument("span_of: groupoid mismatch");
    M.row(i) = gens[i].coeffs.transpose();
  }
  return SubspaceBasis{std::move(G), orthonormal_rows(M, rel_tol), rel_tol, kind};
}

inline ArrowFunction project(const SubspaceBasis& S, const ArrowFunction& f) {
  Eigen::VectorXcd c = S.vectors.conjugate() * f.coeffs;  // <b_i, f>
  return {f.G, S.vectors.transpose() * c};
}

/// Distance from f to the subspace (Euclidean residual of the projection).
inline double residual(const SubspaceBasis& S, const ArrowFunction& f) {
  return (f.coeffs - project(S, f).coeffs).norm();
}

inline bool contains(const SubspaceBasis& S, const ArrowFunction& f, double tol) {
  return residual(S, f) <= tol;
}

/// Largest one-sided projection residual between two subspaces; zero iff
/// they agree as subspaces (up to tol).
inline double subspace_residual(const SubspaceBasis& A, const SubspaceBasis& B) {
  double worst = 0.0;
  for (int i = 0; i < B.rank(); ++i) worst = std::max(worst, residual(A, B.basis_function(i)));
  for (int i = 0; i < A.rank(); ++i) worst = std::max(worst, residual(B, A.basis_function(i)));
  return worst;
}

inline bool subspaces_equal(const SubspaceBasis& A, const SubspaceBasis& B, double tol = 1e-8) {
  return A.rank() == B.rank() && subspace_residual(A, B) <= tol;
}

/// Union of the supports of the basis vectors.
inline ArrowSet joint_support(const SubspaceBasis& S, double tol = 1e-8) {
  ArrowSet U(S.G->size());
  for (int i = 0; i < S.rank(); ++i)
    for (int g : support(S.basis_function(i), tol).indices()) U.insert(g);
  return U;
}

namespace detail {

inline void check_closure_caps(const FiniteGroupoid& G, std::size_t n_gens, int cap) {
  if (G.size() > cap)
    throw CapExceeded("closure: " + std::to_string(G.size()) + " arrows exceeds cap " +
                      std::to_string(cap));
  if (n_gens > static_cast<std::size_t>(cap))
    throw CapExceeded("closure: too many generators");
}

}  // namespace detail

/// Smallest subspace containing the generators (and all unit functions when
/// requested) that is closed under convolution and the involution. Grows
/// the span to a rank fixed point.
inline SubspaceBasis algebra_closure(GroupoidPtr G, const std::vector<ArrowFunction>& generators,
                                     bool adjoin_unit_algebra, double rel_tol = 1e-8,
                                     int cap = 64) {
  detail::check_closure_caps(*G, generators.size(), cap);
  std::vector<ArrowFunction> seed = generators;
  if (adjoin_unit_algebra)
    for (int u : G->units()) seed.push_back(delta(G, u));
  SubspaceBasis S = span_of(G, seed, rel_tol, SubspaceKind::Algebra);

  for (int iter = 0; iter <= G->size() + 1; ++iter) {
    std::vector<ArrowFunction> next;
    next.reserve(static_cast<std::size_t>(S.rank()) * (S.rank() + 2));
    for (int i = 0; i < S.rank(); ++i) next.push_back(S.basis_function(i));
    for (int i = 0; i < S.rank(); ++i) {
      next.push_back(adjoint(S.basis_function(i)));
      for (int j = 0; j < S.rank(); ++j)
        next.push_back(convolve(S.basis_function(i), S.basis_function(j)));
    }
    SubspaceBasis grown = span_of(G, next, rel_tol, SubspaceKind::Algebra);
    if (grown.rank() == S.rank()) return S;
    S = std::move(grown);
  }
  // Rank strictly increases each round and is bounded by the dimension.
  throw std::logic_error("algebra_closure: rank growth failed to stabilize");
}

/// Smallest subspace containing the generators closed under left and right
/// convolution by every unit function δ_x.
inline SubspaceBasis bimodule_closure(GroupoidPtr G, const std::vector<ArrowFunction>& generators,
                                      double rel_tol = 1e-8, int cap = 64) {
  detail::check_closure_caps(*G, generators.size(), cap);
  SubspaceBasis S = span_of(G, generators, rel_tol, SubspaceKind::Bimodule);
  for (int iter = 0; iter <= G->size() + 1; ++iter) {
    std::vector<ArrowFunction> next;
    for (int i = 0; i < S.rank(); ++i) next.push_back(S.basis_function(i));
    for (int i = 0; i < S.rank(); ++i) {
      for (int u : G->units()) {
        ArrowFunction b = S.basis_function(i);
        ArrowFunction du = delta(G, u);
        next.push_back(convolve(du, b));
        next.push_back(convolve(b, du));
      }
    }
    SubspaceBasis grown = span_of(G, next, rel_tol, SubspaceKind::Bimodule);
    if (grown.rank() == S.rank()) return S;
    S = std::move(grown);
  }
  throw std::logic_error("bimodule_closure: rank growth failed to stabilize");
}

}  // namespace glab

#endif  // GLAB_SUBSPACE_HPP
