#ifndef GLAB_NORMALIZERS_HPP
#define GLAB_NORMALIZERS_HPP

#include <vector>

#include "glab/arrow_function.hpp"

namespace glab {

/// True iff f normalizes the diagonal subalgebra: f∗d∗f* and f*∗d∗f stay
/// supported on units for every unit basis element d = δ_x.
inline bool is_normalizer(const ArrowFunction& f, double tol = 1e-12) {
  const ArrowFunction fs = adjoint(f);
  for (int x : f.G->units()) {
    const ArrowFunction d = delta(f.G, x);
    const ArrowFunction lhs = convolve(convolve(f, d), fs);
    const ArrowFunction rhs = convolve(convolve(fs, d), f);
    for (int g = 0; g < f.G->size(); ++g) {
      if (f.G->is_unit(g)) continue;
      if (std::abs(lhs.coeffs(g)) > tol || std::abs(rhs.coeffs(g)) > tol) return false;
    }
  }
  return true;
}

/// Builds the normalizer m = n ∗ E(n* ∗ a) for n the indicator of the
/// bisection B; in closed form m(γ) = |n(γ)|²·a(γ), so m is a carved out of
/// a with support exactly B.
inline ArrowFunction normalizer_from_bisection(const ArrowFunction& a, const ArrowSet& B,
                                               double support_tol = 0.0) {
  const FiniteGroupoid& G = *a.G;
  if (!is_bisection(G, B))
    throw std::invalid_argument("normalizer_from_bisection: B is not a bisection");
  if (!B.subset_of(support(a, support_tol)))
    throw std::invalid_argument("normalizer_from_bisection: B is not inside supp(a)");
  const ArrowFunction n = indicator(a.G, B);
  return convolve(n, conditional_expectation(convolve(adjoint(n), a)));
}

/// Splits f into pieces supported on the disjoint bisections of the greedy
/// cover of supp(f); the pieces sum back to f exactly.
inline std::vector<ArrowFunction> decompose_partition_of_unity(const ArrowFunction& f,
                                                               double support_tol = 0.0) {
  std::vector<ArrowFunction> pieces;
  for (const ArrowSet& B : cover_by_bisections(*f.G, support(f, support_tol)))
    pieces.push_back(restrict_to(f, B));
  return pieces;
}

}  // namespace glab

#endif  // GLAB_NORMALIZERS_HPP
