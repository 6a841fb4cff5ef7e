#ifndef GLAB_ARROW_FUNCTION_HPP
#define GLAB_ARROW_FUNCTION_HPP

#include <Eigen/Dense>
#include <complex>

#include "glab/groupoid.hpp"

namespace glab {

using Complex = std::complex<double>;

/// A complex-valued function on the arrows of a finite groupoid; in the
/// finite case these are exactly the elements of the convolution algebra.
/// Coefficients are stored densely in canonical arrow order.
struct ArrowFunction {
  GroupoidPtr G;
  Eigen::VectorXcd coeffs;

  ArrowFunction() = default;
  explicit ArrowFunction(GroupoidPtr g)
      : G(std::move(g)), coeffs(Eigen::VectorXcd::Zero(G->size())) {}
  ArrowFunction(GroupoidPtr g, Eigen::VectorXcd c) : G(std::move(g)), coeffs(std::move(c)) {
    if (coeffs.size() != G->size())
      throw std::invalid_argument("ArrowFunction: coefficient length mismatch");
  }

  Complex operator()(int arrow) const { return coeffs(arrow); }
};

inline bool same_groupoid(const ArrowFunction& f, const ArrowFunction& g) {
  return f.G == g.G || (f.G && g.G && f.G->same_tables(*g.G));
}

inline void require_same_groupoid(const ArrowFunction& f, const ArrowFunction& g) {
  if (!same_groupoid(f, g)) throw std::invalid_argument("groupoid mismatch");
}

inline ArrowFunction delta(GroupoidPtr G, int arrow) {
  ArrowFunction f(std::move(G));
  f.coeffs(arrow) = Complex{1.0, 0.0};
  return f;
}

inline ArrowFunction delta(GroupoidPtr G, const std::string& name) {
  int i = G->index_of(name);
  if (i < 0) throw std::invalid_argument("delta: unknown arrow '" + name + "'");
  return delta(std::move(G), i);
}

inline ArrowFunction indicator(GroupoidPtr G, const ArrowSet& S) {
  ArrowFunction f(std::move(G));
  for (int i : S.indices()) f.coeffs(i) = Complex{1.0, 0.0};
  return f;
}

/// Identity of the convolution algebra: the indicator of the unit space.
inline ArrowFunction unit_function(GroupoidPtr G) {
  ArrowFunction f(G);
  for (int u : G->units()) f.coeffs(u) = Complex{1.0, 0.0};
  return f;
}

inline ArrowFunction operator+(const ArrowFunction& f, const ArrowFunction& g) {
  require_same_groupoid(f, g);
  return {f.G, f.coeffs + g.coeffs};
}

inline ArrowFunction operator-(const ArrowFunction& f, const ArrowFunction& g) {
  require_same_groupoid(f, g);
  return {f.G, f.coeffs - g.coeffs};
}

inline ArrowFunction operator*(Complex c, const ArrowFunction& f) { return {f.G, c * f.coeffs}; }

/// Convolution product (f∗g)(γ) = Σ_{αβ=γ} f(α) g(β), summed over all
/// composable factorizations.
inline ArrowFunction convolve(const ArrowFunction& f, const ArrowFunction& g) {
  require_same_groupoid(f, g);
  const FiniteGroupoid& G = *f.G;
  ArrowFunction out(f.G);
  for (int a = 0; a < G.size(); ++a) {
    if (f.coeffs(a) == Complex{0.0, 0.0}) continue;
    for (int b = 0; b < G.size(); ++b) {
      if (!G.composable(a, b)) continue;
      out.coeffs(G.compose(a, b)) += f.coeffs(a) * g.coeffs(b);
    }
  }
  return out;
}

/// Involution f*(γ) = conj(f(γ⁻¹)).
inline ArrowFunction adjoint(const ArrowFunction& f) {
  ArrowFunction out(f.G);
  for (int g = 0; g < f.G->size(); ++g) out.coeffs(g) = std::conj(f.coeffs(f.G->inverse(g)));
  return out;
}

/// Open support {γ : |f(γ)| > tol}.
inline ArrowSet support(const ArrowFunction& f, double tol = 0.0) {
  if (tol < 0) throw std::invalid_argument("support: negative tolerance");
  ArrowSet s(f.G->size());
  for (int g = 0; g < f.G->size(); ++g)
    if (std::abs(f.coeffs(g)) > tol) s.insert(g);
  return s;
}

inline double sup_norm(const ArrowFunction& f) {
  double m = 0.0;
  for (int g = 0; g < f.G->size(); ++g) m = std::max(m, std::abs(f.coeffs(g)));
  return m;
}

inline double l2_norm(const ArrowFunction& f) { return f.coeffs.norm(); }

/// Restriction to the unit space; the conditional expectation onto the
/// diagonal subalgebra.
inline ArrowFunction conditional_expectation(const ArrowFunction& f) {
  ArrowFunction out(f.G);
  for (int u : f.G->units()) out.coeffs(u) = f.coeffs(u);
  return out;
}

/// Pointwise restriction of f to an arrow set.
inline ArrowFunction restrict_to(const ArrowFunction& f, const ArrowSet& S) {
  ArrowFunction out(f.G);
  for (int g : S.indices()) out.coeffs(g) = f.coeffs(g);
  return out;
}

}  // namespace glab

#endif  // GLAB_ARROW_FUNCTION_HPP
