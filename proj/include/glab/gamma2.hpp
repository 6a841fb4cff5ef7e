#ifndef GLAB_GAMMA2_HPP
#define GLAB_GAMMA2_HPP

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace glab {

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Result of the γ₂ factorization-norm program for a single matrix A:
///   minimize  max diag  over Hermitian completions [[X, A], [A†, Y]] ⪰ 0.
/// `value` is the certified norm; the primal completion ([[X,A],[A†,Y]],
/// PSD, max diagonal = upper) and the dual witness (p, q, W with
/// [[Diag(p), W], [W†, Diag(q)]] ⪰ 0, Σp+Σq = 1, 2·Re⟨W,A⟩ = lower)
/// bracket it.
struct Gamma2Certificate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool psd_fast_path = false;
  Eigen::MatrixXcd X, Y, W;
  Eigen::VectorXd p, q;
};

namespace gamma2_detail {

enum class ParamKind { Diag, Re, Im };

struct Param {
  ParamKind kind;
  int i, j;        // global coordinates in M (i == j for Diag, i < j otherwise)
  int scalar = -1; // index of the t - M(i,i) barrier term for Diag params
};

inline double hermitian_logdet(const Eigen::MatrixXcd& M, bool& ok) {
  Eigen::LLT<Eigen::MatrixXcd> llt(M);
  if (llt.info() != Eigen::Success) {
    ok = false;
    return 0.0;
  }
  ok = true;
  double s = 0.0;
  const auto& L = llt.matrixLLT();
  for (int i = 0; i < M.rows(); ++i) {
    const double d = L(i, i).real();
    if (!(d > 0.0)) {
      ok = false;
      return 0.0;
    }
    s += 2.0 * std::log(d);
  }
  return s;
}

inline double min_eigenvalue(const Eigen::MatrixXcd& H) {
  if (H.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  return es.eigenvalues().minCoeff();
}

// Exact certificates for PSD symbols: the Schur multiplier of a PSD matrix
// is completely positive, so the norm is attained at the identity and
// equals the largest diagonal entry.
inline Gamma2Certificate psd_certificate(const Eigen::MatrixXcd& A, double lift) {
  const int n = static_cast<int>(A.rows());
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (A(i, i).real() > A(imax, imax).real()) imax = i;
  const double d = std::max(0.0, A(imax, imax).real());

  Gamma2Certificate cert;
  cert.psd_fast_path = true;
  cert.value = d;
  cert.lower = d;
  cert.upper = d + 2.0 * lift;
  cert.gap = cert.upper - cert.lower;
  cert.X = A + 2.0 * lift * Eigen::MatrixXcd::Identity(n, n);
  cert.Y = cert.X;
  cert.p = Eigen::VectorXd::Zero(n);
  cert.q = Eigen::VectorXd::Zero(n);
  cert.p(imax) = 0.5;
  cert.q(imax) = 0.5;
  cert.W = Eigen::MatrixXcd::Zero(n, n);
  cert.W(imax, imax) = 0.5;
  return cert;
}

}  // namespace gamma2_detail

/// Certified γ₂ norm of a complex matrix via a log-barrier interior point
/// iteration on the two-block completion program. `tol` is the duality-gap
/// target for the certificate pair; exceeding 2·tol at the iteration cap is
/// an error.
inline Gamma2Certificate gamma2_norm(const Eigen::MatrixXcd& A, double tol = 1e-6,
                                     int iteration_cap = 10000) {
  using namespace gamma2_detail;
  if (tol <= 0.0) throw std::invalid_argument("gamma2_norm: tol must be positive");
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());

  Gamma2Certificate cert;
  if (m == 0 || n == 0) return cert;

  const double scale = A.cwiseAbs().maxCoeff();
  if (scale == 0.0) {
    cert.X = Eigen::MatrixXcd::Zero(m, m);
    cert.Y = Eigen::MatrixXcd::Zero(n, n);
    cert.W = Eigen::MatrixXcd::Zero(m, n);
    cert.p = Eigen::VectorXd::Constant(m, 0.5 / m);
    cert.q = Eigen::VectorXd::Constant(n, 0.5 / n);
    return cert;
  }

  // Hermitian PSD symbols have an exact closed form.
  if (m == n && (A - A.adjoint()).cwiseAbs().maxCoeff() <= 1e-14 * scale) {
    const Eigen::MatrixXcd H = 0.5 * (A + A.adjoint());
    const double lmin = min_eigenvalue(H);
    if (lmin >= -1e-12 * scale) {
      Gamma2Certificate c = psd_certificate(H, std::max(0.0, -lmin));
      return c;
    }
  }

  const Eigen::MatrixXcd Ab = A / scale;
  const int N = m + n;

  // Parameter vector: t, then the Hermitian entries of X and of Y.
  std::vector<Param> params;
  auto add_block = [&](int offset, int dim) {
    for (int i = 0; i < dim; ++i)
      params.push_back({ParamKind::Diag, offset + i, offset + i,
                        static_cast<int>(offset == 0 ? i : m + i)});
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        params.push_back({ParamKind::Re, offset + i, offset + j, -1});
        params.push_back({ParamKind::Im, offset + i, offset + j, -1});
      }
  };
  add_block(0, m);
  add_block(m, n);
  const int P = 1 + static_cast<int>(params.size());

  auto assemble = [&](const Eigen::VectorXd& theta) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
    M.block(0, m, m, n) = Ab;
    M.block(m, 0, n, m) = Ab.adjoint();
    for (std::size_t k = 0; k < params.size(); ++k) {
      const Param& pr = params[k];
      const double v = theta(1 + static_cast<int>(k));
      switch (pr.kind) {
        case ParamKind::Diag:
          M(pr.i, pr.i) += v;
          break;
        case ParamKind::Re:
          M(pr.i, pr.j) += v;
          M(pr.j, pr.i) += v;
          break;
        case ParamKind::Im:
          M(pr.i, pr.j) += std::complex<double>(0.0, v);
          M(pr.j, pr.i) += std::complex<double>(0.0, -v);
          break;
      }
    }
    return M;
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  auto objective = [&](const Eigen::VectorXd& theta, double eta) {
    const double t = theta(0);
    const Eigen::MatrixXcd M = assemble(theta);
    double obj = eta * t;
    for (int i = 0; i < N; ++i) {
      const double slack = t - M(i, i).real();
      if (!(slack > 0.0)) return kInf;
      obj -= std::log(slack);
    }
    bool ok = false;
    const double ld = hermitian_logdet(M, ok);
    if (!ok) return kInf;
    return obj - ld;
  };

  // Strictly feasible start.
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(P);
  {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Ab);
    const double s = svd.singularValues()(0) * 1.02 + 0.05;
    theta(0) = 1.05 * s + 0.1;
    for (std::size_t k = 0; k < params.size(); ++k)
      if (params[k].kind == ParamKind::Diag) theta(1 + static_cast<int>(k)) = s;
  }

  const double gap_target = std::max(0.25 * tol, 1e-9);
  double eta = 1.0;
  int iterations = 0;
  bool converged = false;

  while (true) {
    // Center at the current eta with damped Newton.
    for (int inner = 0; inner < 80; ++inner) {
      if (iterations >= iteration_cap) break;
      ++iterations;

      const double t = theta(0);
      const Eigen::MatrixXcd M = assemble(theta);
      const Eigen::MatrixXcd Lambda =
          M.llt().solve(Eigen::MatrixXcd::Identity(N, N));
      Eigen::VectorXd slack_inv(N);
      for (int i = 0; i < N; ++i) slack_inv(i) = 1.0 / (t - M(i, i).real());

      Eigen::VectorXd g = Eigen::VectorXd::Zero(P);
      g(0) = eta - slack_inv.sum();
      for (std::size_t k = 0; k < params.size(); ++k) {
        const Param& pr = params[k];
        const int idx = 1 + static_cast<int>(k);
        switch (pr.kind) {
          case ParamKind::Diag:
            g(idx) = -Lambda(pr.i, pr.i).real() + slack_inv(pr.i);
            break;
          case ParamKind::Re:
            g(idx) = -2.0 * Lambda(pr.i, pr.j).real();
            break;
          case ParamKind::Im:
            g(idx) = -2.0 * Lambda(pr.i, pr.j).imag();
            break;
        }
      }

      // Hessian of -logdet via the elementary-matrix expansion of each
      // Hermitian parameter direction.
      using Term = std::pair<std::pair<int, int>, std::complex<double>>;
      std::vector<std::vector<Term>> terms(params.size());
      for (std::size_t k = 0; k < params.size(); ++k) {
        const Param& pr = params[k];
        switch (pr.kind) {
          case ParamKind::Diag:
            terms[k] = {{{pr.i, pr.i}, {1.0, 0.0}}};
            break;
          case ParamKind::Re:
            terms[k] = {{{pr.i, pr.j}, {1.0, 0.0}}, {{pr.j, pr.i}, {1.0, 0.0}}};
            break;
          case ParamKind::Im:
            terms[k] = {{{pr.i, pr.j}, {0.0, 1.0}}, {{pr.j, pr.i}, {0.0, -1.0}}};
            break;
        }
      }
      Eigen::MatrixXd H = Eigen::MatrixXd::Zero(P, P);
      for (std::size_t k = 0; k < params.size(); ++k)
        for (std::size_t l = k; l < params.size(); ++l) {
          std::complex<double> acc{0.0, 0.0};
          for (const Term& a : terms[k])
            for (const Term& b : terms[l])
              acc += a.second * b.second * Lambda(b.first.second, a.first.first) *
                     Lambda(a.first.second, b.first.first);
          const double v = acc.real();
          H(1 + static_cast<int>(k), 1 + static_cast<int>(l)) += v;
          if (l != k) H(1 + static_cast<int>(l), 1 + static_cast<int>(k)) += v;
        }
      // Scalar barrier terms couple t with the block diagonals.
      double htt = 0.0;
      for (int i = 0; i < N; ++i) htt += slack_inv(i) * slack_inv(i);
      H(0, 0) += htt;
      for (std::size_t k = 0; k < params.size(); ++k) {
        const Param& pr = params[k];
        if (pr.kind != ParamKind::Diag) continue;
        const int idx = 1 + static_cast<int>(k);
        const double s2 = slack_inv(pr.i) * slack_inv(pr.i);
        H(0, idx) -= s2;
        H(idx, 0) -= s2;
        H(idx, idx) += s2;
      }

      Eigen::VectorXd step = H.ldlt().solve(-g);
      const double decrement2 = -g.dot(step);
      if (!(decrement2 > 0.0) || decrement2 * 0.5 < 1e-12) break;

      auto feasible = [&](const Eigen::VectorXd& cand) {
        const double tc = cand(0);
        const Eigen::MatrixXcd Mc = assemble(cand);
        for (int i = 0; i < N; ++i)
          if (!(tc - Mc(i, i).real() > 0.0)) return false;
        return Eigen::LLT<Eigen::MatrixXcd>(Mc).info() == Eigen::Success;
      };

      double alpha = 1.0;
      while (alpha > 1e-14 && !feasible(theta + alpha * step)) alpha *= 0.5;
      if (alpha <= 1e-14) break;
      if (decrement2 > 0.25) {
        // Damped phase: insist on an actual objective decrease.
        const double f0 = objective(theta, eta);
        bool ok = false;
        while (alpha > 1e-14) {
          const double f1 = objective(theta + alpha * step, eta);
          if (f1 < f0 - 1e-4 * alpha * decrement2) {
            ok = true;
            break;
          }
          alpha *= 0.5;
        }
        if (!ok) break;
      }
      theta += alpha * step;
    }

    if (2.0 * N / eta <= gap_target) {
      converged = true;
      break;
    }
    if (iterations >= iteration_cap) break;
    eta *= 8.0;
  }

  // Primal certificate straight from the central point.
  const Eigen::MatrixXcd M = assemble(theta);
  double upper = -kInf;
  for (int i = 0; i < N; ++i) upper = std::max(upper, M(i, i).real());
  {
    const double lift = std::max(0.0, -min_eigenvalue(M));
    upper += lift;  // keep the stated completion PSD under roundoff
    cert.X = scale * (M.block(0, 0, m, m) +
                      lift * Eigen::MatrixXcd::Identity(m, m));
    cert.Y = scale * (M.block(m, m, n, n) +
                      lift * Eigen::MatrixXcd::Identity(n, n));
  }

  // Dual witness from the inverse at the center: its diagonal blocks are
  // diagonal up to centering error; repaired to exact feasibility.
  const Eigen::MatrixXcd Lambda = M.llt().solve(Eigen::MatrixXcd::Identity(N, N));
  Eigen::VectorXd p(m), q(n);
  for (int i = 0; i < m; ++i) p(i) = std::max(Lambda(i, i).real(), 0.0);
  for (int j = 0; j < n; ++j) q(j) = std::max(Lambda(m + j, m + j).real(), 0.0);
  Eigen::MatrixXcd W = -Lambda.block(0, m, m, n);
  const double denom = p.sum() + q.sum();
  p /= denom;
  q /= denom;
  W /= denom;
  {
    const std::complex<double> z = (W.conjugate().cwiseProduct(Ab)).sum();
    if (std::abs(z) > 0.0) W *= std::polar(1.0, std::arg(z));
  }
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(N, N);
  K.block(0, 0, m, m) = p.asDiagonal().toDenseMatrix().cast<std::complex<double>>();
  K.block(m, m, n, n) = q.asDiagonal().toDenseMatrix().cast<std::complex<double>>();
  K.block(0, m, m, n) = W;
  K.block(m, 0, n, m) = W.adjoint();
  const double eps_d = std::max(0.0, -min_eigenvalue(K)) + 1e-15;
  const double renorm = 1.0 + N * eps_d;
  for (int i = 0; i < m; ++i) p(i) = (p(i) + eps_d) / renorm;
  for (int j = 0; j < n; ++j) q(j) = (q(j) + eps_d) / renorm;
  W /= renorm;
  double lower = 2.0 * (W.conjugate().cwiseProduct(Ab)).sum().real();
  lower = std::max(lower, 0.0);

  cert.p = p;
  cert.q = q;
  cert.W = W;
  cert.lower = scale * lower;
  cert.upper = scale * upper;
  cert.value = 0.5 * (cert.lower + cert.upper);
  cert.gap = cert.upper - cert.lower;
  cert.iterations = iterations;

  if (!converged && cert.gap > 2.0 * tol * scale)
    throw SolverError("gamma2_norm: duality gap " + std::to_string(cert.gap) +
                      " above 2*tol after iteration cap");
  return cert;
}

}  // namespace glab

#endif  // GLAB_GAMMA2_HPP
