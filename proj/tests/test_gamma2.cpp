#include <catch2/catch.hpp>

#include "glab/gamma2.hpp"
#include "glab/random.hpp"
#include "support/oracles.hpp"

using namespace glab;
using Complex = std::complex<double>;

namespace {

Eigen::MatrixXcd random_matrix(Rng& rng, int m, int n) {
  Eigen::MatrixXcd A(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = rng.symmetric_square();
  return A;
}

void check_certificate(const Eigen::MatrixXcd& A, const Gamma2Certificate& c, double tol) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  // Primal: stated completion is PSD with max diagonal <= upper.
  Eigen::MatrixXcd M(m + n, m + n);
  M.block(0, 0, m, m) = c.X;
  M.block(0, m, m, n) = A;
  M.block(m, 0, n, m) = A.adjoint();
  M.block(m, m, n, n) = c.Y;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  CHECK(es.eigenvalues().minCoeff() >= -1e-9 * scale);
  double maxdiag = 0.0;
  for (int i = 0; i < m + n; ++i) maxdiag = std::max(maxdiag, M(i, i).real());
  CHECK(maxdiag <= c.upper + 1e-9 * scale);
  CHECK(c.upper <= c.value + tol * scale + 1e-12);

  // Dual: witness is feasible and certifies the lower bound.
  CHECK(c.p.minCoeff() >= 0.0);
  CHECK(c.q.minCoeff() >= 0.0);
  CHECK(c.p.sum() + c.q.sum() == Approx(1.0).margin(1e-9));
  Eigen::MatrixXcd K(m + n, m + n);
  K.setZero();
  for (int i = 0; i < m; ++i) K(i, i) = c.p(i);
  for (int j = 0; j < n; ++j) K(m + j, m + j) = c.q(j);
  K.block(0, m, m, n) = c.W;
  K.block(m, 0, n, m) = c.W.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ek(K);
  CHECK(ek.eigenvalues().minCoeff() >= -1e-10);
  const double pairing = 2.0 * (c.W.conjugate().cwiseProduct(A)).sum().real();
  CHECK(pairing == Approx(c.lower).margin(1e-9 * scale));
  CHECK(c.lower >= c.value - tol * scale - 1e-12);
  CHECK(c.lower <= c.upper + 1e-12);
}

}  // namespace

TEST_CASE("gamma2 of canonical symbols") {
  const Eigen::MatrixXcd I2 = Eigen::MatrixXcd::Identity(2, 2);
  CHECK(gamma2_norm(I2).value == 1.0);  // PSD fast path is exact

  Eigen::MatrixXcd ones = Eigen::MatrixXcd::Constant(3, 3, Complex{1.0, 0.0});
  CHECK(gamma2_norm(ones).value == 1.0);

  Eigen::MatrixXcd pm(2, 2);
  pm << 1, -1, -1, 1;
  CHECK(gamma2_norm(pm).value == 1.0);

  CHECK(gamma2_norm(Eigen::MatrixXcd::Zero(3, 3)).value == 0.0);
  Eigen::MatrixXcd single(1, 1);
  single << Complex{3.0, 4.0};
  CHECK(gamma2_norm(single).value == Approx(5.0).margin(1e-7));
}

TEST_CASE("gamma2 of a permutation symbol") {
  Eigen::MatrixXcd P(2, 2);
  P << 0, 1, 1, 0;
  const Gamma2Certificate c = gamma2_norm(P, 1e-7);
  CHECK(c.value == Approx(1.0).margin(1e-6));
  check_certificate(P, c, 1e-7);
}

TEST_CASE("gamma2 scales absolutely homogeneously") {
  Eigen::MatrixXcd ones = Eigen::MatrixXcd::Constant(2, 2, Complex{3.0, 0.0});
  CHECK(gamma2_norm(ones).value == Approx(3.0).margin(1e-7));
  Rng rng(101);
  const Eigen::MatrixXcd A = random_matrix(rng, 3, 3);
  const double base = gamma2_norm(A, 1e-7).value;
  CHECK(gamma2_norm(Complex{0.0, 2.5} * A, 1e-7).value == Approx(2.5 * base).margin(3e-6));
}

TEST_CASE("gamma2 is subadditive on random pairs") {
  Rng rng(103);
  for (int t = 0; t < 6; ++t) {
    const Eigen::MatrixXcd A = random_matrix(rng, 3, 3);
    const Eigen::MatrixXcd B = random_matrix(rng, 3, 3);
    const double sum = gamma2_norm(A + B, 1e-7).value;
    const double parts = gamma2_norm(A, 1e-7).value + gamma2_norm(B, 1e-7).value;
    CHECK(sum <= parts + 3e-7);
  }
}

TEST_CASE("gamma2 certificates are self-consistent on random input") {
  Rng rng(107);
  for (int t = 0; t < 8; ++t) {
    const int m = 2 + rng.index(2);
    const int n = 2 + rng.index(2);
    const Eigen::MatrixXcd A = random_matrix(rng, m, n);
    const Gamma2Certificate c = gamma2_norm(A, 1e-7);
    CHECK(c.gap <= 2e-7 * std::max(1.0, A.cwiseAbs().maxCoeff()));
    check_certificate(A, c, 1e-7);
  }
}

TEST_CASE("gamma2 agrees with the independent dual oracle") {
  Rng rng(109);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + rng.index(2);
    const Eigen::MatrixXcd A = random_matrix(rng, n, n);
    const Gamma2Certificate c = gamma2_norm(A, 1e-7);
    const oracle::Gamma2DualPoint dual = oracle::gamma2_dual_oracle(A);
    CHECK(std::abs(c.value - dual.value) <= 2e-6);
    // The oracle's evaluations are rigorous lower bounds.
    CHECK(dual.value <= c.upper + 1e-9);
  }
}

TEST_CASE("gamma2 elementary bounds") {
  Rng rng(113);
  for (int t = 0; t < 8; ++t) {
    const Eigen::MatrixXcd A = random_matrix(rng, 3, 3);
    const Gamma2Certificate c = gamma2_norm(A, 1e-7);
    CHECK(c.value >= A.cwiseAbs().maxCoeff() - 1e-6);
    double max_row = 0.0, max_col = 0.0;
    for (int i = 0; i < 3; ++i) max_row = std::max(max_row, A.row(i).norm());
    for (int j = 0; j < 3; ++j) max_col = std::max(max_col, A.col(j).norm());
    CHECK(c.value <= std::min(max_row, max_col) + 1e-6);
  }
}

TEST_CASE("gamma2 handles the six-dimensional blocks of the larger groupoids") {
  Rng rng(127);
  const Eigen::MatrixXcd A = random_matrix(rng, 6, 6);
  const Gamma2Certificate c = gamma2_norm(A, 1e-7);
  check_certificate(A, c, 1e-7);
  const oracle::Gamma2DualPoint dual = oracle::gamma2_dual_oracle(A, 6000);
  CHECK(dual.value <= c.upper + 1e-9);
  CHECK(std::abs(c.value - dual.value) <= 1e-5);
}

TEST_CASE("hermitian but indefinite symbols avoid the fast path") {
  Eigen::MatrixXcd H(2, 2);
  H << 1, 2, 2, 1;  // eigenvalues 3, -1
  const Gamma2Certificate c = gamma2_norm(H, 1e-7);
  CHECK_FALSE(c.psd_fast_path);
  const oracle::Gamma2DualPoint dual = oracle::gamma2_dual_oracle(H);
  CHECK(std::abs(c.value - dual.value) <= 2e-6);
  check_certificate(H, c, 1e-7);
}

TEST_CASE("gamma2 rejects nonsensical tolerances") {
  CHECK_THROWS_AS(gamma2_norm(Eigen::MatrixXcd::Identity(2, 2), 0.0), std::invalid_argument);
}
