#include <catch2/catch.hpp>

#include "glab/normalizers.hpp"
#include "glab/representation.hpp"
#include "support/bundled.hpp"
#include "support/oracles.hpp"

using namespace glab;

namespace {

ArrowFunction random_function(Rng& rng, GroupoidPtr G) {
  ArrowFunction f(G);
  for (int g = 0; g < G->size(); ++g) f.coeffs(g) = rng.symmetric_square();
  return f;
}

ArrowSet random_bisection(Rng& rng, const GroupoidPtr& G) {
  ArrowSet S(G->size());
  for (int g = 0; g < G->size(); ++g)
    if (rng.coin()) S.insert(g);
  const auto classes = cover_by_bisections(*G, S);
  if (classes.empty()) {
    ArrowSet single(G->size());
    single.insert(rng.index(G->size()));
    return single;
  }
  return classes[rng.index(static_cast<int>(classes.size()))];
}

}  // namespace

TEST_CASE("convolution of point masses follows the composition table") {
  const GroupoidPtr r2 = bundled::r2();
  CHECK((convolve(delta(r2, "p<-q"), delta(r2, "q<-p")).coeffs -
         delta(r2, "p").coeffs).norm() == 0.0);
  const GroupoidPtr z2 = bundled::z2();
  CHECK((convolve(delta(z2, "a"), delta(z2, "a")).coeffs - delta(z2, "e").coeffs).norm() == 0.0);
}

TEST_CASE("the unit-space indicator is the convolution identity") {
  Rng rng(7);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    const ArrowFunction one = unit_function(G);
    for (int t = 0; t < 5; ++t) {
      const ArrowFunction f = random_function(rng, G);
      CHECK((convolve(one, f).coeffs - f.coeffs).norm() == 0.0);
      CHECK((convolve(f, one).coeffs - f.coeffs).norm() == 0.0);
    }
  }
}

TEST_CASE("adjoint conjugates through the inverse") {
  const GroupoidPtr r2 = bundled::r2();
  CHECK((adjoint(delta(r2, "p<-q")).coeffs - delta(r2, "q<-p").coeffs).norm() == 0.0);
  const ArrowFunction u = unit_function(r2);
  CHECK((adjoint(u).coeffs - u.coeffs).norm() == 0.0);
  const GroupoidPtr z2 = bundled::z2();
  const ArrowFunction ia = Complex{0.0, 1.0} * delta(z2, "a");
  CHECK((adjoint(ia).coeffs - (Complex{0.0, -1.0} * delta(z2, "a")).coeffs).norm() == 0.0);
}

TEST_CASE("convolution interacts with adjoints as a *-algebra") {
  Rng rng(11);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    const ArrowFunction f = random_function(rng, G);
    const ArrowFunction g = random_function(rng, G);
    CHECK((adjoint(convolve(f, g)).coeffs - convolve(adjoint(g), adjoint(f)).coeffs)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("regular representation block of delta_a over Z/2") {
  const GroupoidPtr z2 = bundled::z2();
  const RepBlock blk = rep_block(delta(z2, "a"), z2->index_of("e"));
  REQUIRE(blk.matrix.rows() == 2);
  Eigen::MatrixXcd expected(2, 2);
  expected << 0, 1, 1, 0;
  CHECK((blk.matrix - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("representation block entries are f(row * col^{-1}) on R2") {
  const GroupoidPtr r2 = bundled::r2();
  const RepBlock blk = rep_block(delta(r2, "p<-q"), r2->index_of("p"));
  // Basis of G_p in canonical order: the unit p, then q<-p.
  REQUIRE(blk.basis == std::vector<int>{r2->index_of("p"), r2->index_of("q<-p")});
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2, 2);
  expected(0, 1) = 1.0;  // (p)∘(q<-p)⁻¹ = p<-q
  CHECK((blk.matrix - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("unit-supported functions act diagonally") {
  Rng rng(13);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    ArrowFunction f(G);
    for (int u : G->units()) f.coeffs(u) = rng.symmetric_square();
    for (int x : G->units()) {
      const RepBlock blk = rep_block(f, x);
      for (int i = 0; i < blk.matrix.rows(); ++i)
        for (int j = 0; j < blk.matrix.cols(); ++j) {
          const Complex want =
              i == j ? f.coeffs(G->range(blk.basis[i])) : Complex{0.0, 0.0};
          CHECK(std::abs(blk.matrix(i, j) - want) == 0.0);
        }
    }
  }
}

TEST_CASE("rep_block is a *-homomorphism") {
  Rng rng(17);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    for (int t = 0; t < 8; ++t) {
      const ArrowFunction f = random_function(rng, G);
      const ArrowFunction g = random_function(rng, G);
      for (int x : G->units()) {
        const Eigen::MatrixXcd pf = rep_block(f, x).matrix;
        const Eigen::MatrixXcd pg = rep_block(g, x).matrix;
        CHECK((rep_block(convolve(f, g), x).matrix - pf * pg).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((rep_block(adjoint(f), x).matrix - pf.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("reduced norm frozen values") {
  const GroupoidPtr z2 = bundled::z2();
  CHECK(reduced_norm(delta(z2, "e") + delta(z2, "a")) == Approx(2.0).margin(1e-12));
  const GroupoidPtr r2 = bundled::r2();
  CHECK(reduced_norm(delta(r2, "p<-q") + delta(r2, "q<-p")) == Approx(1.0).margin(1e-12));
  for (const auto& [name, G] : bundled::all()) {
    for (int x : G->units()) CHECK(reduced_norm(delta(G, x)) == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("C*-identity holds numerically") {
  Rng rng(19);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    for (int t = 0; t < 20; ++t) {
      const ArrowFunction f = random_function(rng, G);
      const double n = reduced_norm(f);
      const double nn = reduced_norm(convolve(adjoint(f), f));
      CHECK(std::abs(nn - n * n) <= 1e-8 * (1.0 + n * n));
    }
  }
}

TEST_CASE("spectral norm agrees with the power iteration oracle") {
  Rng rng(23);
  for (const auto& [name, G] : bundled::all()) {
    const ArrowFunction f = random_function(rng, G);
    for (int x : G->units()) {
      const Eigen::MatrixXcd M = rep_block(f, x).matrix;
      CHECK(spectral_norm(M) ==
            Approx(oracle::power_iteration_norm(M)).margin(1e-7 * (1.0 + M.norm())));
    }
  }
}

TEST_CASE("evaluation map inverts the representation family exactly") {
  const GroupoidPtr z2 = bundled::z2();
  const ArrowFunction da = delta(z2, "a");
  CHECK((fourier_coefficients(z2, rep_blocks(da)).coeffs - da.coeffs).norm() == 0.0);

  Rng rng(29);
  const GroupoidPtr r2 = bundled::r2();
  for (int t = 0; t < 10; ++t) {
    const ArrowFunction f = random_function(rng, r2);
    CHECK((fourier_coefficients(r2, rep_blocks(f)).coeffs - f.coeffs).norm() == 0.0);
  }

  const ArrowFunction zero(r2);
  CHECK(fourier_coefficients(r2, rep_blocks(zero)).coeffs.norm() == 0.0);
}

TEST_CASE("evaluation map rejects inconsistent block families") {
  const GroupoidPtr r2 = bundled::r2();
  auto blocks = rep_blocks(delta(r2, "p<-q"));
  blocks[1].matrix(0, 0) += 1.0;  // no algebra element produces this family
  CHECK_THROWS_AS(fourier_coefficients(r2, blocks), std::invalid_argument);
}

TEST_CASE("conditional expectation restricts to units and contracts") {
  const GroupoidPtr z2 = bundled::z2();
  CHECK(conditional_expectation(delta(z2, "a")).coeffs.norm() == 0.0);
  CHECK((conditional_expectation(delta(z2, "e")).coeffs - delta(z2, "e").coeffs).norm() == 0.0);
  Rng rng(31);
  for (const auto& [name, G] : bundled::all()) {
    const ArrowFunction f = random_function(rng, G);
    const ArrowFunction ef = conditional_expectation(f);
    CHECK((conditional_expectation(ef).coeffs - ef.coeffs).norm() == 0.0);
    CHECK(reduced_norm(ef) <= reduced_norm(f) + 1e-9);
  }
}

TEST_CASE("support and sup-norm behave pointwise") {
  const GroupoidPtr z2 = bundled::z2();
  CHECK(support(delta(z2, "a"), 0.0).indices() == std::vector<int>{1});
  CHECK(support(ArrowFunction(z2), 0.0).empty());
  CHECK(sup_norm(delta(z2, "a")) == 1.0);
  CHECK(sup_norm(Complex{2.0, 0.0} * delta(z2, "e") - delta(z2, "a")) == 2.0);
  Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    const ArrowFunction f = random_function(rng, z2);
    const ArrowFunction g = random_function(rng, z2);
    CHECK(support(f + g, 1e-12).subset_of(set_union(support(f, 0.0), support(g, 0.0))));
  }
}

TEST_CASE("the evaluation map is norm-decreasing") {
  Rng rng(41);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    for (int t = 0; t < 10; ++t) {
      const ArrowFunction f = random_function(rng, G);
      CHECK(sup_norm(f) <= reduced_norm(f) + 1e-9);
    }
  }
}

TEST_CASE("bisection-supported functions are sup-norm isometries") {
  Rng rng(43);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    for (int t = 0; t < 25; ++t) {
      const ArrowSet B = random_bisection(rng, G);
      ArrowFunction f(G);
      for (int g : B.indices()) f.coeffs(g) = rng.symmetric_square();
      CHECK(std::abs(reduced_norm(f) - sup_norm(f)) <= 1e-9);
    }
  }
}

TEST_CASE("approximate unit identity for bisection-supported functions") {
  Rng rng(47);
  for (const auto& [name, G] : bundled::all()) {
    const ArrowSet B = random_bisection(rng, G);
    ArrowFunction f(G);
    for (int g : B.indices()) f.coeffs(g) = rng.symmetric_square();
    ArrowSet sB(G->size());
    for (int g : B.indices()) sB.insert(G->source(g));
    const ArrowFunction w = indicator(G, sB);
    CHECK((convolve(f, w).coeffs - f.coeffs).norm() == 0.0);
  }
}

TEST_CASE("reduced norm of a disjoint union is the max over components") {
  Rng rng(53);
  const GroupoidPtr z2 = bundled::z2();
  const GroupoidPtr z3 = bundled::z3();
  const GroupoidPtr both = bundled::z2_z3();
  for (int t = 0; t < 10; ++t) {
    ArrowFunction f(both);
    ArrowFunction f1(z2), f2(z3);
    for (int g = 0; g < z2->size(); ++g) {
      const Complex v = rng.symmetric_square();
      f1.coeffs(g) = v;
      f.coeffs(both->index_of("1:" + z2->name(g))) = v;
    }
    for (int g = 0; g < z3->size(); ++g) {
      const Complex v = rng.symmetric_square();
      f2.coeffs(g) = v;
      f.coeffs(both->index_of("2:" + z3->name(g))) = v;
    }
    CHECK(reduced_norm(f) ==
          Approx(std::max(reduced_norm(f1), reduced_norm(f2))).margin(1e-12));
  }
}

TEST_CASE("groupoid mismatch is rejected") {
  const ArrowFunction f = delta(bundled::z2(), "a");
  const ArrowFunction g = delta(bundled::z3(), "g");
  CHECK_THROWS_AS(convolve(f, g), std::invalid_argument);
}

TEST_CASE("normalizer detection") {
  const GroupoidPtr r2 = bundled::r2();
  CHECK(is_normalizer(delta(r2, "p<-q")));
  const GroupoidPtr z2 = bundled::z2();
  // (δ_e+δ_a)∗δ_e∗(δ_e+δ_a)* = 2δ_e + 2δ_a leaves the diagonal.
  CHECK_FALSE(is_normalizer(delta(z2, "e") + delta(z2, "a")));
  ArrowFunction scaled_unitary(z2);
  scaled_unitary.coeffs(0) = Complex{0.0, 2.0};
  CHECK(is_normalizer(scaled_unitary));
  CHECK_FALSE(is_normalizer(delta(r2, "p<-q") + delta(r2, "p")));
}

TEST_CASE("normalizer carved from a bisection") {
  const GroupoidPtr r2 = bundled::r2();
  const ArrowFunction a = delta(r2, "p<-q") + delta(r2, "p");
  ArrowSet B(r2->size());
  B.insert(r2->index_of("p<-q"));
  const ArrowFunction m = normalizer_from_bisection(a, B);
  CHECK((m.coeffs - delta(r2, "p<-q").coeffs).norm() == 0.0);

  const GroupoidPtr z2 = bundled::z2();
  ArrowSet Ba(z2->size());
  Ba.insert(z2->index_of("a"));
  const ArrowFunction ma = normalizer_from_bisection(delta(z2, "a"), Ba);
  CHECK((ma.coeffs - delta(z2, "a").coeffs).norm() == 0.0);

  ArrowSet off(r2->size());
  off.insert(r2->index_of("q<-p"));
  CHECK_THROWS_AS(normalizer_from_bisection(a, off), std::invalid_argument);
  ArrowSet notbis(r2->size());
  notbis.insert(r2->index_of("p<-q"));
  notbis.insert(r2->index_of("p"));
  CHECK_THROWS_AS(normalizer_from_bisection(a, notbis), std::invalid_argument);
}

TEST_CASE("constructed normalizers match the closed form |n|^2 a") {
  Rng rng(59);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    for (int t = 0; t < 10; ++t) {
      ArrowFunction a(G);
      for (int g = 0; g < G->size(); ++g) a.coeffs(g) = rng.unit_square() + Complex{0.1, 0.1};
      const ArrowSet B = random_bisection(rng, G);
      const ArrowFunction m = normalizer_from_bisection(a, B);
      CHECK((m.coeffs - restrict_to(a, B).coeffs).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK(is_normalizer(m, 1e-12));
      CHECK(support(m, 0.0) == B);
    }
  }
}

TEST_CASE("partition of unity decomposition") {
  const GroupoidPtr r2 = bundled::r2();
  ArrowFunction full(r2);
  full.coeffs.setConstant(Complex{1.0, 0.5});
  const auto pieces = decompose_partition_of_unity(full);
  CHECK(pieces.size() == 2);

  const ArrowFunction single = delta(r2, "p<-q");
  CHECK(decompose_partition_of_unity(single).size() == 1);
  CHECK(decompose_partition_of_unity(ArrowFunction(r2)).empty());

  Rng rng(61);
  for (const auto& [name, G] : bundled::all()) {
    INFO(name);
    const ArrowFunction f = random_function(rng, G);
    ArrowFunction sum(G);
    for (const ArrowFunction& piece : decompose_partition_of_unity(f)) {
      CHECK(is_bisection(*G, support(piece, 0.0)));
      sum = sum + piece;
    }
    CHECK((sum.coeffs - f.coeffs).norm() == 0.0);
  }
}
