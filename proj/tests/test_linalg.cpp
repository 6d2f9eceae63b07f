#include <gtest/gtest.h>

#include <random>

#include "crossprod/linalg.hpp"

using namespace crossprod;
using namespace crossprod::linalg;

namespace {

ComplexMatrix E(std::size_t n, std::size_t i, std::size_t j) { return matrix_unit(n, i, j); }

ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(x);
  return qr.householderQ() * ComplexMatrix::Identity(x.rows(), x.cols());
}

/// u = W P V for a coordinate projection P of the given rank.
ComplexMatrix random_partial_isometry(std::size_t n, std::size_t rank, std::mt19937_64& rng) {
  ComplexMatrix P = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rank; ++i) P(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  return random_unitary(n, rng) * P * random_unitary(n, rng);
}

}  // namespace

TEST(PartialIsometry, MatrixUnit) { EXPECT_TRUE(is_partial_isometry(E(2, 0, 1))); }

TEST(PartialIsometry, HalfDiagonalIsNot) { EXPECT_FALSE(is_partial_isometry(diag2(1.0, 0.5))); }

TEST(PartialIsometry, Hadamard) {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  EXPECT_TRUE(is_partial_isometry(h));
}

TEST(PartialIsometry, NonSquareThrows) { EXPECT_THROW(is_partial_isometry(ComplexMatrix::Zero(2, 3)), DimensionError); }

TEST(ExtendsOrder, ProjectionBelowIdentity) { EXPECT_TRUE(extends_order(E(2, 0, 0), identity(2))); }

TEST(ExtendsOrder, IdentityNotBelowProjection) { EXPECT_FALSE(extends_order(identity(2), E(2, 0, 0))); }

TEST(ExtendsOrder, Reflexive) { EXPECT_TRUE(extends_order(E(2, 0, 1), E(2, 0, 1))); }

TEST(ExtendsOrder, RejectsNonPartialIsometry) {
  EXPECT_THROW(extends_order(diag2(1.0, 0.5), identity(2)), PreconditionError);
}

TEST(ExtendsOrder, AgreesWithInitialSpaceRestriction) {
  // u ⪯ v iff v u^*u = u
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const auto W = random_unitary(3, rng);
    const auto V = random_unitary(3, rng);
    ComplexMatrix P1 = ComplexMatrix::Zero(3, 3), P2 = ComplexMatrix::Zero(3, 3);
    P1(0, 0) = 1.0;
    P2(0, 0) = P2(1, 1) = 1.0;
    const ComplexMatrix v = W * P2 * V;
    for (const ComplexMatrix& u : {ComplexMatrix(W * P1 * V), random_partial_isometry(3, 1, rng), ComplexMatrix(v)}) {
      const bool oracle = max_abs_diff(v * u.adjoint() * u, u) <= 1e-9;
      EXPECT_EQ(extends_order(u, v), oracle);
    }
  }
}

TEST(Polar, RemovesScaling) {
  EXPECT_TRUE(approx_equal(polar_partial_isometry(2.0 * E(2, 0, 1)), E(2, 0, 1), Tolerance()));
  EXPECT_TRUE(approx_equal(polar_partial_isometry(3.0 * E(2, 1, 0)), E(2, 1, 0), Tolerance()));
}

TEST(Polar, ZeroGivesZero) { EXPECT_EQ(max_abs(polar_partial_isometry(zeros(3))), 0.0); }

TEST(Polar, PropertyRandomMatricesGivePartialIsometries) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int k = 0; k < 50; ++k) {
    ComplexMatrix m(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = Complex(g(rng), g(rng));
    if (k % 2) m.col(k % 4).setZero();  // rank deficient half the time
    const auto v = polar_partial_isometry(m);
    EXPECT_TRUE(is_partial_isometry(v, Tolerance(1e-8)));
    // m = v |m|
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m);
    const ComplexMatrix abs = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                              es.eigenvectors().adjoint();
    EXPECT_LE(max_abs_diff(m, v * abs), 1e-8);
  }
}

TEST(SpanDimension, Examples) {
  const std::vector<ComplexMatrix> a{E(2, 0, 0), E(2, 0, 0)};
  const std::vector<ComplexMatrix> b{E(2, 0, 0), E(2, 1, 1)};
  const std::vector<ComplexMatrix> c{identity(2), E(2, 0, 0), E(2, 1, 1)};
  EXPECT_EQ(span_dimension(a), 1u);
  EXPECT_EQ(span_dimension(b), 2u);
  EXPECT_EQ(span_dimension(c), 2u);
}

TEST(SpanDimension, ShapeMismatchThrows) {
  const std::vector<ComplexMatrix> m{zeros(2), zeros(3)};
  EXPECT_THROW(span_dimension(m), DimensionError);
}

TEST(GeneratedAlgebra, Examples) {
  const std::vector<ComplexMatrix> e12{E(2, 0, 1)};
  const std::vector<ComplexMatrix> id{identity(2)};
  const std::vector<ComplexMatrix> d{diag2(1.0, 2.0)};
  EXPECT_EQ(generated_algebra_basis(e12).size(), 4u);
  EXPECT_EQ(generated_algebra_basis(id).size(), 1u);
  EXPECT_EQ(generated_algebra_basis(d).size(), 2u);
}

TEST(GeneratedAlgebra, PropertyIdempotent) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const std::vector<ComplexMatrix> gens{random_partial_isometry(3, 1, rng)};
    const auto basis = generated_algebra_basis(gens);
    EXPECT_EQ(generated_algebra_basis(basis).size(), basis.size());
  }
}

TEST(Center, FullMatrixAlgebraHasScalarCenter) {
  const std::vector<ComplexMatrix> gens{E(2, 0, 1)};
  const auto basis = generated_algebra_basis(gens);
  EXPECT_EQ(center_basis(basis).size(), 1u);
}

TEST(ExtendsOrder, PropertyPartialOrder) {
  // reflexive, antisymmetric and transitive on a family built from nested projections and a unitary
  std::mt19937_64 rng(9);
  const auto W = random_unitary(3, rng);
  std::vector<ComplexMatrix> fam;
  for (std::size_t r = 0; r <= 3; ++r) {
    ComplexMatrix P = ComplexMatrix::Zero(3, 3);
    for (std::size_t i = 0; i < r; ++i) P(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    fam.push_back(W * P);
  }
  fam.push_back(random_partial_isometry(3, 2, rng));
  for (const auto& u : fam) EXPECT_TRUE(extends_order(u, u));
  for (const auto& u : fam)
    for (const auto& v : fam) {
      if (extends_order(u, v) && extends_order(v, u)) {
        EXPECT_LE(max_abs_diff(u, v), 1e-8);
      }
      for (const auto& w : fam)
        if (extends_order(u, v) && extends_order(v, w)) EXPECT_TRUE(extends_order(u, w));
    }
}

TEST(ExtendsOrder, PropertyInitialProjectionsIncrease) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    const auto W = random_unitary(4, rng);
    const auto V = random_unitary(4, rng);
    ComplexMatrix P1 = ComplexMatrix::Zero(4, 4), P2 = ComplexMatrix::Zero(4, 4);
    P1(0, 0) = 1.0;
    P2(0, 0) = P2(1, 1) = 1.0;
    const ComplexMatrix u = W * P1 * V, v = W * P2 * V;
    ASSERT_TRUE(extends_order(u, v));
    EXPECT_TRUE(is_positive_semidefinite(v.adjoint() * v - u.adjoint() * u));
  }
}
