#include <gtest/gtest.h>

#include <algorithm>

#include "crossprod/landstad.hpp"

using namespace crossprod;

namespace {

GradedMatrixAlgebra graded_fixture(const char* name) { return graded_from_crossed_product(build_regular(fixtures::by_name(name))); }

std::vector<int> sorted_sizes(const FdAlgebra& A, const Ideal& I) {
  std::vector<int> out;
  for (auto b : I) out.push_back(A.blockSizes[b]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ValidateGrading, CrossedProductsPass) {
  for (const char* name : {"flip", "finite-shift", "trivial", "cyclic-shift3", "matrix-flip"})
    EXPECT_TRUE(validate_grading(graded_fixture(name)).passed()) << name;
}

TEST(ValidateGrading, TrivialGradingPasses) {
  GradedMatrixAlgebra g;
  g.dim = 2;
  g.grading = {{linalg::matrix_unit(2, 0, 0), linalg::matrix_unit(2, 0, 1), linalg::matrix_unit(2, 1, 0),
                linalg::matrix_unit(2, 1, 1)}};
  EXPECT_TRUE(validate_grading(g).passed());
}

TEST(ValidateGrading, AdjointInWrongDegreeFails) {
  // flip has g = g^-1, so B_g must be closed under adjoints; a single x + 2x^* is not
  auto g = graded_fixture("flip");
  const auto gi = g.group.parse("1");
  ASSERT_FALSE(g.grading[gi].empty());
  auto& B = g.grading[gi];
  const ComplexMatrix x = B[0] + 2.0 * B[0].adjoint();
  const std::vector<ComplexMatrix> pair{x, ComplexMatrix(x.adjoint())};
  ASSERT_EQ(linalg::span_dimension(pair), 2u);
  B = {x};
  const auto r = validate_grading(g);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("B_s^* = B_{s^-1}")->verdict, Verdict::Fail);
}

TEST(Certificate, FlipAndFiniteShift) {
  for (const char* name : {"flip", "finite-shift"}) {
    const auto g = graded_fixture(name);
    const auto s = g.group.parse("1");
    const auto m = find_certificate(g, s, 10, 42);
    ASSERT_TRUE(m.has_value()) << name;
    EXPECT_EQ(certificate_defect(g, s, *m), "") << name;
    EXPECT_LE(linalg::max_abs_diff(*m * m->adjoint(), g.projection(s)), 1e-9);
  }
  const auto fs = graded_fixture("finite-shift");
  const auto m = *find_certificate(fs, fs.group.parse("1"), 10, 42);
  const std::vector<ComplexMatrix> one{ComplexMatrix(m * m.adjoint())};
  EXPECT_EQ(linalg::span_dimension(one), 1u);
  EXPECT_NEAR((m * m.adjoint()).trace().real(), fs.projection(fs.group.parse("1")).trace().real(), 1e-9);
}

TEST(Certificate, ZeroDegreeGivesZero) {
  auto g = graded_fixture("finite-shift");
  const auto s = g.group.parse("1");
  g.grading[s].clear();
  const auto m = find_certificate(g, s, 3, 42);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(linalg::max_abs(*m), 0.0);
}

TEST(Certificate, DeterministicForSeed) {
  const auto g = graded_fixture("matrix-flip");
  const auto s = g.group.parse("1");
  EXPECT_EQ(linalg::max_abs_diff(*find_certificate(g, s, 10, 7), *find_certificate(g, s, 10, 7)), 0.0);
}

TEST(RoundTrip, FiniteFixtures) {
  for (const char* name : {"flip", "finite-shift", "trivial", "cyclic-shift3", "matrix-flip"}) {
    const auto sys = fixtures::by_name(name);
    const auto rt = landstad_roundtrip(graded_from_crossed_product(build_regular(sys)), 10, 42);
    ASSERT_TRUE(rt.report.passed()) << name << "\n" << rt.report.to_text();
    ASSERT_TRUE(rt.reconstructed.has_value());
    EXPECT_EQ(rt.originalDims, rt.reconstructedDims) << name;
    const auto& R = *rt.reconstructed;
    EXPECT_EQ(sorted_sizes(R.algebra, full_ideal(R.algebra)), sorted_sizes(sys.algebra, full_ideal(sys.algebra)));
    for (std::size_t s = 0; s < sys.group.size(); ++s)
      EXPECT_EQ(sorted_sizes(R.algebra, R.D(s)), sorted_sizes(sys.algebra, sys.D(s))) << name << " s=" << s;
    EXPECT_TRUE(validate_partial_action(R).passed()) << name;
  }
}

TEST(RoundTrip, FlipRecoversSwap) {
  const auto rt = landstad_roundtrip(graded_fixture("flip"), 10, 42);
  ASSERT_TRUE(rt.reconstructed.has_value());
  const auto& R = *rt.reconstructed;
  const auto g = R.group.parse("1");
  EXPECT_EQ(R.D(g), full_ideal(R.algebra));
  EXPECT_EQ(R.alpha(g).blockMap.at(0), 1u);
}

TEST(RoundTrip, FiniteShiftRecoversIdentityOnRankOne) {
  const auto rt = landstad_roundtrip(graded_fixture("finite-shift"), 10, 42);
  ASSERT_TRUE(rt.reconstructed.has_value());
  const auto& R = *rt.reconstructed;
  const auto g = R.group.parse("1");
  ASSERT_EQ(R.D(g).size(), 1u);
  const auto b = *R.D(g).begin();
  EXPECT_EQ(R.algebra.blockSizes[b], 1);
  EXPECT_EQ(R.alpha(g).blockMap.at(b), b);
}

TEST(ModuleIso, ConstructedCertificatesPass) {
  for (const char* name : {"flip", "finite-shift", "matrix-flip"}) {
    const auto g = graded_fixture(name);
    const auto fam = find_certificates(g, 10, 42);
    ASSERT_TRUE(fam.found) << name;
    const auto r = module_iso_check(g, fam.m);
    EXPECT_TRUE(r.passed()) << name << "\n" << r.to_text();
  }
}

TEST(ModuleIso, WrongIntertwinerFails) {
  const auto g = graded_fixture("flip");
  const auto s = g.group.parse("1");
  std::vector<ComplexMatrix> certs(g.group.size());
  certs[g.group.identity()] = g.projection(g.group.identity());
  certs[s] = g.projection(s);  // supported on p_g, but not the swap
  const auto r = module_iso_check(g, certs);
  EXPECT_FALSE(r.passed());
}

TEST(ModuleIso, IdentityOnlyPasses) {
  GradedMatrixAlgebra g;
  g.dim = 2;
  g.grading = {{linalg::matrix_unit(2, 0, 0), linalg::matrix_unit(2, 1, 1)}};
  const auto r = module_iso_check(g, {linalg::identity(2)});
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Reconstruct, InconsistentCertificatesThrow) {
  const auto g = graded_fixture("cyclic-shift3");
  auto fam = find_certificates(g, 10, 42);
  ASSERT_TRUE(fam.found);
  fam.m[2] = fam.m[1];  // m_{g^2} no longer compatible with m_g m_g
  EXPECT_THROW(reconstruct_action(g, fam.m), std::exception);
}

TEST(ElementaryDuality, FreeProductLc) {
  const auto sys = std::make_shared<const PartialActionSystem>(fixtures::free_product(2));
  const LcGradedModel model(sys);
  std::vector<LcElement> certs;
  for (int i = 1; i <= sys->group.rank(); ++i) certs.push_back(model.multiplier(*sys->group.find(make_word({i}, sys->group.rank()))));
  const auto r = graded::elementary_duality_check(model, certs);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(ElementaryDuality, FreeProductMatrixWindow) {
  const auto g = graded_from_crossed_product(build_regular(fixtures::free_product(2)));
  std::vector<ComplexMatrix> certs;
  for (int i = 1; i <= g.group.rank(); ++i) {
    const auto m = find_certificate(g, *g.group.find(make_word({i}, g.group.rank())), 10, 42);
    ASSERT_TRUE(m.has_value());
    certs.push_back(*m);
  }
  const MatrixGradedModel model(g);
  const auto r = graded::elementary_duality_check(model, certs);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(ElementaryDuality, DroppedGeneratorDegreeFails) {
  const auto sys = std::make_shared<const PartialActionSystem>(fixtures::free_product(2));
  LcGradedModel model(sys);
  std::vector<LcElement> certs;
  for (int i = 1; i <= sys->group.rank(); ++i) certs.push_back(model.multiplier(*sys->group.find(make_word({i}, sys->group.rank()))));
  model.drop_degree(*sys->group.find(make_word({1}, sys->group.rank())));
  const auto r = graded::elementary_duality_check(model, certs);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("(i) generation by B_e and the B_{g_i}")->verdict, Verdict::Fail);
}
