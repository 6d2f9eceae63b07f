#include <gtest/gtest.h>

#include <random>

#include "crossprod/representation.hpp"

using namespace crossprod;

namespace {

AlgElement diag(Complex a, Complex b) {
  AlgElement x;
  x.blocks = {ComplexMatrix::Constant(1, 1, a), ComplexMatrix::Constant(1, 1, b)};
  return x;
}

std::shared_ptr<const PartialActionSystem> shared(PartialActionSystem s) {
  return std::make_shared<const PartialActionSystem>(std::move(s));
}

/// Independent closure oracle: span of all words in the generators, grown until stable.
std::size_t closure_dim(const std::vector<ComplexMatrix>& gens) {
  std::vector<ComplexMatrix> span;
  auto independent_add = [&](const ComplexMatrix& m) {
    auto trial = span;
    trial.push_back(m);
    if (linalg::span_dimension(trial) > span.size()) {
      span.push_back(m);
      return true;
    }
    return false;
  };
  for (const auto& g : gens) {
    independent_add(g);
    independent_add(g.adjoint());
  }
  for (bool grew = true; grew;) {
    grew = false;
    const auto cur = span;
    for (const auto& a : cur)
      for (const auto& b : cur) grew = independent_add(a * b) || grew;
  }
  return span.size();
}

}  // namespace

TEST(PartialRep, UnitaryRepresentationPasses) {
  const auto G = GroupWindow::finite(FiniteGroup::cyclic(2));
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  EXPECT_TRUE(is_partial_rep(PartialRep{{ComplexMatrix::Identity(2, 2), x}}, G).passed());
}

TEST(PartialRep, ZeroIdentityFails) {
  const auto G = GroupWindow::finite(FiniteGroup::cyclic(2));
  const auto r = is_partial_rep(PartialRep{{ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)}}, G);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("identity")->verdict, Verdict::Fail);
}

TEST(PartialRep, RegularMultipliersOnFixtures) {
  for (const auto& name : fixtures::names()) {
    if (name == "corrupted-flip") continue;
    const auto cp = build_regular(fixtures::by_name(name));
    const auto r = is_partial_rep(cp.multipliers(), cp.sys->group);
    EXPECT_TRUE(r.passed()) << name << "\n" << r.to_text();
  }
}

TEST(Lc, FiniteShiftProducts) {
  const auto sys = shared(fixtures::finite_shift());
  const auto e = sys->group.identity(), g = sys->group.parse("1");
  const Complex a1(2.0, 1.0), a2(0.5, -1.0), b(3.0, 0.0), b2(-1.0, 2.0);
  const auto x = lc_multiply(lc_term(sys, diag(a1, a2), e), lc_term(sys, diag(0.0, b), g));
  EXPECT_LE(lc_max_abs_diff(x, lc_term(sys, diag(0.0, a2 * b), g)), 1e-12);
  const auto y = lc_multiply(lc_term(sys, diag(0.0, b), g), lc_term(sys, diag(0.0, b2), g));
  EXPECT_LE(lc_max_abs_diff(y, lc_term(sys, diag(0.0, b * b2), e)), 1e-12);
}

TEST(Lc, CoefficientOutsideIdealThrows) {
  const auto sys = shared(fixtures::finite_shift());
  EXPECT_THROW(lc_term(sys, diag(1.0, 0.0), sys->group.parse("1")), PreconditionError);
}

TEST(Lc, RegularImageIsHomomorphism) {
  // lc_image(xy) = lc_image(x) lc_image(y) and lc_image(x^*) = lc_image(x)^*
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (const char* name : {"flip", "finite-shift", "cyclic-shift3", "matrix-flip"}) {
    const auto sys = shared(fixtures::by_name(name));
    const auto L = regular_layout(*sys);
    auto random_element = [&] {
      LcElement x{sys, {}};
      for (std::size_t s = 0; s < sys->group.size(); ++s) {
        AlgElement a = alg::zero(sys->algebra);
        for (auto& blk : a.blocks)
          for (Eigen::Index i = 0; i < blk.size(); ++i) blk(i) = Complex(g(rng), g(rng));
        x = lc_add(x, lc_term(sys, alg::cut(a, sys->D(s)), s));
      }
      return x;
    };
    for (int k = 0; k < 5; ++k) {
      const auto x = random_element(), y = random_element();
      EXPECT_LE(linalg::max_abs_diff(lc_image(L, lc_multiply(x, y)), lc_image(L, x) * lc_image(L, y)), 1e-9) << name;
      EXPECT_LE(linalg::max_abs_diff(lc_image(L, lc_adjoint(x)), lc_image(L, x).adjoint()), 1e-12) << name;
    }
  }
}

TEST(SeminormBound, Examples) {
  const auto cp = build_regular(fixtures::finite_shift());
  const auto g = cp.sys->group.parse("1");
  EXPECT_TRUE(seminorm_bound_check(cp, cp.sys->p(g), g));
  EXPECT_NEAR(linalg::operator_norm(regular_image(*cp.sys, cp.layout, cp.sys->p(g), g)), 1.0, 1e-12);
  EXPECT_TRUE(seminorm_bound_check(cp, alg::zero(cp.sys->algebra), g));
}

TEST(BuildRegular, FlipIsM2) {
  const auto cp = build_regular(fixtures::flip());
  EXPECT_EQ(cp.dim(), 4u);
  EXPECT_EQ(cp.algebra_dimension(), 4u);
  EXPECT_EQ(linalg::center_basis(cp.algebraBasis).size(), 1u);
}

TEST(BuildRegular, FiniteShiftIsC3) {
  const auto cp = build_regular(fixtures::finite_shift());
  EXPECT_EQ(cp.dim(), 3u);
  EXPECT_EQ(cp.algebra_dimension(), 3u);
  const auto dims = spectral_dims(cp);
  EXPECT_EQ(dims[cp.sys->group.identity()], 2u);
  EXPECT_EQ(dims[cp.sys->group.parse("1")], 1u);
  EXPECT_EQ(linalg::center_basis(cp.algebraBasis).size(), 3u);
}

TEST(BuildRegular, TrivialGroupGivesA) {
  const auto sys = fixtures::trivial();
  EXPECT_EQ(build_regular(sys).algebra_dimension(), sys.algebra.dimension());
}

TEST(BuildRegular, ClosureOracleAgrees) {
  for (const char* name : {"flip", "finite-shift", "cyclic-shift3", "matrix-flip"}) {
    const auto cp = build_regular(fixtures::by_name(name));
    std::vector<ComplexMatrix> gens;
    for (const auto& imgs : cp.termImages) gens.insert(gens.end(), imgs.begin(), imgs.end());
    EXPECT_EQ(closure_dim(gens), cp.algebra_dimension()) << name;
  }
}

TEST(SpectralDims, EqualIdealDimensions) {
  for (const char* name : {"flip", "finite-shift", "trivial", "cyclic-shift3", "matrix-flip"}) {
    const auto cp = build_regular(fixtures::by_name(name));
    const auto dims = spectral_dims(cp);
    for (std::size_t s = 0; s < dims.size(); ++s)
      EXPECT_EQ(dims[s], ideal_dimension(cp.sys->algebra, cp.sys->D(s))) << name << " s=" << s;
    EXPECT_TRUE(grading_check(cp).passed()) << name;
  }
}

TEST(DualCoaction, ProjectsDegrees) {
  const auto cp = build_regular(fixtures::flip());
  const auto e = cp.sys->group.identity(), g = cp.sys->group.parse("1");
  const auto a = diag(Complex(1.0, 2.0), Complex(-3.0, 0.5));
  const ComplexMatrix xe = cp.pi(a);
  const ComplexMatrix xg = regular_image(*cp.sys, cp.layout, diag(2.0, 7.0), g);
  EXPECT_LE(linalg::max_abs_diff(dual_coaction_degree_project(cp, xe, e), xe), 1e-9);
  EXPECT_LE(linalg::max_abs(dual_coaction_degree_project(cp, xe, g)), 1e-9);
  EXPECT_LE(linalg::max_abs_diff(dual_coaction_degree_project(cp, xe + xg, e), xe), 1e-9);
  EXPECT_LE(linalg::max_abs_diff(dual_coaction_degree_project(cp, xe + xg, g), xg), 1e-9);
  EXPECT_LE(linalg::max_abs(dual_coaction_degree_project(cp, linalg::zeros(cp.dim()), g)), 0.0);
}

TEST(DualCoaction, OutsideAlgebraThrows) {
  const auto cp = build_regular(fixtures::finite_shift());
  ComplexMatrix x = linalg::zeros(cp.dim());
  x(0, 1) = 1.0;
  EXPECT_THROW(dual_coaction_degree_project(cp, x, cp.sys->group.identity()), DomainError);
}

TEST(Multipliers, MembershipPasses) {
  for (const char* name : {"flip", "finite-shift", "trivial"})
    EXPECT_TRUE(multiplier_membership_check(build_regular(fixtures::by_name(name))).passed()) << name;
}

TEST(Covariant, RegularPairOfFlip) {
  const auto cp = build_regular(fixtures::flip());
  const auto r = is_covariant(cp.representation(), cp.multipliers(), *cp.sys);
  EXPECT_TRUE(r.covariant()) << r.report.to_text();
  EXPECT_TRUE(r.iii);
  EXPECT_TRUE(r.iv);
}

TEST(Covariant, ProjectionsInsteadOfFlipFail) {
  const auto cp = build_regular(fixtures::flip());
  PartialRep u;
  for (std::size_t s = 0; s < cp.sys->group.size(); ++s) u.ops.push_back(cp.pi(cp.sys->p(s)));
  const auto r = is_covariant(cp.representation(), u, *cp.sys);
  EXPECT_TRUE(r.rangeproj);
  EXPECT_FALSE(r.covariance);
  EXPECT_FALSE(r.covariant());
}

TEST(Covariant, TrivialGroupAlwaysCovariant) {
  const auto cp = build_regular(fixtures::trivial());
  EXPECT_TRUE(is_covariant(cp.representation(), cp.multipliers(), *cp.sys).covariant());
}

TEST(Covariant, EquivalentConditionsAgreeUnderTwists) {
  // conjugating by a unitary keeps covariance; multiplying u_s by a central phase keeps the hypotheses
  std::mt19937_64 rng(13);
  for (const char* name : {"flip", "finite-shift", "cyclic-shift3", "matrix-flip"}) {
    const auto cp = build_regular(fixtures::by_name(name));
    const auto pi = cp.representation();
    for (int k = 0; k < 5; ++k) {
      PartialRep u = cp.multipliers();
      for (std::size_t s = 0; s < u.ops.size(); ++s)
        if (s != cp.sys->group.identity() && k % 2) u.ops[s] = cp.pi(random_central_unitary(cp.sys->algebra, rng)) * u.ops[s];
      const auto r = is_covariant(pi, u, *cp.sys);
      if (r.rangeproj && r.covariance) {
        EXPECT_EQ(r.ii, r.iii) << name;
        EXPECT_EQ(r.ii, r.iv) << name;
      }
    }
  }
}
