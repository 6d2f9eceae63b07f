#include <gtest/gtest.h>

#include <random>

#include "crossprod/wiener_hopf.hpp"

using namespace crossprod;

namespace {

std::shared_ptr<const QuasiLatticeOrder> qlo(const char* name) { return make_qlo(name); }

}  // namespace

TEST(WhMultiply, ShiftAdjointTimesShift) {
  const auto z = qlo("z1n1");
  const auto x = wh::multiply(wh::term(z, {0}, {1}), wh::term(z, {2}, {0}));
  EXPECT_TRUE(wh::equal(x, wh::term(z, {1}, {0})));
  EXPECT_EQ(wh::format(wh::parse("W[1]^*W[2]", z)), "W[1]");
}

TEST(WhMultiply, NicaExample) {
  const auto z = qlo("z2n2");
  const auto x = wh::multiply(wh::term(z, {1, 0}, {1, 0}), wh::term(z, {0, 1}, {0, 1}));
  EXPECT_TRUE(wh::equal(x, wh::term(z, {1, 1}, {1, 1})));
  EXPECT_EQ(wh::format(x), "W[1,1]*W[1,1]^");
}

TEST(WhMultiply, FreeMonoidNoJoin) {
  const auto f = qlo("free2");
  EXPECT_TRUE(wh::is_zero(wh::multiply(wh::term(f, {1}, {1}), wh::term(f, {2}, {2}))));
}

TEST(WhMultiply, PropertyAssociative) {
  std::mt19937_64 rng(41);
  for (const char* name : {"z2n2", "free2"}) {
    const auto q = qlo(name);
    const auto cone = q->cone_window(2);
    std::uniform_int_distribution<std::size_t> pick(0, cone.size() - 1);
    auto rnd = [&] { return wh::term(q, cone[pick(rng)], cone[pick(rng)]); };
    for (int k = 0; k < 300; ++k) {
      const auto a = rnd(), b = rnd(), c = rnd();
      EXPECT_TRUE(wh::equal(wh::multiply(wh::multiply(a, b), c), wh::multiply(a, wh::multiply(b, c))));
    }
  }
}

TEST(WhDegree, Examples) {
  const auto z = qlo("z1n1");
  EXPECT_EQ(wh_degree(*z, {{3}, {1}}), (QloElement{2}));
  EXPECT_EQ(wh_degree(*z, {{2}, {2}}), z->identity());
  const auto f = qlo("free2");
  EXPECT_EQ(wh_degree(*f, {{1, 2}, {2}}), (QloElement{1}));
}

TEST(WhPartialRep, Examples) {
  const auto z = qlo("z1n1");
  EXPECT_TRUE(wh::equal(wh_partial_rep(z, {-1}), wh::term(z, {0}, {1})));
  EXPECT_EQ(wh::format(wh_partial_rep(z, {-1})), "W[1]^");
  EXPECT_TRUE(wh::equal(wh_partial_rep(z, {3}), wh::term(z, {3}, {0})));
  const auto f = qlo("free2");
  EXPECT_TRUE(wh::is_zero(wh_partial_rep(f, {-1, 2})));
}

TEST(WhOrder, Examples) {
  const auto z = qlo("z1n1");
  EXPECT_TRUE(wh_order_check(*z, {{2}, {1}}, {{1}, {0}}));
  EXPECT_FALSE(wh_order_check(*z, {{1}, {0}}, {{2}, {1}}));
  EXPECT_TRUE(wh_order_check(*z, {{2}, {1}}, {{2}, {1}}));
}

TEST(WhOrder, AgreesWithMatrixDefinition) {
  // u ⪯ v iff uu^* = uv^* on truncated matrices; indices have length <= 4, so columns with |c| + 4 <= N are exact
  const auto z = qlo("z2n2");
  const int N = 10;
  const auto basis = wh_basis(*z, N);
  const auto box = wh_cone_box(*z, 2);
  for (const auto& p : box)
    for (const auto& q : box)
      for (const auto& u : box)
        for (const auto& v : box) {
          if (z->multiply(p, z->inverse(q)) != z->multiply(u, z->inverse(v))) continue;
          const ComplexMatrix U = wh_matrix(wh::term(z, p, q), N), V = wh_matrix(wh::term(z, u, v), N);
          const ComplexMatrix d = U * U.adjoint() - U * V.adjoint();
          double err = 0.0;
          for (std::size_t c = 0; c < basis.size(); ++c)
            if (z->length(basis[c]) + 4 <= static_cast<std::size_t>(N))
              err = std::max(err, d.col(static_cast<Eigen::Index>(c)).cwiseAbs().maxCoeff());
          EXPECT_EQ(wh_order_check(*z, {p, q}, {u, v}), err <= 1e-12);
        }
}

TEST(WhTruncate, ForwardShift) {
  const auto z = qlo("z1n1");
  const ComplexMatrix m = wh_truncate(*z, {1}, 3);
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) expect(i + 1, i) = 1.0;
  EXPECT_EQ(linalg::max_abs_diff(m, expect), 0.0);
  const ComplexMatrix p = m * m.adjoint();
  EXPECT_EQ(p(0, 0), Complex(0.0));
  EXPECT_EQ(p(3, 3), Complex(1.0));
}

TEST(WhCrosscheck, ExampleProducts) {
  const auto z1 = qlo("z1n1"), z2 = qlo("z2n2"), f = qlo("free2");
  EXPECT_TRUE(wh_crosscheck(wh::term(z1, {0}, {1}), wh::term(z1, {2}, {0}), 6).passed());
  EXPECT_TRUE(wh_crosscheck(wh::term(z2, {1, 0}, {1, 0}), wh::term(z2, {0, 1}, {0, 1}), 4).passed());
  EXPECT_TRUE(wh_crosscheck(wh::term(f, {1}, {1}), wh::term(f, {2}, {2}), 4).passed());
  EXPECT_TRUE(wh_crosscheck(wh::term(f, {1, 2}, {2}), wh::term(f, {2, 1}, {1}), 5).passed());
}

TEST(WhSuites, Nica) {
  const auto r = nica_covariance_check(qlo("z2n2"), 3);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(WhSuites, PartialRep) {
  for (const char* name : {"z1n1", "z2n2", "free2"}) {
    const auto r = wh_partial_rep_check(qlo(name), 3);
    EXPECT_TRUE(r.passed()) << name << "\n" << r.to_text();
  }
}

TEST(WhSuites, Joins) {
  const auto r = join_oracle_check(*qlo("free2"), 5);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(join_oracle_check(*qlo("z2n2"), 3).passed());
}

TEST(WhSuites, Full) {
  for (const char* name : {"z1n1", "z2n2", "free2"}) EXPECT_TRUE(wh_suite(qlo(name), 3).passed()) << name;
}

TEST(WhSyntax, RoundTripAndErrors) {
  const auto z = qlo("z2n2");
  const auto x = wh::parse("W[1,0]*W[0,1]^", z);
  EXPECT_EQ(wh::format(x), "W[1,0]*W[0,1]^");
  EXPECT_THROW(wh::term(z, {-1, 0}, {0, 0}), PreconditionError);
  EXPECT_THROW(wh::parse("W[1,0", z), std::exception);
}
