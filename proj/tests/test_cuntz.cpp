#include <gtest/gtest.h>

#include <random>

#include "crossprod/cuntz.hpp"

using namespace crossprod;

namespace {

const auto T2 = CuntzSignature::toeplitz(2);

CuntzElement t(Multiindex mu, Multiindex nu, const CuntzSignature& sig = T2) { return cuntz::term(sig, mu, nu); }

Multiindex random_index(int n, int maxLen, std::mt19937_64& rng, const CuntzSignature& sig) {
  std::uniform_int_distribution<int> len(0, maxLen), letter(1, n);
  for (;;) {
    Multiindex m(static_cast<std::size_t>(len(rng)));
    for (auto& x : m) x = letter(rng);
    if (!sig.is_ck() || ck_admissible(m, sig.ck)) return m;
  }
}

CuntzElement random_element(const CuntzSignature& sig, int maxLen, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CuntzElement x = cuntz::zero(sig);
  for (int k = 0; k < 3; ++k)
    x = cuntz::add(x, cuntz::term(sig, random_index(sig.n, maxLen, rng, sig), random_index(sig.n, maxLen, rng, sig),
                                  Complex(g(rng), g(rng))));
  return x;
}

}  // namespace

TEST(CuntzMultiply, NestedProjections) { EXPECT_TRUE(cuntz::equal(cuntz::multiply(t({1}, {1}), t({1, 2}, {1, 2})), t({1, 2}, {1, 2}))); }

TEST(CuntzMultiply, OrthogonalProjections) { EXPECT_TRUE(cuntz::is_zero(cuntz::multiply(t({1}, {1}), t({2}, {2})))); }

TEST(CuntzMultiply, IsometryRelation) { EXPECT_TRUE(cuntz::equal(cuntz::multiply(t({}, {1}), t({1}, {})), cuntz::unit(T2))); }

TEST(CuntzMultiply, OrthogonalRanges) { EXPECT_TRUE(cuntz::is_zero(cuntz::multiply(t({}, {1}), t({2}, {})))); }

TEST(CuntzMultiply, PropertyAssociative) {
  std::mt19937_64 rng(31);
  for (const auto& sig : {T2, CuntzSignature::toeplitz(3), CuntzSignature::toeplitz_ck({{1, 1}, {1, 0}})})
    for (int k = 0; k < 100; ++k) {
      const auto x = random_element(sig, 3, rng), y = random_element(sig, 3, rng), z = random_element(sig, 3, rng);
      EXPECT_TRUE(cuntz::equal(cuntz::multiply(cuntz::multiply(x, y), z), cuntz::multiply(x, cuntz::multiply(y, z)), 1e-9));
    }
}

TEST(CuntzMultiply, PropertyAdjointAntiMultiplicative) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 100; ++k) {
    const auto x = random_element(T2, 3, rng), y = random_element(T2, 3, rng);
    EXPECT_TRUE(cuntz::equal(cuntz::adjoint(cuntz::multiply(x, y)),
                             cuntz::multiply(cuntz::adjoint(y), cuntz::adjoint(x)), 1e-9));
  }
}

TEST(CuntzMultiply, FockMatrixOracle) {
  // products agree with matrix products on Fock vectors short enough to avoid truncation
  constexpr int depth = 7, len = 2;
  std::mt19937_64 rng(33);
  for (const auto& sig : {T2, CuntzSignature::toeplitz(1), CuntzSignature::toeplitz_ck({{1, 1}, {1, 0}})}) {
    const auto basis = cuntz::fock_basis(sig, depth);
    for (int k = 0; k < 40; ++k) {
      const auto x = random_element(sig, len, rng), y = random_element(sig, len, rng);
      const ComplexMatrix lhs = cuntz::fock_matrix(cuntz::multiply(x, y), depth);
      const ComplexMatrix rhs = cuntz::fock_matrix(x, depth) * cuntz::fock_matrix(y, depth);
      for (std::size_t c = 0; c < basis.size(); ++c) {
        if (static_cast<int>(basis[c].size()) > depth - 2 * len) continue;
        EXPECT_LE((lhs.col(static_cast<Eigen::Index>(c)) - rhs.col(static_cast<Eigen::Index>(c))).cwiseAbs().maxCoeff(), 1e-9);
      }
    }
  }
}

TEST(CuntzDegree, Examples) {
  EXPECT_EQ(cuntz_degree({{1, 2}, {2}}, 2), make_word({1}, 2));
  EXPECT_TRUE(cuntz_degree({{2, 1}, {2, 1}}, 2).is_identity());
  EXPECT_EQ(cuntz_degree({{1}, {}}, 2), make_word({1}, 2));
}

TEST(CuntzDegree, PropertyMultiplicative) {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 300; ++k) {
    const CuntzTerm a{random_index(2, 3, rng, T2), random_index(2, 3, rng, T2)};
    const CuntzTerm b{random_index(2, 3, rng, T2), random_index(2, 3, rng, T2)};
    const auto expect = word_multiply(cuntz_degree(a, 2), cuntz_degree(b, 2)).word;
    for (const auto& [term, c] : cuntz::multiply_terms(T2, a, b).terms) EXPECT_EQ(cuntz_degree(term, 2), expect);
  }
}

TEST(SpectralBasis, Counts) {
  EXPECT_EQ(cuntz_spectral_basis(2, make_word({}, 2), 1).size(), 3u);
  EXPECT_EQ(cuntz_spectral_basis(2, make_word({1}, 2), 2).size(), 3u);
  EXPECT_TRUE(cuntz_spectral_basis(2, make_word({1, 2}, 2), 1).empty());
}

TEST(SpectralBasis, EnumerationOracle) {
  // count (mu, nu) pairs of the right degree directly
  for (int N = 1; N <= 3; ++N)
    for (const auto& s : enumerate_words(2, 2)) {
      std::size_t count = 0;
      for (const auto& mu : enumerate_words(2, N))
        for (const auto& nu : enumerate_words(2, N)) {
          bool pos = true;
          for (int x : mu.letters) pos = pos && x > 0;
          for (int x : nu.letters) pos = pos && x > 0;
          if (pos && word_multiply(mu, word_inverse(nu)).word == s) ++count;
        }
      EXPECT_EQ(cuntz_spectral_basis(2, s, N).size(), count) << format_word(s) << " N=" << N;
    }
}

TEST(CkAdmissible, Examples) {
  EXPECT_TRUE(ck_admissible({1, 2, 2, 1}, {{1, 1}, {1, 1}}));
  EXPECT_FALSE(ck_admissible({1, 2}, {{1, 0}, {0, 1}}));
  EXPECT_TRUE(ck_admissible({2, 1, 1}, {{1, 1}, {1, 0}}));
  EXPECT_FALSE(ck_admissible({2, 2}, {{1, 1}, {1, 0}}));
}

TEST(CuntzSyntax, RoundTrip) {
  std::mt19937_64 rng(35);
  for (int k = 0; k < 50; ++k) {
    const auto x = random_element(T2, 3, rng);
    for (const auto& [term, c] : x.terms) {
      (void)c;
      EXPECT_TRUE(cuntz::equal(cuntz::parse(cuntz::format_term(term), T2), cuntz::term(T2, term.mu, term.nu)));
    }
  }
}

TEST(CuntzSyntax, CkRelation) {
  const auto sig = CuntzSignature::toeplitz_ck({{1, 1}, {1, 0}});
  EXPECT_EQ(cuntz::format(cuntz::parse("s[2]^*s[2]", sig)), "s[] + (-1+0i)*s[2]*s[2]^");
}

TEST(CuntzSyntax, Errors) {
  EXPECT_THROW(cuntz::parse("s[3]", T2), std::exception);
  EXPECT_THROW(cuntz::parse("s[1", T2), std::exception);
  EXPECT_THROW(cuntz::term(CuntzSignature::toeplitz_ck({{1, 1}, {1, 0}}), {2, 2}, {}), PreconditionError);
}

TEST(CuntzSuites, ProjectionTable) {
  const auto r = projection_product_check(2, 3);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(CuntzSuites, CharacterizationTwo) {
  const auto r = cuntz_characterization_check(2, 3);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.find("B_mu = s_mu B^delta")->verdict, Verdict::Pass);
}

TEST(CuntzSuites, CharacterizationToeplitz) { EXPECT_TRUE(cuntz_characterization_check(1, 3).passed()); }

TEST(CuntzSuites, GaugeDimensions) {
  const auto g = gauge_nonexample_check(2, 2);
  EXPECT_TRUE(g.injective);
  EXPECT_EQ(g.degreeOneDim, 2 * g.coreDim);
  EXPECT_EQ(g.coreDim, 5u);
  EXPECT_EQ(g.degreeOneDim, 10u);
}

TEST(CuntzSuites, ElementaryDuality) {
  const CuntzGradedModel model(2, 3, 3);
  const auto r = graded::elementary_duality_check(model, model.generator_certificates());
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(CuntzSuites, DualityFailsWithoutGeneratorDegree) {
  CuntzGradedModel model(2, 2, 3);
  model.drop_degree(*model.group().find(make_word({1}, 2)));
  EXPECT_FALSE(graded::elementary_duality_check(model, model.generator_certificates()).passed());
}
