#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qscov/groebner.hpp"

using namespace qscov;

namespace {

RationalPolynomial P(std::size_t n, const std::string& s) { return parse_polynomial<Rational>(n, s); }

GroebnerBasis basis_of(std::size_t n, unsigned bound, std::initializer_list<const char*> polys) {
  GroebnerBasis b{n, {}, bound, false};
  for (const char* s : polys) b.generators.push_back(P(n, s));
  return b;
}

std::vector<std::string> texts(const GroebnerBasis& b) {
  std::vector<std::string> out;
  for (const auto& g : b.generators) out.push_back(to_string(g));
  return out;
}

}  // namespace

TEST(NormalForm, Examples) {
  auto b = basis_of(2, 4, {"x1 + x2", "x2^2"});
  EXPECT_TRUE(normal_form(P(2, "x1^2"), b).is_zero());
  EXPECT_EQ(normal_form(P(2, "x2"), b), P(2, "x2"));
  EXPECT_TRUE(normal_form(P(2, "x1 + x2"), b).is_zero());
  EXPECT_EQ(normal_form(P(2, "3*x1 + 1"), b), P(2, "-3*x2 + 1"));
  EXPECT_THROW(normal_form(P(2, "x1^5"), b), std::domain_error);
  EXPECT_THROW(normal_form(P(3, "x1"), b), std::domain_error);
}

TEST(NormalForm, RemainderIsIrreducibleAndDifferenceInIdeal) {
  auto b = buchberger(quasi_invariant_generators(3, 2, 9), 9);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    RationalPolynomial p(3);
    for (int t = 0; t < 5; ++t) {
      ExponentVector v(3);
      for (auto i = 0; i < 3; ++i) v[i] = rng() % 4;
      p.add_term(v, Rational(static_cast<int>(rng() % 9) - 4));
    }
    auto r = normal_form(p, b);
    for (const auto& [e, c] : r.terms())
      for (const auto& lm : b.leading_monomials()) EXPECT_FALSE(lm.divides(e));
    EXPECT_TRUE(normal_form(p - r, b).is_zero());
  }
}

TEST(SPolynomial, Examples) {
  EXPECT_EQ(s_polynomial(P(2, "x1 + x2"), P(2, "x2^2")), P(2, "x2^3"));
  auto f = P(3, "2*x1*x2 - x3^2");
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  auto coprime = basis_of(2, 4, {"x1^2", "x2^2"});
  EXPECT_TRUE(normal_form(s_polynomial(P(2, "x1^2"), P(2, "x2^2")), coprime).is_zero());
  EXPECT_THROW(s_polynomial(RationalPolynomial(2), P(2, "x1")), std::domain_error);
}

TEST(SPolynomial, LeadingTermsCancel) {
  auto f = P(3, "3*x1^2*x2 + x3^3");
  auto g = P(3, "-2*x1*x2^2 + x2*x3^2");
  auto s = s_polynomial(f, g);
  EXPECT_EQ(s.coefficient({2, 2, 0}), 0);
}

TEST(Buchberger, Examples) {
  EXPECT_EQ(texts(buchberger(quasi_invariant_generators(1, 1, 2), 2)), (std::vector<std::string>{"x1"}));
  EXPECT_EQ(texts(buchberger(quasi_invariant_generators(2, 1, 4), 4)), (std::vector<std::string>{"x1 + x2", "x2^2"}));
  EXPECT_EQ(texts(buchberger(quasi_invariant_generators(2, 2, 8), 8)),
            (std::vector<std::string>{"x1^2 + x2^2", "x2^4"}));
  EXPECT_THROW(buchberger({P(2, "x1 + 1")}, 4), std::domain_error);
  EXPECT_THROW(buchberger({P(2, "x1^5")}, 4), std::domain_error);
  EXPECT_THROW(buchberger({}, 4), std::domain_error);
}

TEST(Buchberger, OutputSatisfiesCriterionAndIsReduced) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 3; ++m) {
      auto b = quasi_invariant_ideal_basis(n, m);
      EXPECT_TRUE(b.reduced);
      EXPECT_TRUE(satisfies_buchberger_criterion(b)) << n << " " << m;
      auto lms = b.leading_monomials();
      for (std::size_t i = 0; i < b.generators.size(); ++i) {
        EXPECT_EQ(b.generators[i].leading_coefficient(), 1);
        EXPECT_TRUE(b.generators[i].is_homogeneous());
        for (const auto& [e, c] : b.generators[i].terms())
          for (std::size_t j = 0; j < lms.size(); ++j)
            if (j != i) EXPECT_FALSE(lms[j].divides(e));
        if (i) EXPECT_TRUE(lex_compare(lms[i - 1], lms[i]) > 0);
      }
    }
}

TEST(Buchberger, ReducedBasisIgnoresInputOrderAndPairSelection) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (unsigned m = 1; m <= 2; ++m) {
      unsigned bound = default_degree_bound(n, m);
      auto gens = quasi_invariant_generators(n, m, bound);
      auto reference = buchberger(gens, bound);
      std::mt19937 rng(static_cast<unsigned>(100 * n + m));
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::shuffle(gens.begin(), gens.end(), rng);
        // A different presentation of the same ideal: add combinations of generators.
        auto extended = gens;
        extended.push_back(gens[0] * Rational(3));
        BuchbergerOptions opt;
        opt.shuffle_seed = seed;
        EXPECT_EQ(buchberger(extended, bound, opt), reference) << n << " " << m << " seed " << seed;
      }
    }
}

TEST(ReduceBasis, Examples) {
  auto r = reduce_basis(basis_of(2, 4, {"x1^2 + x2^2", "x1 + x2", "x1*x2", "x2^2"}));
  EXPECT_EQ(texts(r), (std::vector<std::string>{"x1 + x2", "x2^2"}));
  EXPECT_TRUE(r.reduced);
  EXPECT_EQ(reduce_basis(r), r);
  EXPECT_EQ(texts(reduce_basis(basis_of(1, 2, {"x1", "x1^2"}))), (std::vector<std::string>{"x1"}));
  EXPECT_EQ(texts(reduce_basis(basis_of(2, 4, {"2*x1 + 4*x2", "3*x2^2"}))),
            (std::vector<std::string>{"x1 + 2*x2", "x2^2"}));
}

TEST(StandardMonomials, Examples) {
  auto s = standard_monomials(basis_of(2, 4, {"x1 + x2", "x2^2"}), 3);
  EXPECT_EQ(s.monomials, (std::vector<ExponentVector>{{0, 0}, {0, 1}}));
  EXPECT_TRUE(s.complete);

  auto b22 = quasi_invariant_ideal_basis(2, 2, 8);
  auto s22 = standard_monomials(b22, 5);
  EXPECT_EQ(s22.monomials, basis_Bnm(2, 2));
  EXPECT_TRUE(s22.complete);

  GroebnerBasis empty{1, {}, 1, true};
  auto s1 = standard_monomials(empty, 1);
  EXPECT_EQ(s1.monomials, (std::vector<ExponentVector>{{0}, {1}}));
  EXPECT_FALSE(s1.complete);

  EXPECT_THROW(standard_monomials(b22, 9), std::domain_error);
}

TEST(StandardMonomials, DivisionClosed) {
  auto b = quasi_invariant_ideal_basis(3, 2);
  auto s = standard_monomials(b, b.degree_bound);
  std::set<std::vector<unsigned>> members;
  for (const auto& v : s.monomials) members.insert(v.entries());
  for (const auto& v : s.monomials)
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i]) continue;
      auto w = v.entries();
      --w[i];
      EXPECT_TRUE(members.count(w)) << to_string(v);
    }
}

TEST(SubstituteBasisPower, Examples) {
  GroebnerBasis b{2, {P(2, "x1 + x2"), P(2, "x2^2")}, 4, true};
  EXPECT_EQ(texts(substitute_basis_power(b, 2)), (std::vector<std::string>{"x1^2 + x2^2", "x2^4"}));
  EXPECT_EQ(substitute_basis_power(b, 2).degree_bound, 8u);
  EXPECT_EQ(substitute_basis_power(b, 1), b);
  GroebnerBasis x1{1, {P(1, "x1")}, 1, true};
  EXPECT_EQ(texts(substitute_basis_power(x1, 3)), (std::vector<std::string>{"x1^3"}));
  GroebnerBasis unreduced{1, {P(1, "x1")}, 1, false};
  EXPECT_THROW(substitute_basis_power(unreduced, 2), std::domain_error);
}

TEST(SubstituteBasisPower, EqualsDirectComputation) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 3; ++m) {
      auto base = quasi_invariant_ideal_basis(n, 1);
      auto substituted = substitute_basis_power(base, m);
      auto direct = quasi_invariant_ideal_basis(n, m);
      EXPECT_EQ(substituted.generators, direct.generators) << n << " " << m;
    }
}

TEST(QuasiInvariantIdeal, LeadingMonomialsAreScaledMinimalTransdiagonals) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 3; ++m) {
      auto b = quasi_invariant_ideal_basis(n, m);
      std::vector<ExponentVector> expect;
      for (const auto& e : minimal_transdiagonal(n, b.degree_bound / m)) expect.push_back(m * e);
      EXPECT_EQ(b.leading_monomials(), expect) << n << " " << m;
    }
}

TEST(QuasiInvariantIdeal, StandardMonomialsAreBnm) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 3; ++m) {
      auto b = quasi_invariant_ideal_basis(n, m);
      auto s = standard_monomials(b, b.degree_bound);
      EXPECT_TRUE(s.complete);
      EXPECT_EQ(s.monomials, basis_Bnm(n, m)) << n << " " << m;
      EXPECT_EQ(s.monomials.size(), oracle::ipow(m, n) * catalan(static_cast<unsigned>(n)));
    }
}

TEST(QuasiInvariantIdeal, StableUnderLargerTruncation) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 3; ++m) {
      unsigned bound = default_degree_bound(n, m);
      auto a = quasi_invariant_ideal_basis(n, m, bound);
      auto b = quasi_invariant_ideal_basis(n, m, bound + m);
      EXPECT_EQ(standard_monomials(a, bound).monomials, standard_monomials(b, bound + m).monomials);
      EXPECT_EQ(a.generators, b.generators);
    }
}

TEST(ClassicalIdeal, QuotientDimensionIsGroupOrder) {
  for (auto [n, m] : std::vector<std::pair<std::size_t, unsigned>>{{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    auto b = classical_invariant_ideal_basis(n, m);
    auto s = standard_monomials(b, b.degree_bound);
    EXPECT_TRUE(s.complete);
    EXPECT_EQ(s.monomials.size(), oracle::ipow(m, static_cast<unsigned>(n)) * oracle::factorial(static_cast<unsigned>(n)));
  }
}

TEST(Buchberger, TruncationDropsHighPairs) {
  BuchbergerStats stats;
  auto b = buchberger({P(2, "x1^2 - x2^2"), P(2, "x1*x2")}, 2, {}, &stats);
  EXPECT_EQ(b.degree_bound, 2u);
  EXPECT_GT(stats.pairs_beyond_bound, 0u);
  auto full = buchberger({P(2, "x1^2 - x2^2"), P(2, "x1*x2")}, 4);
  EXPECT_GT(full.generators.size(), b.generators.size());
  EXPECT_EQ(texts(full), (std::vector<std::string>{"x1^2 - x2^2", "x1*x2", "x2^3"}));
}
